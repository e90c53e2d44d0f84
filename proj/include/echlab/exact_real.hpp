#pragma once

// Exact real numbers used for rotation and monodromy data.
//
// ExactReal covers the rationals and the real quadratic irrationals
// (p + q*sqrt(d)) / r. Every floor, ceiling and comparison is decided with
// integer arithmetic; nothing in this header touches floating point except
// the explicit `approx()` helpers meant for display.

#include "echlab/integer.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace echlab {

class ExactReal {
 public:
  /// Zero.
  ExactReal() = default;

  /// num / den, reduced. Throws std::invalid_argument on a zero denominator.
  static ExactReal rational(const Integer& num, const Integer& den = 1);
  static ExactReal rational(const Rational& value);

  /// (p + q*sqrt(d)) / r in canonical form. Square factors of d are pulled
  /// into q; a perfect-square d or q == 0 collapses to the rational variant.
  /// Throws std::invalid_argument when r == 0 or d < 0.
  static ExactReal quadratic(const Integer& p, const Integer& q, const Integer& r,
                             const Integer& d);

  bool is_rational() const noexcept { return sgn(q_) == 0; }
  bool is_quadratic() const noexcept { return !is_rational(); }

  /// Throws std::logic_error for the quadratic variant.
  Rational rational_value() const;

  // Canonical coefficients. For the rational variant q == 0, d == 0 and the
  // value is p / r.
  const Integer& p() const noexcept { return p_; }
  const Integer& q() const noexcept { return q_; }
  const Integer& r() const noexcept { return r_; }
  const Integer& d() const noexcept { return d_; }

  /// floor(k * x), exact for every integer k.
  Integer floor_mult(const Integer& k) const;
  Integer floor_mult(std::int64_t k) const { return floor_mult(Integer(static_cast<long>(k))); }
  /// ceil(k * x), exact for every integer k.
  Integer ceil_mult(const Integer& k) const;
  Integer ceil_mult(std::int64_t k) const { return ceil_mult(Integer(static_cast<long>(k))); }
  Integer floor() const { return floor_mult(Integer(1)); }

  /// True when k * x is an integer.
  bool is_integral_multiple(const Integer& k) const;

  int sign() const;

  ExactReal operator-() const;
  /// Arithmetic is closed inside a single quadratic field Q(sqrt(d)); mixing
  /// two different radicands throws std::domain_error (use SurdSum).
  friend ExactReal operator+(const ExactReal& a, const ExactReal& b);
  friend ExactReal operator-(const ExactReal& a, const ExactReal& b);
  friend ExactReal operator*(const ExactReal& a, const ExactReal& b);
  /// Throws std::domain_error for zero.
  ExactReal reciprocal() const;

  friend bool operator==(const ExactReal& a, const ExactReal& b) = default;

  /// "(p+q*sqrt(d))/r" style rendering; rationals print as "n" or "n/m".
  std::string to_string() const;
  double approx() const;

 private:
  ExactReal(Integer p, Integer q, Integer r, Integer d)
      : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)), d_(std::move(d)) {}

  Integer p_ = 0;
  Integer q_ = 0;
  Integer r_ = 1;
  Integer d_ = 0;
};

/// Exact trichotomy. Numbers from different quadratic fields are compared by
/// repeated squaring with sign tracking.
std::strong_ordering compare(const ExactReal& x, const ExactReal& y);

inline std::strong_ordering operator<=>(const ExactReal& a, const ExactReal& b) {
  return compare(a, b);
}

/// A finite sum  c_0 + sum_s c_s * sqrt(s)  with rational coefficients and
/// distinct squarefree radicands s >= 2. Closed under addition and
/// multiplication, so it holds quadratic forms evaluated on numbers drawn from
/// several quadratic fields. Sign is decided exactly by descending through the
/// tower Q(sqrt(p_1), ..., sqrt(p_k)) one prime at a time.
class SurdSum {
 public:
  SurdSum() = default;
  SurdSum(const Rational& value);  // NOLINT(google-explicit-constructor)
  SurdSum(const ExactReal& value);  // NOLINT(google-explicit-constructor)

  /// coef * sqrt(radicand) for any radicand >= 0 (square factors are pulled out).
  static SurdSum term(const Rational& coef, const Integer& radicand);

  /// Radicand -> coefficient; radicand 1 holds the rational part.
  const std::map<Integer, Rational>& terms() const noexcept { return terms_; }

  int sign() const;
  Integer floor() const;
  bool is_integer() const;
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Value as an ExactReal when at most one radicand is present.
  std::optional<ExactReal> to_exact_real() const;

  SurdSum operator-() const;
  SurdSum& operator+=(const SurdSum& other);
  SurdSum& operator-=(const SurdSum& other);
  friend SurdSum operator+(SurdSum a, const SurdSum& b) { return a += b; }
  friend SurdSum operator-(SurdSum a, const SurdSum& b) { return a -= b; }
  friend SurdSum operator*(const SurdSum& a, const SurdSum& b);

  friend bool operator==(const SurdSum& a, const SurdSum& b) = default;

  std::string to_string() const;
  double approx() const;

 private:
  void add_term(const Integer& radicand, const Rational& coef);

  std::map<Integer, Rational> terms_;
};

inline std::strong_ordering compare(const SurdSum& a, const SurdSum& b) {
  const int s = (a - b).sign();
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

struct ContinuedFraction {
  std::vector<Integer> partial_quotients;
  /// The expansion of a rational terminates; `partial_quotients` is then the
  /// full expansion (possibly shorter than requested).
  bool terminates = false;
  /// For quadratic irrationals, the detected eventually-periodic tail: the
  /// quotients from index `period_start` repeat with length `period_length`.
  std::optional<std::size_t> period_start;
  std::optional<std::size_t> period_length;
};

/// First `count` partial quotients of x. Throws std::invalid_argument when
/// count == 0.
ContinuedFraction continued_fraction(const ExactReal& x, std::size_t count);

/// Convergents p_k / q_k of a list of partial quotients.
std::vector<Rational> convergents(const std::vector<Integer>& partial_quotients);

}  // namespace echlab
