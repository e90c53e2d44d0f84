#include "echlab/exact_real.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace echlab {

namespace {

std::strong_ordering from_sign(int s) {
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

const Integer& common_radicand(const ExactReal& a, const ExactReal& b) {
  if (a.is_quadratic() && b.is_quadratic() && a.d() != b.d()) {
    throw std::domain_error("mixed quadratic fields: sqrt(" + a.d().get_str() + ") and sqrt(" +
                            b.d().get_str() + ")");
  }
  return a.is_quadratic() ? a.d() : b.d();
}

Integer largest_prime_factor(Integer n) {
  Integer largest = 1;
  for (Integer p = 2; p * p <= n; ++p) {
    if (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      largest = p;
      while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) n /= p;
    }
  }
  if (n > 1) largest = n;
  return largest;
}

}  // namespace

// ---------------------------------------------------------------------------
// ExactReal

ExactReal ExactReal::rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw std::invalid_argument("zero denominator");
  Rational value(num, den);
  value.canonicalize();
  return rational(value);
}

ExactReal ExactReal::rational(const Rational& value) {
  return ExactReal(value.get_num(), Integer(0), value.get_den(), Integer(0));
}

ExactReal ExactReal::quadratic(const Integer& p, const Integer& q, const Integer& r,
                               const Integer& d) {
  if (sgn(r) == 0) throw std::invalid_argument("zero denominator");
  if (sgn(d) < 0) throw std::invalid_argument("negative radicand d");
  if (sgn(q) == 0 || sgn(d) == 0) return rational(p, r);

  auto [root, free_part] = split_square_factor(d);
  Integer new_q = q * root;
  if (free_part == 1) return rational(p + new_q, r);

  Integer new_p = p;
  Integer new_r = r;
  if (sgn(new_r) < 0) {
    new_p = -new_p;
    new_q = -new_q;
    new_r = -new_r;
  }
  const Integer g = gcd(gcd(new_p, new_q), new_r);
  return ExactReal(new_p / g, new_q / g, new_r / g, free_part);
}

Rational ExactReal::rational_value() const {
  if (is_quadratic()) throw std::logic_error("rational_value() of a quadratic irrational");
  return Rational(p_, r_);
}

Integer ExactReal::floor_mult(const Integer& k) const {
  if (is_rational()) return floor_div(k * p_, r_);
  return floor_quadratic(k * p_, k * q_, d_, r_);
}

Integer ExactReal::ceil_mult(const Integer& k) const { return -floor_mult(Integer(-k)); }

bool ExactReal::is_integral_multiple(const Integer& k) const {
  if (sgn(k) == 0) return true;
  if (is_quadratic()) return false;
  const Integer numerator = k * p_;
  return mpz_divisible_p(numerator.get_mpz_t(), r_.get_mpz_t()) != 0;
}

int ExactReal::sign() const { return sign_quadratic(p_, q_, d_); }

ExactReal ExactReal::operator-() const { return ExactReal(-p_, -q_, r_, d_); }

ExactReal operator+(const ExactReal& a, const ExactReal& b) {
  const Integer d = common_radicand(a, b);
  return ExactReal::quadratic(a.p_ * b.r_ + b.p_ * a.r_, a.q_ * b.r_ + b.q_ * a.r_,
                              a.r_ * b.r_, d);
}

ExactReal operator-(const ExactReal& a, const ExactReal& b) { return a + (-b); }

ExactReal operator*(const ExactReal& a, const ExactReal& b) {
  const Integer d = common_radicand(a, b);
  return ExactReal::quadratic(a.p_ * b.p_ + a.q_ * b.q_ * d, a.p_ * b.q_ + a.q_ * b.p_,
                              a.r_ * b.r_, d);
}

ExactReal ExactReal::reciprocal() const {
  if (sign() == 0) throw std::domain_error("reciprocal of zero");
  if (is_rational()) return rational(r_, p_);
  // r / (p + q sqrt d) = r (p - q sqrt d) / (p^2 - q^2 d); the norm is nonzero
  // because d is not a square.
  return quadratic(r_ * p_, -r_ * q_, p_ * p_ - q_ * q_ * d_, d_);
}

std::string ExactReal::to_string() const {
  if (is_rational()) return echlab::to_string(rational_value());
  std::string numerator;
  if (sgn(p_) != 0) numerator = p_.get_str();
  const std::string radical = "sqrt(" + d_.get_str() + ")";
  if (q_ == 1) {
    numerator += (numerator.empty() ? "" : "+") + radical;
  } else if (q_ == -1) {
    numerator += "-" + radical;
  } else {
    numerator += (sgn(q_) > 0 && !numerator.empty() ? "+" : "") + q_.get_str() + "*" + radical;
  }
  if (r_ == 1) return numerator;
  if (sgn(p_) != 0) numerator = "(" + numerator + ")";
  return numerator + "/" + r_.get_str();
}

double ExactReal::approx() const {
  return (p_.get_d() + q_.get_d() * std::sqrt(d_.get_d())) / r_.get_d();
}

std::strong_ordering compare(const ExactReal& x, const ExactReal& y) {
  // Sign of x - y scaled by r_x r_y > 0:  a + b sqrt(u) + c sqrt(v).
  const Integer a = x.p() * y.r() - y.p() * x.r();
  const Integer b = x.q() * y.r();
  const Integer c = -(y.q() * x.r());
  if (x.is_rational() || y.is_rational() || x.d() == y.d()) {
    const Integer& d = x.is_quadratic() ? x.d() : y.d();
    return from_sign(sign_quadratic(a, Integer(b + c), d));
  }
  const Integer& u = x.d();
  const Integer& v = y.d();
  const int s_alpha = sign_quadratic(a, b, u);
  const int s_beta = sgn(c);
  if (s_beta == 0) return from_sign(s_alpha);
  if (s_alpha == 0 || s_alpha == s_beta) return from_sign(s_beta);
  // alpha and beta have opposite signs: compare alpha^2 with beta^2.
  //   alpha^2 - beta^2 = (a^2 + b^2 u - c^2 v) + 2ab sqrt(u)
  const int s_diff = sign_quadratic(Integer(a * a + b * b * u - c * c * v), Integer(2 * a * b), u);
  return from_sign(s_alpha > 0 ? s_diff : -s_diff);
}

// ---------------------------------------------------------------------------
// SurdSum

SurdSum::SurdSum(const Rational& value) { add_term(Integer(1), value); }

SurdSum::SurdSum(const ExactReal& value) {
  add_term(Integer(1), Rational(value.p(), value.r()));
  if (value.is_quadratic()) add_term(value.d(), Rational(value.q(), value.r()));
}

SurdSum SurdSum::term(const Rational& coef, const Integer& radicand) {
  if (sgn(radicand) < 0) throw std::invalid_argument("negative radicand");
  SurdSum out;
  if (sgn(radicand) == 0 || sgn(coef) == 0) return out;
  auto [root, free_part] = split_square_factor(radicand);
  out.add_term(free_part, coef * Rational(root));
  return out;
}

void SurdSum::add_term(const Integer& radicand, const Rational& raw) {
  Rational coef = raw;
  coef.canonicalize();
  if (sgn(coef) == 0) return;
  auto [it, inserted] = terms_.try_emplace(radicand, coef);
  if (!inserted) {
    it->second += coef;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

SurdSum SurdSum::operator-() const {
  SurdSum out = *this;
  for (auto& [radicand, coef] : out.terms_) coef = -coef;
  return out;
}

SurdSum& SurdSum::operator+=(const SurdSum& other) {
  for (const auto& [radicand, coef] : other.terms_) add_term(radicand, coef);
  return *this;
}

SurdSum& SurdSum::operator-=(const SurdSum& other) {
  for (const auto& [radicand, coef] : other.terms_) add_term(radicand, Rational(-coef));
  return *this;
}

SurdSum operator*(const SurdSum& a, const SurdSum& b) {
  SurdSum out;
  for (const auto& [s1, c1] : a.terms_) {
    for (const auto& [s2, c2] : b.terms_) {
      // sqrt(s1) sqrt(s2) = g sqrt((s1/g)(s2/g)) for squarefree s1, s2.
      const Integer g = gcd(s1, s2);
      out.add_term(Integer((s1 / g) * (s2 / g)), Rational(c1 * c2 * Rational(g)));
    }
  }
  return out;
}

int SurdSum::sign() const {
  if (terms_.empty()) return 0;
  Integer prime = 1;
  for (const auto& [radicand, coef] : terms_) {
    if (radicand > 1) {
      const Integer candidate = largest_prime_factor(radicand);
      if (candidate > prime) prime = candidate;
    }
  }
  if (prime == 1) return sgn(terms_.begin()->second);

  // this = alpha + beta sqrt(prime), alpha and beta free of sqrt(prime).
  SurdSum alpha;
  SurdSum beta;
  for (const auto& [radicand, coef] : terms_) {
    if (mpz_divisible_p(radicand.get_mpz_t(), prime.get_mpz_t())) {
      beta.add_term(Integer(radicand / prime), coef);
    } else {
      alpha.add_term(radicand, coef);
    }
  }
  const int s_alpha = alpha.sign();
  const int s_beta = beta.sign();
  if (s_beta == 0) return s_alpha;
  if (s_alpha == 0 || s_alpha == s_beta) return s_beta;
  const int s_diff = (alpha * alpha - beta * beta * SurdSum(Rational(prime))).sign();
  return s_alpha > 0 ? s_diff : -s_diff;
}

Integer SurdSum::floor() const {
  // Each term lies in [floor, floor + 1), so the sum lies in [low, low + n).
  Integer low = 0;
  long width = 0;
  for (const auto& [radicand, coef] : terms_) {
    low += floor_quadratic(Integer(0), coef.get_num(), radicand, coef.get_den());
    ++width;
  }
  for (Integer candidate = low + (width > 0 ? width - 1 : 0); candidate > low; --candidate) {
    if ((*this - SurdSum(Rational(candidate))).sign() >= 0) return candidate;
  }
  return low;
}

bool SurdSum::is_integer() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& [radicand, coef] = *terms_.begin();
  return radicand == 1 && coef.get_den() == 1;
}

std::optional<ExactReal> SurdSum::to_exact_real() const {
  Rational rational_part = 0;
  std::optional<std::pair<Integer, Rational>> irrational;
  for (const auto& [radicand, coef] : terms_) {
    if (radicand == 1) {
      rational_part = coef;
    } else if (irrational) {
      return std::nullopt;
    } else {
      irrational = std::make_pair(radicand, coef);
    }
  }
  if (!irrational) return ExactReal::rational(rational_part);
  const Rational& c = irrational->second;
  const Integer den = rational_part.get_den() * c.get_den();
  return ExactReal::quadratic(rational_part.get_num() * c.get_den(),
                              c.get_num() * rational_part.get_den(), den, irrational->first);
}

std::string SurdSum::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [radicand, coef] : terms_) {
    std::string piece = echlab::to_string(coef);
    if (radicand != 1) piece += "*sqrt(" + radicand.get_str() + ")";
    if (!out.empty() && piece.front() != '-') out += "+";
    out += piece;
  }
  return out;
}

double SurdSum::approx() const {
  double total = 0.0;
  for (const auto& [radicand, coef] : terms_) total += coef.get_d() * std::sqrt(radicand.get_d());
  return total;
}

// ---------------------------------------------------------------------------
// Continued fractions

ContinuedFraction continued_fraction(const ExactReal& x, std::size_t count) {
  if (count == 0) throw std::invalid_argument("continued_fraction: count must be >= 1");
  ContinuedFraction out;

  if (x.is_rational()) {
    Integer num = x.p();
    Integer den = x.r();
    while (out.partial_quotients.size() < count) {
      const Integer a = floor_div(num, den);
      out.partial_quotients.push_back(a);
      const Integer rem = num - a * den;
      if (sgn(rem) == 0) {
        out.terminates = true;
        break;
      }
      num = den;
      den = rem;
    }
    return out;
  }

  // Write x = (P + sqrt(D)) / Q with Q | D - P^2.
  Integer P = x.p();
  Integer Q = x.r();
  Integer D = x.q() * x.q() * x.d();
  if (sgn(x.q()) < 0) {
    P = -P;
    Q = -Q;
  }
  {
    const Integer residue = D - P * P;
    if (!mpz_divisible_p(residue.get_mpz_t(), Q.get_mpz_t())) {
      const Integer abs_q = abs(Q);
      P *= abs_q;
      D *= Q * Q;
      Q *= abs_q;
    }
  }

  std::map<std::pair<Integer, Integer>, std::size_t> seen;
  while (out.partial_quotients.size() < count) {
    if (!out.period_start) {
      auto [it, inserted] = seen.try_emplace({P, Q}, out.partial_quotients.size());
      if (!inserted) {
        out.period_start = it->second;
        out.period_length = out.partial_quotients.size() - it->second;
      }
    }
    const Integer a = floor_quadratic(P, Integer(1), D, Q);
    out.partial_quotients.push_back(a);
    P = a * Q - P;
    Q = (D - P * P) / Q;
  }
  return out;
}

std::vector<Rational> convergents(const std::vector<Integer>& partial_quotients) {
  std::vector<Rational> out;
  Integer h_prev = 1, h_prev2 = 0;
  Integer k_prev = 0, k_prev2 = 1;
  for (const Integer& a : partial_quotients) {
    const Integer h = a * h_prev + h_prev2;
    const Integer k = a * k_prev + k_prev2;
    out.emplace_back(h, k);
    out.back().canonicalize();
    h_prev2 = h_prev;
    h_prev = h;
    k_prev2 = k_prev;
    k_prev = k;
  }
  return out;
}

}  // namespace echlab
