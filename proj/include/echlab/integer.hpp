#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace echlab {

using Integer = mpz_class;
using Rational = mpq_class;

inline int sgn(const Integer& a) { return mpz_sgn(a.get_mpz_t()); }
inline int sgn(const Rational& a) { return mpq_sgn(a.get_mpq_t()); }

/// Floor of the square root; `n` must be nonnegative.
Integer isqrt(const Integer& n);

bool is_perfect_square(const Integer& n);

/// Quotient rounded toward negative infinity. `b` must be nonzero.
Integer floor_div(const Integer& a, const Integer& b);
Integer ceil_div(const Integer& a, const Integer& b);

Integer floor(const Rational& x);
Integer ceil(const Rational& x);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/// Exact floor((a + b*sqrt(d)) / r) for integers with r != 0 and d >= 0.
/// `d` need not be squarefree; perfect squares are handled exactly.
Integer floor_quadratic(const Integer& a, const Integer& b, const Integer& d,
                        const Integer& r);

/// Sign of a + b*sqrt(d), d >= 0.
int sign_quadratic(const Integer& a, const Integer& b, const Integer& d);

/// Writes n = s^2 * f with f squarefree; returns {s, f}. Requires n >= 1.
std::pair<Integer, Integer> split_square_factor(const Integer& n);

bool fits_int64(const Integer& a);
std::int64_t to_int64(const Integer& a);

inline std::string to_string(const Integer& a) { return a.get_str(); }
std::string to_string(const Rational& a);

}  // namespace echlab
