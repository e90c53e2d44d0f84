#include "echlab/integer.hpp"

#include <limits>
#include <stdexcept>

namespace echlab {

Integer isqrt(const Integer& n) {
  if (sgn(n) < 0) throw std::domain_error("isqrt of negative integer");
  Integer root;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  return root;
}

bool is_perfect_square(const Integer& n) {
  return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

Integer floor_div(const Integer& a, const Integer& b) {
  if (sgn(b) == 0) throw std::domain_error("division by zero");
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer ceil_div(const Integer& a, const Integer& b) {
  if (sgn(b) == 0) throw std::domain_error("division by zero");
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer floor(const Rational& x) { return floor_div(x.get_num(), x.get_den()); }

Integer ceil(const Rational& x) { return ceil_div(x.get_num(), x.get_den()); }

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Integer floor_quadratic(const Integer& a, const Integer& b, const Integer& d,
                        const Integer& r) {
  if (sgn(r) == 0) throw std::domain_error("division by zero");
  if (sgn(d) < 0) throw std::domain_error("negative radicand");
  Integer num_a = a, num_b = b, den = r;
  if (sgn(den) < 0) {
    num_a = -num_a;
    num_b = -num_b;
    den = -den;
  }
  if (sgn(num_b) == 0 || sgn(d) == 0) return floor_div(num_a, den);

  // b*sqrt(d) = sign(b) * sqrt(b^2 d); with s = isqrt(b^2 d) the radical lies
  // strictly inside (s, s+1) unless b^2 d is a perfect square, and no integer
  // lies strictly between a + s and a + s + 1.
  const Integer radicand = num_b * num_b * d;
  const Integer s = isqrt(radicand);
  if (s * s == radicand) {
    return floor_div(sgn(num_b) > 0 ? Integer(num_a + s) : Integer(num_a - s), den);
  }
  if (sgn(num_b) > 0) return floor_div(num_a + s, den);
  return floor_div(num_a - s - 1, den);
}

int sign_quadratic(const Integer& a, const Integer& b, const Integer& d) {
  const int sa = sgn(a);
  const int sb = sgn(d) == 0 ? 0 : sgn(b);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  const Integer lhs = a * a;
  const Integer rhs = b * b * d;
  if (lhs > rhs) return sa;
  if (lhs < rhs) return sb;
  return 0;
}

std::pair<Integer, Integer> split_square_factor(const Integer& n) {
  if (sgn(n) <= 0) throw std::domain_error("split_square_factor expects n >= 1");
  Integer rest = n;
  Integer square_root = 1;
  Integer free_part = 1;
  for (Integer p = 2; p * p <= rest; ++p) {
    unsigned multiplicity = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
      rest /= p;
      ++multiplicity;
    }
    for (unsigned i = 0; i + 1 < multiplicity; i += 2) square_root *= p;
    if (multiplicity % 2 == 1) free_part *= p;
  }
  free_part *= rest;
  return {square_root, free_part};
}

bool fits_int64(const Integer& a) {
  static_assert(sizeof(long) == sizeof(std::int64_t));
  return a.fits_slong_p();
}

std::int64_t to_int64(const Integer& a) {
  if (!fits_int64(a)) throw std::overflow_error("integer does not fit in 64 bits: " + a.get_str());
  return a.get_si();
}

std::string to_string(const Rational& a) {
  if (a.get_den() == 1) return a.get_num().get_str();
  return a.get_num().get_str() + "/" + a.get_den().get_str();
}

}  // namespace echlab
