#include "echlab/approximation_sets.hpp"

#include <algorithm>
#include <stdexcept>

namespace echlab {

namespace {

void require_admissible_theta(const ExactReal& theta, std::int64_t q) {
  if (q < 1) throw std::invalid_argument("S_theta: denominators start at 1");
  if (theta.is_rational() && Integer(static_cast<long>(q)) >= theta.r()) {
    throw std::invalid_argument("S_theta: rational theta " + theta.to_string() +
                                " is degenerate at denominator " + std::to_string(q));
  }
}

}  // namespace

bool in_s_theta(const ExactReal& theta, std::int64_t q) {
  require_admissible_theta(theta, q);
  const Integer c_q = theta.ceil_mult(q);
  const Integer big_q = static_cast<long>(q);
  for (std::int64_t smaller = 1; smaller < q; ++smaller) {
    // ceil(q' theta) / q' > ceil(q theta) / q, cross-multiplied.
    if (theta.ceil_mult(smaller) * big_q <= c_q * static_cast<long>(smaller)) return false;
  }
  return true;
}

std::vector<std::int64_t> s_theta_up_to(const ExactReal& theta, std::int64_t limit) {
  std::vector<std::int64_t> members;
  if (limit < 1) return members;
  require_admissible_theta(theta, limit);
  members.push_back(1);
  Integer best_num = theta.ceil_mult(1);
  Integer best_den = 1;
  for (std::int64_t q = 2; q <= limit; ++q) {
    const Integer c = theta.ceil_mult(q);
    if (c * best_den < best_num * static_cast<long>(q)) {
      members.push_back(q);
      best_num = c;
      best_den = static_cast<long>(q);
    }
  }
  return members;
}

std::vector<Rational> semiconvergents_above(const ExactReal& theta, std::int64_t limit) {
  if (theta.is_rational())
    throw std::invalid_argument("semiconvergents_above: theta must be irrational, got " + theta.to_string());
  std::vector<Rational> out;
  if (limit < 1) return out;
  const Integer big_limit = static_cast<long>(limit);

  std::size_t terms = 32;
  while (true) {
    const ContinuedFraction cf = continued_fraction(theta, terms);
    const auto& a = cf.partial_quotients;
    // h[k + 1], k[k + 1] hold p_k, q_k for k = -1, 0, 1, ...
    std::vector<Integer> h{Integer(1)}, den{Integer(0)};
    h.push_back(a[0]);
    den.emplace_back(1);
    for (std::size_t k = 1; k < a.size(); ++k) {
      h.push_back(a[k] * h[k] + h[k - 1]);
      den.push_back(a[k] * den[k] + den[k - 1]);
    }

    out.clear();
    // Fractions above theta: (p_{k-1} + j p_k) / (q_{k-1} + j q_k) for even k,
    // j = 1..a_{k+1}; the last one is the convergent p_{k+1} / q_{k+1}.
    for (std::size_t k = 0; k + 1 < a.size(); k += 2) {
      const Integer& p_prev = h[k];
      const Integer& q_prev = den[k];
      const Integer& p_k = h[k + 1];
      const Integer& q_k = den[k + 1];
      for (Integer j = 1; j <= a[k + 1]; ++j) {
        const Integer q = q_prev + j * q_k;
        if (q > big_limit) return out;
        Rational fraction(Integer(p_prev + j * p_k), q);
        fraction.canonicalize();
        out.push_back(fraction);
      }
    }
    terms *= 2;
  }
}

SThetaProfile density_profile(const ExactReal& theta, std::int64_t limit, std::int64_t samples) {
  if (limit < 1) throw std::invalid_argument("density_profile: limit must be >= 1");
  if (samples < 1) throw std::invalid_argument("density_profile: need at least one sample");
  samples = std::min(samples, limit);
  SThetaProfile profile{theta, limit, s_theta_up_to(theta, limit), {}};
  for (std::int64_t j = 1; j <= samples; ++j) {
    const std::int64_t n = (j * limit + samples - 1) / samples;
    const auto count = std::upper_bound(profile.members.begin(), profile.members.end(), n) - profile.members.begin();
    Rational density(static_cast<long>(count), static_cast<long>(n));
    density.canonicalize();
    profile.density_curve.emplace_back(n, density);
  }
  return profile;
}

bool admissible_end_multiplicity(const ExactReal& theta, std::int64_t m, EndSign sign) {
  return sign == EndSign::positive ? in_s_theta(-theta, m) : in_s_theta(theta, m);
}

}  // namespace echlab
