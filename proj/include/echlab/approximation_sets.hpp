#pragma once

// S_theta: the denominators q at which theta is better approximated from
// above than by any smaller denominator, i.e.
//   ceil(q' theta) / q' > ceil(q theta) / q   for all q' in {1, ..., q - 1}.
// These are the admissible end multiplicities of U-map curves at an elliptic
// orbit with monodromy angle theta.

#include "echlab/ech_index.hpp"
#include "echlab/exact_real.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace echlab {

/// Membership by direct evaluation of the definition. Rational theta is
/// rejected once q reaches its denominator (std::invalid_argument).
bool in_s_theta(const ExactReal& theta, std::int64_t q);

/// Members of S_theta in [1, limit], ascending; one pass with a running
/// minimum of ceil(q theta) / q.
std::vector<std::int64_t> s_theta_up_to(const ExactReal& theta, std::int64_t limit);

/// The semiconvergents of theta lying above theta with denominator <= limit,
/// in decreasing order, built from the continued fraction. Their denominators
/// coincide with s_theta_up_to. Rational theta throws std::invalid_argument.
std::vector<Rational> semiconvergents_above(const ExactReal& theta, std::int64_t limit);

struct SThetaProfile {
  ExactReal theta;
  std::int64_t limit = 0;
  std::vector<std::int64_t> members;
  /// (n, |S_theta cap [1, n]| / n) at the sampled n.
  std::vector<std::pair<std::int64_t, Rational>> density_curve;
};

/// Exact densities at `samples` evenly spaced points of [1, limit] (the last
/// sample is always `limit`).
SThetaProfile density_profile(const ExactReal& theta, std::int64_t limit, std::int64_t samples);

/// Positive end of multiplicity m requires m in S_{-theta}; negative end
/// requires m in S_theta.
bool admissible_end_multiplicity(const ExactReal& theta, std::int64_t m, EndSign sign);

}  // namespace echlab
