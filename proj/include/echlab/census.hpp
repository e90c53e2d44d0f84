#pragma once

// Enumeration of nullhomologous ECH generators by index, index spectra,
// growth statistics and the ellipsoid lattice-triangle check.

#include "echlab/ech_index.hpp"
#include "echlab/exact_real.hpp"
#include "echlab/orbit_model.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace echlab {

struct CensusEntry {
  Generator generator;
  Integer index;

  friend bool operator==(const CensusEntry&, const CensusEntry&) = default;
};

enum class Completeness {
  /// Every generator with I <= cutoff is present (certified search radius).
  certified,
  /// Complete only inside the user-supplied multiplicity box.
  box_relative,
};

struct CensusResult {
  std::int64_t cutoff = 0;
  /// Sorted by index, then lexicographically by multiplicity vector.
  std::vector<CensusEntry> entries;
  /// (j, N(j)) at each distinct index j, where N(j) = #{entries with I <= j}.
  std::vector<std::pair<Integer, std::size_t>> histogram;
  Integer lattice_index = 1;
  Completeness completeness = Completeness::certified;
  /// Total-multiplicity radius searched (certified mode) or the box.
  std::optional<std::int64_t> search_radius;
  std::optional<std::vector<std::int64_t>> box;

  /// N(k): number of entries with index <= k.
  std::size_t count_up_to(const Integer& k) const;

  friend bool operator==(const CensusResult&, const CensusResult&) = default;
};

struct BoundStrategy {
  /// Per-orbit maximal multiplicity. When absent, a Qbar quadrant-positivity
  /// certificate is required and the search radius is derived from it.
  std::optional<std::vector<std::int64_t>> box;
};

/// Smallest R such that every generator with sum m_i > R has I > imax. Throws
/// std::invalid_argument("no positivity certificate") when Qbar is not
/// certified positive on the quadrant.
std::int64_t certified_search_radius(const OrbitSystem& system, std::int64_t imax);

/// All nullhomologous generators with I <= imax. Requires an all-elliptic
/// system. Without a box the enumeration refuses (std::invalid_argument)
/// unless Qbar is certified positive.
CensusResult enumerate_generators(const OrbitSystem& system, std::int64_t imax, const BoundStrategy& bounds = {});

/// Sorted multiset of indices <= imax.
std::vector<Integer> spectrum(const OrbitSystem& system, std::int64_t imax);

struct GrowthFit {
  /// Least-squares slope of log N(k) against log k over the upper half of the samples.
  double exponent = 0.0;
  double intercept = 0.0;
  double max_residual = 0.0;
  std::vector<std::pair<std::int64_t, std::size_t>> samples;

  friend bool operator==(const GrowthFit&, const GrowthFit&) = default;
};

/// Throws std::invalid_argument with fewer than four samples.
GrowthFit growth_exponent(const OrbitSystem& system, std::vector<std::int64_t> k_samples);
/// Fit of precomputed (k, N(k)) pairs; same conventions as growth_exponent.
GrowthFit fit_growth(std::vector<std::pair<std::int64_t, std::size_t>> samples);

/// Lattice points (x, y), x, y >= 0, with phi1 x + y <= phi1 m1 + m2.
Integer triangle_lattice_count(const ExactReal& phi1, std::int64_t m1, std::int64_t m2);

/// eta_1 = eta_2 = Q_12 = 1, phi_2 = 1 / phi_1.
OrbitSystem ellipsoid_system(const ExactReal& phi1);

struct EllipsoidVerification {
  bool pass = false;
  std::size_t generators = 0;
  std::optional<std::string> first_discrepancy;

  friend bool operator==(const EllipsoidVerification&, const EllipsoidVerification&) = default;
};

/// Checks that the census up to imax has exactly one generator of each even
/// index 0, 2, ..., and that I/2 equals the triangle lattice count minus one
/// for every generator. Rational or nonpositive phi1 throws std::invalid_argument.
EllipsoidVerification ellipsoid_verify(const ExactReal& phi1, std::int64_t imax);

struct ShellMinimum {
  std::int64_t radius = 0;
  std::optional<Integer> min_index;
};

/// Minimum index over nullhomologous generators with ceil(|m|) == radius.
std::vector<ShellMinimum> min_index_on_shells(const OrbitSystem& system, const std::vector<std::int64_t>& radii);

struct QuadraticLowerFit {
  double c1 = 0.0;
  double c2 = 0.0;
};

/// Least-squares fit of min I ~ c1 radius^2 - c2.
QuadraticLowerFit fit_quadratic_lower_bound(const std::vector<ShellMinimum>& shells);

}  // namespace echlab
