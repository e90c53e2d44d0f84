#pragma once

// Lefschetz zeta product identity for surface maps whose periodic points all
// count with weight +1, and exact periodic-point detection for affine maps of
// the 2-torus.

#include "echlab/exact_real.hpp"
#include "echlab/int_matrix.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace echlab {

struct ZetaInstance {
  int genus = 0;
  /// Induced map on H_1, 2g x 2g.
  IntMatrix A;
  /// Periods p(gamma) of the periodic orbits, each >= 1.
  std::vector<std::int64_t> periods;

  friend bool operator==(const ZetaInstance&, const ZetaInstance&) = default;
};

/// Throws std::invalid_argument unless A is 2g x 2g with det A = +-1 and all
/// periods are positive.
void validate_zeta_instance(const ZetaInstance& instance);

/// L(phi^p) = 2 - tr(A^p). Throws std::invalid_argument for p < 1.
Integer lefschetz_number(const ZetaInstance& instance, std::int64_t p);

/// det(1 - tA) * prod_gamma (1 - t^{p(gamma)}).
IntPolynomial zeta_product(const ZetaInstance& instance);

struct ZetaCheck {
  bool pass = false;
  /// Lowest degree at which the product differs from (1 - t)^2.
  std::optional<std::size_t> first_failing_coefficient;
  /// Smallest p <= N with 2 - tr(A^p) != sum over p(gamma) | p of p(gamma).
  std::optional<std::int64_t> first_failing_period;
  IntPolynomial product;

  friend bool operator==(const ZetaCheck&, const ZetaCheck&) = default;
};

/// Compares the full product with (1 - t)^2 and cross-checks the fixed-point
/// counts for p = 1..degree. Throws std::invalid_argument when degree is below
/// max(2, sum of periods, 2g).
ZetaCheck zeta_identity_check(const ZetaInstance& instance, std::int64_t degree);

struct ZetaSolution {
  int genus = 0;
  /// Present for g = 1, where det(1 - tA) = 1 - tr(A) t + t^2.
  std::optional<Integer> trace;
  std::optional<Integer> det;
  /// Nonincreasing.
  std::vector<std::int64_t> periods;

  friend bool operator==(const ZetaSolution&, const ZetaSolution&) = default;
};

/// Every (genus, A up to (tr, det), period multiset) with g <= g_max and
/// sum of periods <= period_sum_max satisfying the product identity. For g = 1
/// the trace ranges over [-trace_bound, trace_bound] with det A = 1; g >= 2
/// is excluded by degree (det(1 - tA) has degree 2g). Ordered by genus, then
/// trace.
std::vector<ZetaSolution> zeta_solve(int g_max, std::int64_t period_sum_max, std::int64_t trace_bound);

struct AffineTorusMap {
  /// 2 x 2 with det A = 1.
  IntMatrix A;
  std::array<ExactReal, 2> b{ExactReal::rational(Integer(0)), ExactReal::rational(Integer(0))};

  friend bool operator==(const AffineTorusMap&, const AffineTorusMap&) = default;
};

/// Throws std::invalid_argument unless A is 2 x 2 with det A = 1.
void validate_torus_map(const AffineTorusMap& map);

enum class PeriodicKind { none, finite, positive_dimensional };

std::string_view to_string(PeriodicKind kind);

struct PeriodicPoints {
  PeriodicKind kind = PeriodicKind::none;
  /// Number of solutions of phi^p(x) = x on the torus (kind == finite).
  std::optional<Integer> count;

  friend bool operator==(const PeriodicPoints&, const PeriodicPoints&) = default;
};

/// Solutions of (A^p - I) x = -c_p mod Z^2 with c_p = (A^{p-1} + ... + I) b.
/// Throws std::invalid_argument for p < 1.
PeriodicPoints torus_periodic_points(const AffineTorusMap& map, std::int64_t p);

struct TorusOrbitReport {
  std::int64_t max_period = 0;
  std::vector<std::pair<std::int64_t, PeriodicPoints>> table;
  /// Smallest p with a fixed point of phi^p; empty means none up to max_period.
  std::optional<std::int64_t> first_period;

  friend bool operator==(const TorusOrbitReport&, const TorusOrbitReport&) = default;
};

TorusOrbitReport torus_orbit_report(const AffineTorusMap& map, std::int64_t max_period);

}  // namespace echlab
