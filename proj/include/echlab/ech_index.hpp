#pragma once

// Absolute ECH index I, the J0 index, the mod 2 grading, the quadratic form
// Qbar and the per-curve bounds for U-map curves.

#include "echlab/exact_real.hpp"
#include "echlab/orbit_model.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace echlab {

/// CZ_tau(gamma^k) = 2 floor(k theta) + 1.
Integer conley_zehnder(const ExactReal& theta, std::int64_t k);

/// Integer interval [lo, hi].
struct IndexEnvelope {
  Integer lo;
  Integer hi;

  bool contains(const Integer& value) const { return lo <= value && value <= hi; }
  friend bool operator==(const IndexEnvelope&, const IndexEnvelope&) = default;
};

struct IndexReport {
  Generator generator;
  /// Unset when the generator touches a hyperbolic orbit.
  std::optional<Integer> ech;
  std::optional<Integer> j0;
  int mod2 = 0;
  std::optional<SurdSum> qbar;
  std::optional<IndexEnvelope> envelope;

  friend bool operator==(const IndexReport&, const IndexReport&) = default;
};

/// Evaluates index formulas for one orbit system. The prefix sums
/// sum_{k<=m} floor(k phi_i) are tabulated up to `table_size` at construction
/// and computed directly beyond it; the evaluator is immutable afterwards.
class IndexEvaluator {
 public:
  explicit IndexEvaluator(OrbitSystem system, std::int64_t table_size = 64);

  const OrbitSystem& system() const noexcept { return system_; }
  /// Throws std::invalid_argument when some orbit class is not torsion.
  const NullhomologousLattice& lattice() const;
  bool is_nullhomologous(const Generator& g) const;

  /// I(alpha) = 2 [sum m_i eta_i + sum_{i<j} m_i m_j Q_ij + sum_i sum_{k<=m_i} floor(k phi_i)].
  Integer ech_index(const Generator& g) const;
  /// J0(alpha) = 2 [sum m_i (1 - eta_i) + sum_{i<j} m_i m_j Q_ij
  ///               + sum_i sum_{k<m_i} floor(k phi_i)] - #{i : m_i != 0}.
  Integer j0_index(const Generator& g) const;
  /// sum m_i (4 eta_i - 2) + 2 sum floor(m_i phi_i) + #{i : m_i != 0}; equals I - J0.
  Integer identity_residual(const Generator& g) const;
  int mod2_grading(const Generator& g) const;
  SurdSum qbar(std::span<const std::int64_t> m) const;
  SurdSum qbar(std::span<const Rational> m) const;
  IndexEnvelope envelope(const Generator& g) const;
  IndexReport report(const Generator& g) const;

  /// sum_{k=1}^{m} floor(k phi_i).
  Integer floor_sum(std::size_t orbit, std::int64_t m) const;

 private:
  void require_index_domain(const Generator& g) const;

  OrbitSystem system_;
  std::optional<NullhomologousLattice> lattice_;
  std::string lattice_error_;
  std::vector<std::vector<Integer>> floor_sums_;
};

// Convenience wrappers constructing a throwaway evaluator.
Integer ech_index(const OrbitSystem& system, const Generator& g);
Integer j0_index(const OrbitSystem& system, const Generator& g);
Integer index_identity_residual(const OrbitSystem& system, const Generator& g);
int mod2_grading(const OrbitSystem& system, const Generator& g);
SurdSum qbar(const OrbitSystem& system, const Generator& g);
IndexEnvelope index_envelope(const OrbitSystem& system, const Generator& g);

enum class QuadrantVerdict { positive, degenerate_direction, indefinite, unknown };

std::string_view to_string(QuadrantVerdict verdict);

struct QuadrantCertificate {
  QuadrantVerdict verdict = QuadrantVerdict::unknown;
  /// Null vector (-Q12, phi1) in the degenerate two-orbit case.
  std::optional<std::pair<ExactReal, ExactReal>> null_direction;
};

/// Decides whether Qbar is positive on the closed quadrant minus the origin.
/// Exact for n <= 2. For n >= 3 the sufficient criteria "all Q_ij >= 0" or
/// "phi_i > sum_{j != i} |Q_ij|" certify positivity; otherwise `unknown`.
/// Throws std::invalid_argument when a hyperbolic orbit is present.
QuadrantCertificate qbar_quadrant_positive(const OrbitSystem& system);

// ---------------------------------------------------------------------------
// End data and per-curve bounds

enum class EndSign { positive, negative };

struct EndRecord {
  std::size_t orbit = 0;
  std::int64_t multiplicity = 1;
  EndSign sign = EndSign::positive;
  /// Monodromy angle in the trivialization used for `q_tau`; needed only by
  /// intersection_bound.
  std::optional<ExactReal> theta;
};

struct EndData {
  std::vector<EndRecord> ends;
  /// Orbits whose trivial cylinder R x gamma lies in the image of C_0.
  std::vector<std::size_t> trivial_cylinders;
  Integer q_tau = 0;

  bool has_trivial_cylinder(std::size_t orbit) const;
  std::int64_t end_count(std::size_t orbit, EndSign sign) const;
};

/// Q_tau + sum_{P+} k floor(k theta) - sum_{P-} k ceil(k theta). The value is
/// trivialization dependent and must be read in the trivialization of
/// `q_tau`. Throws std::invalid_argument when an end has no theta, when
/// k theta is an integer, or when a multiplicity is not positive.
Integer intersection_bound(const EndData& ends);

/// Largest genus allowed by J0 >= 2g - 2 + sum(2 n^+ + t^+ - 1) + sum(2 n^- + t^- - 1),
/// or nullopt when no genus is allowed.
std::optional<Integer> genus_bound(const Integer& j0, const EndData& ends);

enum class CylinderVerdict { cylinder, not_cylinder, infeasible };

std::string_view to_string(CylinderVerdict verdict);

struct CylinderReport {
  CylinderVerdict verdict = CylinderVerdict::infeasible;
  std::optional<Integer> genus_bound;
};

/// Two elliptic orbits (indices 0 and 1 of the end data), generators
/// gamma_1^{m_1} gamma_2^{m_2} -> gamma_1^{m'_1} gamma_2^{m'_2} with all four
/// multiplicities nonzero and C_1 having ends at both orbits. Throws
/// std::invalid_argument when those hypotheses fail.
CylinderReport cylinder_criterion(const Integer& j0, const EndData& ends,
                                  std::span<const std::int64_t> m,
                                  std::span<const std::int64_t> m_prime);

}  // namespace echlab
