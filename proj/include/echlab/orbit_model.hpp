#pragma once

// Embedded Reeb orbits, their trivialization-invariant constants, linking
// numbers and first-homology bookkeeping.

#include "echlab/exact_real.hpp"
#include "echlab/int_matrix.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace echlab {

enum class OrbitKind { elliptic, positive_hyperbolic, negative_hyperbolic };

std::string_view to_string(OrbitKind kind);
/// Accepts "elliptic", "positive-hyperbolic", "negative-hyperbolic".
OrbitKind parse_orbit_kind(std::string_view text);

struct Orbit {
  std::string name;
  OrbitKind kind = OrbitKind::elliptic;
  /// eta = (c - Q + 1) / 2; elliptic orbits only.
  std::optional<Rational> eta;
  /// phi = Q + theta; elliptic orbits only.
  std::optional<ExactReal> phi;
  /// Coordinates of [gamma] in H_1 = (+)_j Z/d_j.
  std::vector<Integer> homology_class;

  static Orbit elliptic(std::string name, Rational eta, ExactReal phi,
                        std::vector<Integer> homology_class = {});
  /// Converts raw trivialization-dependent data (c, Q, theta) once.
  static Orbit elliptic_from_raw(std::string name, const Integer& c, const Integer& self_linking,
                                 const ExactReal& theta, std::vector<Integer> homology_class = {});
  static Orbit hyperbolic(std::string name, OrbitKind kind, std::vector<Integer> homology_class = {});

  bool is_elliptic() const noexcept { return kind == OrbitKind::elliptic; }

  friend bool operator==(const Orbit&, const Orbit&) = default;
};

/// H_1(Y) = (+)_j Z/d_j; an order of 0 is an infinite cyclic factor.
struct Homology {
  std::vector<Integer> orders;

  std::size_t rank() const noexcept { return orders.size(); }
  friend bool operator==(const Homology&, const Homology&) = default;
};

struct OrbitSystem {
  std::vector<Orbit> orbits;
  /// Symmetric; entry (i, j) is the linking number of orbits i and j. The
  /// diagonal is unused.
  std::vector<std::vector<Integer>> linking;
  Homology homology;

  std::size_t size() const noexcept { return orbits.size(); }
  bool all_elliptic() const;
  /// Index of the orbit with the given name; throws std::out_of_range.
  std::size_t orbit_index(std::string_view name) const;

  friend bool operator==(const OrbitSystem&, const OrbitSystem&) = default;
};

/// Multiplicity vector of an orbit set gamma_1^{m_1} ... gamma_n^{m_n}.
struct Generator {
  std::vector<std::int64_t> multiplicities;

  std::size_t size() const noexcept { return multiplicities.size(); }
  std::int64_t operator[](std::size_t i) const { return multiplicities[i]; }
  bool empty_set() const;
  std::string to_string() const;

  friend auto operator<=>(const Generator&, const Generator&) = default;
};

struct ValidationReport {
  std::vector<std::string> violations;
  /// Orbits whose phi is rational (nondegeneracy forces irrational phi).
  std::vector<std::string> degenerate_risk;

  bool ok() const noexcept { return violations.empty(); }
};

ValidationReport validate_system(const OrbitSystem& system);

/// Smallest l >= 1 with l * class == 0. Throws std::invalid_argument
/// ("orbit not torsion") when the class has a component along an infinite
/// cyclic factor.
Integer orbit_order(const Orbit& orbit, const Homology& homology);

/// The sublattice {m in Z^n : sum_i m_i [gamma_i] = 0 in H_1}.
class NullhomologousLattice {
 public:
  /// Basis columns in Hermite normal form (lower triangular).
  const IntMatrix& basis() const noexcept { return basis_; }
  /// [Z^n : lattice], the reciprocal of the lattice density.
  const Integer& index() const noexcept { return index_; }
  std::size_t dimension() const noexcept { return basis_.rows(); }

  bool contains(std::span<const std::int64_t> m) const;
  bool contains(const Generator& g) const { return contains(g.multiplicities); }

 private:
  friend NullhomologousLattice nullhomologous_lattice(const OrbitSystem& system);
  IntMatrix basis_;
  Integer index_ = 1;
};

/// Solves the congruence system sum_i m_i a_ij == 0 (mod d_j) through the
/// Smith normal form of [C | D]. Throws std::invalid_argument on non-torsion
/// classes or class vectors of the wrong length.
NullhomologousLattice nullhomologous_lattice(const OrbitSystem& system);

/// True iff hyperbolic multiplicities are at most 1 and all are nonnegative.
/// Throws std::invalid_argument on a dimension mismatch.
bool is_valid_generator(const OrbitSystem& system, const Generator& g);

}  // namespace echlab
