#include "echlab/orbit_model.hpp"

#include <set>
#include <stdexcept>

namespace echlab {

std::string_view to_string(OrbitKind kind) {
  switch (kind) {
    case OrbitKind::elliptic:
      return "elliptic";
    case OrbitKind::positive_hyperbolic:
      return "positive-hyperbolic";
    case OrbitKind::negative_hyperbolic:
      return "negative-hyperbolic";
  }
  return "unknown";
}

OrbitKind parse_orbit_kind(std::string_view text) {
  if (text == "elliptic") return OrbitKind::elliptic;
  if (text == "positive-hyperbolic") return OrbitKind::positive_hyperbolic;
  if (text == "negative-hyperbolic") return OrbitKind::negative_hyperbolic;
  throw std::invalid_argument("unknown orbit kind '" + std::string(text) + "'");
}

Orbit Orbit::elliptic(std::string name, Rational eta, ExactReal phi,
                      std::vector<Integer> homology_class) {
  return Orbit{std::move(name), OrbitKind::elliptic, std::move(eta), std::move(phi),
               std::move(homology_class)};
}

Orbit Orbit::elliptic_from_raw(std::string name, const Integer& c, const Integer& self_linking,
                               const ExactReal& theta, std::vector<Integer> homology_class) {
  Rational eta(c - self_linking + 1, 2);
  eta.canonicalize();
  return elliptic(std::move(name), eta, ExactReal::rational(self_linking) + theta,
                  std::move(homology_class));
}

Orbit Orbit::hyperbolic(std::string name, OrbitKind kind, std::vector<Integer> homology_class) {
  if (kind == OrbitKind::elliptic) throw std::invalid_argument("Orbit::hyperbolic given elliptic kind");
  return Orbit{std::move(name), kind, std::nullopt, std::nullopt, std::move(homology_class)};
}

bool OrbitSystem::all_elliptic() const {
  for (const Orbit& o : orbits)
    if (!o.is_elliptic()) return false;
  return true;
}

std::size_t OrbitSystem::orbit_index(std::string_view name) const {
  for (std::size_t i = 0; i < orbits.size(); ++i)
    if (orbits[i].name == name) return i;
  throw std::out_of_range("no orbit named '" + std::string(name) + "'");
}

bool Generator::empty_set() const {
  for (std::int64_t m : multiplicities)
    if (m != 0) return false;
  return true;
}

std::string Generator::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < multiplicities.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(multiplicities[i]);
  }
  return out + ")";
}

ValidationReport validate_system(const OrbitSystem& system) {
  ValidationReport report;
  const std::size_t n = system.size();

  std::set<std::string> names;
  for (const Orbit& orbit : system.orbits) {
    if (!names.insert(orbit.name).second) report.violations.push_back("duplicate orbit name '" + orbit.name + "'");
    if (orbit.is_elliptic()) {
      if (!orbit.eta || !orbit.phi) {
        report.violations.push_back("elliptic orbit '" + orbit.name + "' is missing eta or phi");
      } else if (orbit.phi->is_rational()) {
        report.degenerate_risk.push_back(orbit.name);
      }
    } else if (orbit.eta || orbit.phi) {
      report.violations.push_back("hyperbolic orbit '" + orbit.name + "' carries index constants");
    }
    if (orbit.homology_class.size() != system.homology.rank()) {
      report.violations.push_back("orbit '" + orbit.name + "' class has " +
                                  std::to_string(orbit.homology_class.size()) +
                                  " coordinates, homology has " +
                                  std::to_string(system.homology.rank()) + " factors");
    }
  }

  for (const Integer& d : system.homology.orders)
    if (sgn(d) < 0) report.violations.push_back("negative homology order " + d.get_str());

  bool square = system.linking.size() == n;
  for (const auto& row : system.linking) square = square && row.size() == n;
  if (!square) {
    report.violations.push_back("linking matrix is not " + std::to_string(n) + "x" + std::to_string(n));
  } else {
    bool symmetric = true;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) symmetric = symmetric && system.linking[i][j] == system.linking[j][i];
    if (!symmetric) report.violations.push_back("linking not symmetric");
  }
  return report;
}

Integer orbit_order(const Orbit& orbit, const Homology& homology) {
  if (orbit.homology_class.size() != homology.rank())
    throw std::invalid_argument("orbit '" + orbit.name + "' class does not match homology rank");
  Integer order = 1;
  for (std::size_t j = 0; j < homology.rank(); ++j) {
    const Integer& d = homology.orders[j];
    const Integer& a = orbit.homology_class[j];
    if (sgn(d) == 0) {
      if (sgn(a) != 0) throw std::invalid_argument("orbit not torsion: '" + orbit.name + "'");
      continue;
    }
    order = lcm(order, Integer(d / gcd(d, a)));
  }
  return order;
}

bool NullhomologousLattice::contains(std::span<const std::int64_t> m) const {
  const std::size_t n = basis_.rows();
  if (m.size() != n) throw std::invalid_argument("lattice membership: dimension mismatch");
  std::vector<Integer> coords(n);
  for (std::size_t i = 0; i < n; ++i) {
    Integer rest = static_cast<long>(m[i]);
    for (std::size_t j = 0; j < i; ++j) rest -= basis_(i, j) * coords[j];
    if (!mpz_divisible_p(rest.get_mpz_t(), basis_(i, i).get_mpz_t())) return false;
    coords[i] = rest / basis_(i, i);
  }
  return true;
}

NullhomologousLattice nullhomologous_lattice(const OrbitSystem& system) {
  const std::size_t n = system.size();
  std::vector<std::size_t> constrained;
  for (const Orbit& orbit : system.orbits) (void)orbit_order(orbit, system.homology);
  for (std::size_t j = 0; j < system.homology.rank(); ++j)
    if (system.homology.orders[j] > 1) constrained.push_back(j);

  NullhomologousLattice lattice;
  if (constrained.empty()) {
    lattice.basis_ = IntMatrix::identity(n);
    lattice.index_ = 1;
    return lattice;
  }

  // Kernel of [C | D]: (m, t) with C m + D t = 0. The projection onto m is
  // injective (D is nonsingular), so it carries a basis of the lattice.
  const std::size_t r = constrained.size();
  IntMatrix system_matrix(r, n + r);
  for (std::size_t k = 0; k < r; ++k) {
    const std::size_t j = constrained[k];
    const Integer& d = system.homology.orders[j];
    for (std::size_t i = 0; i < n; ++i) {
      Integer a;
      mpz_mod(a.get_mpz_t(), system.orbits[i].homology_class[j].get_mpz_t(), d.get_mpz_t());
      system_matrix(k, i) = a;
    }
    system_matrix(k, n + k) = d;
  }
  const IntMatrix kernel = integer_kernel(system_matrix);
  if (kernel.cols() != n) throw std::logic_error("nullhomologous lattice has unexpected rank");
  IntMatrix basis(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) basis(i, k) = kernel(i, k);

  lattice.basis_ = n == 0 ? basis : hermite_normal_form(basis);
  lattice.index_ = 1;
  for (std::size_t i = 0; i < n; ++i) lattice.index_ *= lattice.basis_(i, i);
  return lattice;
}

bool is_valid_generator(const OrbitSystem& system, const Generator& g) {
  if (g.size() != system.size())
    throw std::invalid_argument("generator has " + std::to_string(g.size()) + " multiplicities, system has " +
                                std::to_string(system.size()) + " orbits");
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] < 0) return false;
    if (!system.orbits[i].is_elliptic() && g[i] > 1) return false;
  }
  return true;
}

}  // namespace echlab
