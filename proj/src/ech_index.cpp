#include "echlab/ech_index.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace echlab {

Integer conley_zehnder(const ExactReal& theta, std::int64_t k) {
  if (k < 1) throw std::invalid_argument("conley_zehnder: multiplicity must be >= 1");
  return 2 * theta.floor_mult(k) + 1;
}

// ---------------------------------------------------------------------------
// IndexEvaluator

IndexEvaluator::IndexEvaluator(OrbitSystem system, std::int64_t table_size) : system_(std::move(system)) {
  const ValidationReport validation = validate_system(system_);
  if (!validation.ok()) {
    std::string message = "invalid orbit system:";
    for (const std::string& v : validation.violations) message += " " + v + ";";
    throw std::invalid_argument(message);
  }
  try {
    lattice_ = nullhomologous_lattice(system_);
  } catch (const std::invalid_argument& e) {
    lattice_error_ = e.what();
  }

  table_size = std::max<std::int64_t>(table_size, 0);
  floor_sums_.resize(system_.size());
  for (std::size_t i = 0; i < system_.size(); ++i) {
    if (!system_.orbits[i].is_elliptic()) continue;
    const ExactReal& phi = *system_.orbits[i].phi;
    auto& table = floor_sums_[i];
    table.resize(static_cast<std::size_t>(table_size) + 1);
    for (std::int64_t k = 1; k <= table_size; ++k)
      table[static_cast<std::size_t>(k)] = table[static_cast<std::size_t>(k - 1)] + phi.floor_mult(k);
  }
}

const NullhomologousLattice& IndexEvaluator::lattice() const {
  if (!lattice_) throw std::invalid_argument(lattice_error_);
  return *lattice_;
}

bool IndexEvaluator::is_nullhomologous(const Generator& g) const { return lattice().contains(g); }

Integer IndexEvaluator::floor_sum(std::size_t orbit, std::int64_t m) const {
  const auto& table = floor_sums_.at(orbit);
  if (table.empty()) throw std::invalid_argument("floor_sum on a hyperbolic orbit");
  const auto cached = static_cast<std::int64_t>(table.size()) - 1;
  if (m <= cached) return table[static_cast<std::size_t>(std::max<std::int64_t>(m, 0))];
  Integer total = table.back();
  const ExactReal& phi = *system_.orbits[orbit].phi;
  for (std::int64_t k = cached + 1; k <= m; ++k) total += phi.floor_mult(k);
  return total;
}

void IndexEvaluator::require_index_domain(const Generator& g) const {
  if (!is_valid_generator(system_, g)) throw std::invalid_argument("invalid generator " + g.to_string());
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] != 0 && !system_.orbits[i].is_elliptic())
      throw std::invalid_argument("hyperbolic orbit present: '" + system_.orbits[i].name + "'");
  }
  if (!lattice().contains(g)) throw std::invalid_argument("generator not nullhomologous: " + g.to_string());
}

namespace {

Integer pair_linking(const OrbitSystem& system, const Generator& g) {
  Integer total = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] == 0) continue;
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (g[j] == 0) continue;
      total += Integer(static_cast<long>(g[i])) * static_cast<long>(g[j]) * system.linking[i][j];
    }
  }
  return total;
}

Integer require_integer(const Rational& value, const char* what) {
  if (value.get_den() != 1)
    throw std::domain_error(std::string("non-integer ") + what + " " + to_string(value) +
                            " (inconsistent eta data)");
  return value.get_num();
}

}  // namespace

Integer IndexEvaluator::ech_index(const Generator& g) const {
  require_index_domain(g);
  Rational half = Rational(pair_linking(system_, g));
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] == 0) continue;
    half += Rational(static_cast<long>(g[i])) * *system_.orbits[i].eta;
    half += Rational(floor_sum(i, g[i]));
  }
  return require_integer(Rational(2 * half), "ECH index");
}

Integer IndexEvaluator::j0_index(const Generator& g) const {
  require_index_domain(g);
  Rational half = Rational(pair_linking(system_, g));
  long occupied = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] == 0) continue;
    ++occupied;
    half += Rational(static_cast<long>(g[i])) * (1 - *system_.orbits[i].eta);
    half += Rational(floor_sum(i, g[i] - 1));
  }
  return require_integer(Rational(2 * half - occupied), "J0 index");
}

Integer IndexEvaluator::identity_residual(const Generator& g) const {
  require_index_domain(g);
  Rational total = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] == 0) continue;
    const Orbit& orbit = system_.orbits[i];
    total += Rational(static_cast<long>(g[i])) * (4 * *orbit.eta - 2);
    total += Rational(2 * orbit.phi->floor_mult(g[i]));
    total += 1;
  }
  return require_integer(total, "index residual");
}

int IndexEvaluator::mod2_grading(const Generator& g) const {
  if (!is_valid_generator(system_, g)) throw std::invalid_argument("invalid generator " + g.to_string());
  int count = 0;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g[i] == 1 && system_.orbits[i].kind == OrbitKind::positive_hyperbolic) ++count;
  return count % 2;
}

SurdSum IndexEvaluator::qbar(std::span<const Rational> m) const {
  if (m.size() != system_.size()) throw std::invalid_argument("qbar: dimension mismatch");
  SurdSum total;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (sgn(m[i]) == 0) continue;
    const Orbit& orbit = system_.orbits[i];
    if (!orbit.is_elliptic()) throw std::invalid_argument("hyperbolic orbit present: '" + orbit.name + "'");
    total += SurdSum(Rational(m[i] * m[i])) * SurdSum(*orbit.phi);
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (sgn(m[j]) == 0) continue;
      total += SurdSum(Rational(2 * m[i] * m[j] * Rational(system_.linking[i][j])));
    }
  }
  return total;
}

SurdSum IndexEvaluator::qbar(std::span<const std::int64_t> m) const {
  std::vector<Rational> as_rational;
  as_rational.reserve(m.size());
  for (std::int64_t v : m) as_rational.emplace_back(static_cast<long>(v));
  return qbar(std::span<const Rational>(as_rational));
}

IndexEnvelope IndexEvaluator::envelope(const Generator& g) const {
  require_index_domain(g);
  // floor(k phi) lies in (k phi - 1, k phi], so
  //   I in (2U - 2 sum m_i, 2U],  2U = 2 sum m_i eta_i + 2 sum Q m m + sum phi_i m_i (m_i + 1).
  std::int64_t total_multiplicity = 0;
  SurdSum twice_upper(Rational(2 * pair_linking(system_, g)));
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] == 0) continue;
    total_multiplicity += g[i];
    const Orbit& orbit = system_.orbits[i];
    const Integer m = static_cast<long>(g[i]);
    twice_upper += SurdSum(Rational(2 * Rational(m) * *orbit.eta));
    twice_upper += SurdSum(Rational(m * (m + 1))) * SurdSum(*orbit.phi);
  }
  if (total_multiplicity == 0) return {Integer(0), Integer(0)};
  const Integer hi = twice_upper.floor();
  const Integer lo =
      (twice_upper - SurdSum(Rational(2 * Integer(static_cast<long>(total_multiplicity))))).floor() + 1;
  return {lo, hi};
}

IndexReport IndexEvaluator::report(const Generator& g) const {
  IndexReport out;
  out.generator = g;
  out.mod2 = mod2_grading(g);
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g[i] != 0 && !system_.orbits[i].is_elliptic()) return out;
  out.ech = ech_index(g);
  out.j0 = j0_index(g);
  out.qbar = qbar(std::span<const std::int64_t>(g.multiplicities));
  out.envelope = envelope(g);
  return out;
}

Integer ech_index(const OrbitSystem& system, const Generator& g) {
  return IndexEvaluator(system, 0).ech_index(g);
}

Integer j0_index(const OrbitSystem& system, const Generator& g) { return IndexEvaluator(system, 0).j0_index(g); }

Integer index_identity_residual(const OrbitSystem& system, const Generator& g) {
  return IndexEvaluator(system, 0).identity_residual(g);
}

int mod2_grading(const OrbitSystem& system, const Generator& g) {
  return IndexEvaluator(system, 0).mod2_grading(g);
}

SurdSum qbar(const OrbitSystem& system, const Generator& g) {
  return IndexEvaluator(system, 0).qbar(std::span<const std::int64_t>(g.multiplicities));
}

IndexEnvelope index_envelope(const OrbitSystem& system, const Generator& g) {
  return IndexEvaluator(system, 0).envelope(g);
}

// ---------------------------------------------------------------------------
// Quadrant positivity

std::string_view to_string(QuadrantVerdict verdict) {
  switch (verdict) {
    case QuadrantVerdict::positive:
      return "positive";
    case QuadrantVerdict::degenerate_direction:
      return "degenerate-direction";
    case QuadrantVerdict::indefinite:
      return "indefinite";
    case QuadrantVerdict::unknown:
      return "unknown";
  }
  return "unknown";
}

QuadrantCertificate qbar_quadrant_positive(const OrbitSystem& system) {
  for (const Orbit& orbit : system.orbits)
    if (!orbit.is_elliptic()) throw std::invalid_argument("hyperbolic orbit present: '" + orbit.name + "'");
  const std::size_t n = system.size();
  QuadrantCertificate out;
  // Qbar(e_i) = phi_i, so a nonpositive phi already breaks positivity.
  for (const Orbit& orbit : system.orbits) {
    if (orbit.phi->sign() <= 0) {
      out.verdict = QuadrantVerdict::indefinite;
      return out;
    }
  }
  if (n <= 1) {
    out.verdict = QuadrantVerdict::positive;
    return out;
  }

  if (n == 2) {
    const Integer& q12 = system.linking[0][1];
    const ExactReal& phi1 = *system.orbits[0].phi;
    const ExactReal& phi2 = *system.orbits[1].phi;
    if (sgn(q12) >= 0) {
      out.verdict = QuadrantVerdict::positive;
      return out;
    }
    // Q12 < 0: positive iff Q12^2 < phi1 phi2, i.e. Q12^2 / phi1 < phi2.
    const ExactReal ratio = ExactReal::rational(Integer(q12 * q12)) * phi1.reciprocal();
    const auto order = compare(ratio, phi2);
    if (order < 0) {
      out.verdict = QuadrantVerdict::positive;
    } else if (order == 0) {
      out.verdict = QuadrantVerdict::degenerate_direction;
      out.null_direction = std::make_pair(ExactReal::rational(Integer(-q12)), phi1);
    } else {
      out.verdict = QuadrantVerdict::indefinite;
    }
    return out;
  }

  bool nonnegative_linking = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && sgn(system.linking[i][j]) < 0) nonnegative_linking = false;
  if (nonnegative_linking) {
    out.verdict = QuadrantVerdict::positive;
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) {
    Integer off_diagonal = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) off_diagonal += abs(system.linking[i][j]);
    if (compare(*system.orbits[i].phi, ExactReal::rational(off_diagonal)) <= 0) {
      out.verdict = QuadrantVerdict::unknown;
      return out;
    }
  }
  out.verdict = QuadrantVerdict::positive;
  return out;
}

// ---------------------------------------------------------------------------
// End data bounds

bool EndData::has_trivial_cylinder(std::size_t orbit) const {
  return std::find(trivial_cylinders.begin(), trivial_cylinders.end(), orbit) != trivial_cylinders.end();
}

std::int64_t EndData::end_count(std::size_t orbit, EndSign sign) const {
  return std::count_if(ends.begin(), ends.end(),
                       [&](const EndRecord& e) { return e.orbit == orbit && e.sign == sign; });
}

Integer intersection_bound(const EndData& data) {
  Integer bound = data.q_tau;
  for (const EndRecord& end : data.ends) {
    if (end.multiplicity < 1) throw std::invalid_argument("end multiplicity must be positive");
    if (!end.theta) throw std::invalid_argument("intersection_bound: end without monodromy angle");
    const Integer k = static_cast<long>(end.multiplicity);
    if (end.theta->is_integral_multiple(k))
      throw std::invalid_argument("intersection_bound: k*theta is an integer (degenerate orbit)");
    if (end.sign == EndSign::positive) {
      bound += k * end.theta->floor_mult(k);
    } else {
      bound -= k * end.theta->ceil_mult(k);
    }
  }
  return bound;
}

namespace {

Integer end_budget(const EndData& data) {
  std::map<std::pair<std::size_t, EndSign>, std::int64_t> counts;
  for (const EndRecord& end : data.ends) {
    if (end.multiplicity < 1) throw std::invalid_argument("end multiplicity must be positive");
    ++counts[{end.orbit, end.sign}];
  }
  Integer budget = 0;
  for (const auto& [key, n] : counts) {
    const long t = data.has_trivial_cylinder(key.first) ? 1 : 0;
    budget += 2 * n + t - 1;
  }
  return budget;
}

}  // namespace

std::optional<Integer> genus_bound(const Integer& j0, const EndData& data) {
  const Integer g = floor_div(Integer(j0 + 2 - end_budget(data)), Integer(2));
  if (sgn(g) < 0) return std::nullopt;
  return g;
}

std::string_view to_string(CylinderVerdict verdict) {
  switch (verdict) {
    case CylinderVerdict::cylinder:
      return "cylinder";
    case CylinderVerdict::not_cylinder:
      return "not-cylinder";
    case CylinderVerdict::infeasible:
      return "infeasible";
  }
  return "infeasible";
}

CylinderReport cylinder_criterion(const Integer& j0, const EndData& data, std::span<const std::int64_t> m,
                                  std::span<const std::int64_t> m_prime) {
  if (m.size() != 2 || m_prime.size() != 2)
    throw std::invalid_argument("cylinder_criterion: expects two orbits");
  for (std::size_t i = 0; i < 2; ++i)
    if (m[i] == 0 || m_prime[i] == 0) throw std::invalid_argument("cylinder_criterion: multiplicities must be nonzero");
  for (const EndRecord& end : data.ends)
    if (end.orbit > 1) throw std::invalid_argument("cylinder_criterion: end at an orbit other than gamma_1, gamma_2");
  for (std::size_t i = 0; i < 2; ++i) {
    const std::int64_t plus = data.end_count(i, EndSign::positive);
    const std::int64_t minus = data.end_count(i, EndSign::negative);
    if (plus + minus == 0) throw std::invalid_argument("cylinder_criterion: C_1 must have ends at both orbits");
    // gamma_i occurs on both sides, so without a trivial cylinder C_1 must
    // carry it at both ends.
    if (!data.has_trivial_cylinder(i) && (plus == 0 || minus == 0))
      throw std::invalid_argument("cylinder_criterion: end configuration inconsistent with nonzero multiplicities");
  }

  CylinderReport report;
  report.genus_bound = genus_bound(j0, data);
  if (j0 < 2) {
    report.verdict = CylinderVerdict::infeasible;
  } else if (j0 == 2) {
    report.verdict = CylinderVerdict::cylinder;
  } else {
    report.verdict = CylinderVerdict::not_cylinder;
  }
  return report;
}

}  // namespace echlab
