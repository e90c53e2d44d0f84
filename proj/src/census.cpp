#include "echlab/census.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace echlab {

namespace {

void require_all_elliptic(const OrbitSystem& system) {
  for (const Orbit& orbit : system.orbits)
    if (!orbit.is_elliptic())
      throw std::invalid_argument("census requires an all-elliptic system; '" + orbit.name + "' is hyperbolic");
}

void require_positive_certificate(const OrbitSystem& system) {
  const QuadrantCertificate certificate = qbar_quadrant_positive(system);
  if (certificate.verdict != QuadrantVerdict::positive) {
    throw std::invalid_argument("no positivity certificate: Qbar is " + std::string(to_string(certificate.verdict)) +
                                " on the quadrant; supply a multiplicity box");
  }
}

Rational lower_bound(const ExactReal& x, const Integer& scale) {
  Rational bound(x.floor_mult(scale), scale);
  bound.canonicalize();
  return bound;
}

// Rational mu > 0 with Qbar(m) >= mu (sum m_i)^2 on the quadrant, computed
// from rational lower bounds of the phi_i (Qbar is increasing in each phi_i
// on the quadrant). Returns mu <= 0 when the precision is insufficient.
Rational quadrant_constant(const OrbitSystem& system, const std::vector<Rational>& phi_low) {
  const std::size_t n = system.size();
  if (n == 1) return phi_low[0];
  if (n == 2) {
    const Rational a = phi_low[0];
    const Rational b = phi_low[1];
    const Rational q = Rational(system.linking[0][1]);
    // f(t) = a t^2 + b (1-t)^2 + 2 q t (1-t) on [0, 1].
    Rational mu = std::min(a, b);
    const Rational curvature = a + b - 2 * q;
    if (sgn(curvature) > 0) {
      const Rational t = (b - q) / curvature;
      if (sgn(t) > 0 && t < 1) mu = std::min(mu, Rational((a * b - q * q) / curvature));
    }
    return mu;
  }
  // 2 Q_ij m_i m_j >= -|Q_ij| (m_i^2 + m_j^2) for negative Q_ij, and
  // sum m_i^2 >= (sum m_i)^2 / n.
  Rational weakest;
  for (std::size_t i = 0; i < n; ++i) {
    Rational w = phi_low[i];
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && sgn(system.linking[i][j]) < 0) w += Rational(system.linking[i][j]);
    if (i == 0 || w < weakest) weakest = w;
  }
  return weakest / static_cast<long>(n);
}

void for_each_in_simplex(std::size_t n, std::int64_t radius, const std::function<void(const Generator&)>& visit) {
  Generator g{std::vector<std::int64_t>(n, 0)};
  std::function<void(std::size_t, std::int64_t)> recurse = [&](std::size_t i, std::int64_t remaining) {
    if (i == n) {
      visit(g);
      return;
    }
    for (std::int64_t m = 0; m <= remaining; ++m) {
      g.multiplicities[i] = m;
      recurse(i + 1, remaining - m);
    }
    g.multiplicities[i] = 0;
  };
  recurse(0, radius);
}

void for_each_in_box(const std::vector<std::int64_t>& box, const std::function<void(const Generator&)>& visit) {
  const std::size_t n = box.size();
  Generator g{std::vector<std::int64_t>(n, 0)};
  std::function<void(std::size_t)> recurse = [&](std::size_t i) {
    if (i == n) {
      visit(g);
      return;
    }
    for (std::int64_t m = 0; m <= box[i]; ++m) {
      g.multiplicities[i] = m;
      recurse(i + 1);
    }
    g.multiplicities[i] = 0;
  };
  recurse(0);
}

}  // namespace

std::size_t CensusResult::count_up_to(const Integer& k) const {
  const auto it = std::upper_bound(entries.begin(), entries.end(), k,
                                   [](const Integer& value, const CensusEntry& e) { return value < e.index; });
  return static_cast<std::size_t>(it - entries.begin());
}

std::int64_t certified_search_radius(const OrbitSystem& system, std::int64_t imax) {
  require_all_elliptic(system);
  for (const Orbit& orbit : system.orbits)
    if (orbit.phi->is_rational())
      throw std::invalid_argument("certified census needs irrational phi; '" + orbit.name + "' is degenerate");
  require_positive_certificate(system);
  const std::size_t n = system.size();
  if (n == 0) return 0;

  Rational mu = 0;
  std::vector<Rational> phi_low(n);
  for (unsigned bits = 16; bits <= 4096 && sgn(mu) <= 0; bits *= 2) {
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, bits);
    for (std::size_t i = 0; i < n; ++i) phi_low[i] = lower_bound(*system.orbits[i].phi, scale);
    mu = quadrant_constant(system, phi_low);
  }
  if (sgn(mu) <= 0) throw std::invalid_argument("no positivity certificate: quadrant constant not resolved");

  // I/2 > Qbar/2 + sum m_i (eta_i + phi_i/2 - 1) >= mu s^2 / 2 - beta s.
  Rational beta = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Rational deficit = 1 - *system.orbits[i].eta - phi_low[i] / 2;
    if (deficit > beta) beta = deficit;
  }
  const Rational vertex = beta / mu;
  const Rational limit(static_cast<long>(imax));
  std::int64_t radius = 0;
  for (std::int64_t s = 1;; ++s) {
    const Rational rs(static_cast<long>(s));
    const Rational lower = mu * rs * rs - 2 * beta * rs;
    if (lower < limit) {
      radius = s;
    } else if (rs > vertex) {
      break;
    }
  }
  return radius;
}

CensusResult enumerate_generators(const OrbitSystem& system, std::int64_t imax, const BoundStrategy& bounds) {
  require_all_elliptic(system);
  const std::size_t n = system.size();

  CensusResult result;
  result.cutoff = imax;
  std::int64_t table = 0;
  if (bounds.box) {
    if (bounds.box->size() != n) throw std::invalid_argument("box dimension does not match the orbit system");
    for (std::int64_t b : *bounds.box) {
      if (b < 0) throw std::invalid_argument("box bounds must be nonnegative");
      table = std::max(table, b);
    }
    result.completeness = Completeness::box_relative;
    result.box = bounds.box;
  } else {
    result.search_radius = certified_search_radius(system, imax);
    table = *result.search_radius;
  }

  const IndexEvaluator evaluator(system, table);
  const NullhomologousLattice& lattice = evaluator.lattice();
  result.lattice_index = lattice.index();
  const Integer cutoff = static_cast<long>(imax);

  const auto visit = [&](const Generator& g) {
    if (!lattice.contains(g)) return;
    Integer index = evaluator.ech_index(g);
    if (index <= cutoff) result.entries.push_back({g, std::move(index)});
  };
  if (bounds.box) {
    for_each_in_box(*bounds.box, visit);
  } else {
    for_each_in_simplex(n, *result.search_radius, visit);
  }

  std::sort(result.entries.begin(), result.entries.end(), [](const CensusEntry& a, const CensusEntry& b) {
    if (a.index != b.index) return a.index < b.index;
    return a.generator < b.generator;
  });
  for (std::size_t i = 0; i < result.entries.size(); ++i) {
    if (i + 1 == result.entries.size() || result.entries[i + 1].index != result.entries[i].index)
      result.histogram.emplace_back(result.entries[i].index, i + 1);
  }
  return result;
}

std::vector<Integer> spectrum(const OrbitSystem& system, std::int64_t imax) {
  std::vector<Integer> out;
  for (const CensusEntry& e : enumerate_generators(system, imax).entries) out.push_back(e.index);
  return out;
}

GrowthFit fit_growth(std::vector<std::pair<std::int64_t, std::size_t>> samples) {
  if (samples.size() < 4) throw std::invalid_argument("growth fit needs at least 4 samples");
  std::sort(samples.begin(), samples.end());
  GrowthFit fit;
  fit.samples = samples;
  const std::size_t start = samples.size() / 2;
  std::vector<double> xs, ys;
  for (std::size_t i = start; i < samples.size(); ++i) {
    if (samples[i].first <= 0 || samples[i].second == 0)
      throw std::invalid_argument("growth fit needs positive k and N(k)");
    xs.push_back(std::log(static_cast<double>(samples[i].first)));
    ys.push_back(std::log(static_cast<double>(samples[i].second)));
  }
  const auto count = static_cast<double>(xs.size());
  double mean_x = 0.0, mean_y = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mean_x += xs[i];
    mean_y += ys[i];
  }
  mean_x /= count;
  mean_y /= count;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mean_x) * (xs[i] - mean_x);
    sxy += (xs[i] - mean_x) * (ys[i] - mean_y);
  }
  if (sxx == 0.0) throw std::invalid_argument("growth fit needs distinct sample points");
  fit.exponent = sxy / sxx;
  fit.intercept = mean_y - fit.exponent * mean_x;
  for (std::size_t i = 0; i < xs.size(); ++i)
    fit.max_residual = std::max(fit.max_residual, std::abs(ys[i] - (fit.intercept + fit.exponent * xs[i])));
  return fit;
}

GrowthFit growth_exponent(const OrbitSystem& system, std::vector<std::int64_t> k_samples) {
  std::sort(k_samples.begin(), k_samples.end());
  k_samples.erase(std::unique(k_samples.begin(), k_samples.end()), k_samples.end());
  if (k_samples.size() < 4) throw std::invalid_argument("growth fit needs at least 4 samples");
  const CensusResult census = enumerate_generators(system, k_samples.back());
  std::vector<std::pair<std::int64_t, std::size_t>> samples;
  for (std::int64_t k : k_samples) samples.emplace_back(k, census.count_up_to(Integer(static_cast<long>(k))));
  return fit_growth(std::move(samples));
}

Integer triangle_lattice_count(const ExactReal& phi1, std::int64_t m1, std::int64_t m2) {
  if (phi1.is_rational()) throw std::invalid_argument("triangle_lattice_count: phi1 must be irrational");
  if (phi1.sign() <= 0) throw std::invalid_argument("triangle_lattice_count: phi1 must be positive");
  if (m1 < 0 || m2 < 0) throw std::invalid_argument("triangle_lattice_count: m must be nonnegative");
  // Column x contributes the y in [0, floor(phi1 (m1 - x)) + m2].
  Integer count = 0;
  for (std::int64_t x = 0;; ++x) {
    const Integer top = phi1.floor_mult(m1 - x) + static_cast<long>(m2);
    if (sgn(top) < 0) break;
    count += top + 1;
  }
  return count;
}

OrbitSystem ellipsoid_system(const ExactReal& phi1) {
  OrbitSystem system;
  system.orbits.push_back(Orbit::elliptic("gamma1", Rational(1), phi1));
  system.orbits.push_back(Orbit::elliptic("gamma2", Rational(1), phi1.reciprocal()));
  system.linking = {{Integer(0), Integer(1)}, {Integer(1), Integer(0)}};
  return system;
}

EllipsoidVerification ellipsoid_verify(const ExactReal& phi1, std::int64_t imax) {
  if (phi1.is_rational()) throw std::invalid_argument("ellipsoid_verify: phi1 must be irrational");
  if (phi1.sign() <= 0) throw std::invalid_argument("ellipsoid_verify: phi1 must be positive");
  const CensusResult census = enumerate_generators(ellipsoid_system(phi1), imax);

  EllipsoidVerification out;
  out.generators = census.entries.size();
  const std::size_t expected = imax < 0 ? 0 : static_cast<std::size_t>(imax / 2 + 1);
  for (std::size_t i = 0; i < std::max(expected, census.entries.size()); ++i) {
    const Integer want = 2 * static_cast<long>(i);
    if (i >= census.entries.size()) {
      out.first_discrepancy = "no generator of index " + want.get_str();
      return out;
    }
    const CensusEntry& entry = census.entries[i];
    if (i >= expected || entry.index != want) {
      out.first_discrepancy = "generator " + entry.generator.to_string() + " has index " + entry.index.get_str() +
                              ", expected " + (i >= expected ? std::string("none") : want.get_str());
      return out;
    }
    const Integer lattice_points = triangle_lattice_count(phi1, entry.generator[0], entry.generator[1]);
    if (2 * (lattice_points - 1) != entry.index) {
      out.first_discrepancy = "generator " + entry.generator.to_string() + " has index " + entry.index.get_str() +
                              " but the triangle holds " + lattice_points.get_str() + " lattice points";
      return out;
    }
  }
  out.pass = true;
  return out;
}

std::vector<ShellMinimum> min_index_on_shells(const OrbitSystem& system, const std::vector<std::int64_t>& radii) {
  require_all_elliptic(system);
  require_positive_certificate(system);
  std::int64_t largest = 0;
  for (std::int64_t r : radii) {
    if (r < 0) throw std::invalid_argument("shell radius must be nonnegative");
    largest = std::max(largest, r);
  }
  const IndexEvaluator evaluator(system, largest);
  const NullhomologousLattice& lattice = evaluator.lattice();

  std::vector<ShellMinimum> out;
  for (std::int64_t radius : radii) {
    ShellMinimum shell{radius, std::nullopt};
    const std::int64_t inner = (radius - 1) * (radius - 1);
    const std::int64_t outer = radius * radius;
    for_each_in_box(std::vector<std::int64_t>(system.size(), radius), [&](const Generator& g) {
      std::int64_t norm2 = 0;
      for (std::int64_t m : g.multiplicities) norm2 += m * m;
      const bool on_shell = radius == 0 ? norm2 == 0 : (norm2 > inner && norm2 <= outer);
      if (!on_shell || !lattice.contains(g)) return;
      Integer index = evaluator.ech_index(g);
      if (!shell.min_index || index < *shell.min_index) shell.min_index = std::move(index);
    });
    out.push_back(std::move(shell));
  }
  return out;
}

QuadraticLowerFit fit_quadratic_lower_bound(const std::vector<ShellMinimum>& shells) {
  std::vector<double> xs, ys;
  for (const ShellMinimum& s : shells) {
    if (!s.min_index) continue;
    xs.push_back(static_cast<double>(s.radius) * static_cast<double>(s.radius));
    ys.push_back(s.min_index->get_d());
  }
  if (xs.size() < 2) throw std::invalid_argument("quadratic fit needs at least two populated shells");
  double mean_x = 0.0, mean_y = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mean_x += xs[i];
    mean_y += ys[i];
  }
  mean_x /= static_cast<double>(xs.size());
  mean_y /= static_cast<double>(xs.size());
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mean_x) * (xs[i] - mean_x);
    sxy += (xs[i] - mean_x) * (ys[i] - mean_y);
  }
  if (sxx == 0.0) throw std::invalid_argument("quadratic fit needs distinct radii");
  QuadraticLowerFit fit;
  fit.c1 = sxy / sxx;
  fit.c2 = -(mean_y - fit.c1 * mean_x);
  return fit;
}

}  // namespace echlab
