#include "echlab/lefschetz.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

namespace echlab {

namespace {

const IntPolynomial& target_polynomial() {
  static const IntPolynomial target{Integer(1), Integer(-2), Integer(1)};
  return target;
}

IntPolynomial one_minus_t_power(std::int64_t p) {
  IntPolynomial out(static_cast<std::size_t>(p) + 1, Integer(0));
  out.front() = 1;
  out.back() = -1;
  return out;
}

IntPolynomial times_periods(IntPolynomial poly, const std::vector<std::int64_t>& periods) {
  for (std::int64_t p : periods) poly = poly_multiply(poly, one_minus_t_power(p));
  poly_trim(poly);
  return poly;
}

std::optional<std::size_t> first_difference(const IntPolynomial& a, const IntPolynomial& b) {
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const Integer x = i < a.size() ? a[i] : Integer(0);
    const Integer y = i < b.size() ? b[i] : Integer(0);
    if (x != y) return i;
  }
  return std::nullopt;
}

// Nonincreasing multisets of positive integers with sum <= max_sum.
void for_each_multiset(std::int64_t max_sum, const std::function<void(const std::vector<std::int64_t>&)>& visit) {
  std::vector<std::int64_t> parts;
  std::function<void(std::int64_t, std::int64_t)> recurse = [&](std::int64_t remaining, std::int64_t largest) {
    visit(parts);
    for (std::int64_t p = std::min(remaining, largest); p >= 1; --p) {
      parts.push_back(p);
      recurse(remaining - p, p);
      parts.pop_back();
    }
  };
  recurse(max_sum, max_sum);
}

std::vector<SurdSum> act(const IntMatrix& m, const std::vector<SurdSum>& v) {
  std::vector<SurdSum> out(m.rows(), SurdSum(Rational(0)));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (sgn(m(i, j)) != 0) out[i] += SurdSum(Rational(m(i, j))) * v[j];
  return out;
}

}  // namespace

void validate_zeta_instance(const ZetaInstance& instance) {
  if (instance.genus < 0) throw std::invalid_argument("zeta instance: genus must be nonnegative");
  const auto n = static_cast<std::size_t>(2 * instance.genus);
  if (instance.A.rows() != n || instance.A.cols() != n)
    throw std::invalid_argument("zeta instance: A must be " + std::to_string(n) + "x" + std::to_string(n));
  if (n > 0) {
    const Integer det = instance.A.determinant();
    if (det != 1 && det != -1) throw std::invalid_argument("zeta instance: A is not invertible over Z (det " + det.get_str() + ")");
  }
  for (std::int64_t p : instance.periods)
    if (p < 1) throw std::invalid_argument("zeta instance: periods must be positive");
}

Integer lefschetz_number(const ZetaInstance& instance, std::int64_t p) {
  validate_zeta_instance(instance);
  if (p < 1) throw std::invalid_argument("lefschetz_number: p must be >= 1");
  if (instance.genus == 0) return 2;
  return 2 - instance.A.power(static_cast<unsigned long>(p)).trace();
}

IntPolynomial zeta_product(const ZetaInstance& instance) {
  validate_zeta_instance(instance);
  IntPolynomial base = instance.genus == 0 ? IntPolynomial{Integer(1)} : instance.A.reversed_characteristic_polynomial();
  return times_periods(std::move(base), instance.periods);
}

ZetaCheck zeta_identity_check(const ZetaInstance& instance, std::int64_t degree) {
  validate_zeta_instance(instance);
  const std::int64_t period_sum = std::accumulate(instance.periods.begin(), instance.periods.end(), std::int64_t{0});
  const std::int64_t required = std::max<std::int64_t>({2, period_sum, 2 * instance.genus});
  if (degree < required)
    throw std::invalid_argument("zeta_identity_check: degree must be at least " + std::to_string(required));

  ZetaCheck check;
  check.product = zeta_product(instance);
  check.first_failing_coefficient = first_difference(check.product, target_polynomial());

  IntMatrix power = instance.genus == 0 ? IntMatrix() : instance.A;
  for (std::int64_t p = 1; p <= degree; ++p) {
    const Integer lefschetz = instance.genus == 0 ? Integer(2) : Integer(2 - power.trace());
    Integer fixed = 0;
    for (std::int64_t q : instance.periods)
      if (p % q == 0) fixed += static_cast<long>(q);
    if (lefschetz != fixed) {
      check.first_failing_period = p;
      break;
    }
    if (instance.genus > 0) power = power * instance.A;
  }
  check.pass = !check.first_failing_coefficient && !check.first_failing_period;
  return check;
}

std::vector<ZetaSolution> zeta_solve(int g_max, std::int64_t period_sum_max, std::int64_t trace_bound) {
  if (g_max < 0 || period_sum_max < 0 || trace_bound < 0)
    throw std::invalid_argument("zeta_solve: bounds must be nonnegative");
  std::vector<ZetaSolution> out;
  for_each_multiset(period_sum_max, [&](const std::vector<std::int64_t>& periods) {
    if (!first_difference(times_periods({Integer(1)}, periods), target_polynomial()))
      out.push_back({0, std::nullopt, std::nullopt, periods});
  });
  if (g_max >= 1) {
    for (std::int64_t tr = -trace_bound; tr <= trace_bound; ++tr) {
      const IntPolynomial base{Integer(1), Integer(static_cast<long>(-tr)), Integer(1)};
      for_each_multiset(period_sum_max, [&](const std::vector<std::int64_t>& periods) {
        if (!first_difference(times_periods(base, periods), target_polynomial()))
          out.push_back({1, Integer(static_cast<long>(tr)), Integer(1), periods});
      });
    }
  }
  // For g >= 2, det(1 - tA) has degree 2g >= 4 with leading coefficient
  // det A = +-1, so the product has degree > 2.
  return out;
}

void validate_torus_map(const AffineTorusMap& map) {
  if (map.A.rows() != 2 || map.A.cols() != 2) throw std::invalid_argument("torus map: A must be 2x2");
  if (map.A.determinant() != 1) throw std::invalid_argument("torus map: det A must be 1");
}

std::string_view to_string(PeriodicKind kind) {
  switch (kind) {
    case PeriodicKind::none: return "none";
    case PeriodicKind::finite: return "finite";
    case PeriodicKind::positive_dimensional: return "positive-dimensional";
  }
  return "none";
}

PeriodicPoints torus_periodic_points(const AffineTorusMap& map, std::int64_t p) {
  validate_torus_map(map);
  if (p < 1) throw std::invalid_argument("torus_periodic_points: p must be >= 1");
  const IntMatrix shifted = map.A.power(static_cast<unsigned long>(p)) - IntMatrix::identity(2);
  const Integer det = shifted.determinant();
  if (sgn(det) != 0) return {PeriodicKind::finite, Integer(abs(det))};

  std::vector<SurdSum> c{SurdSum(Rational(0)), SurdSum(Rational(0))};
  std::vector<SurdSum> term{SurdSum(map.b[0]), SurdSum(map.b[1])};
  for (std::int64_t j = 0; j < p; ++j) {
    c[0] += term[0];
    c[1] += term[1];
    if (j + 1 < p) term = act(map.A, term);
  }
  // U (A^p - I) V = S: with y = V^{-1} x the system reads S y + U c in Z^2,
  // so rows with a zero invariant factor need (U c)_i integral.
  const SmithDecomposition snf = smith_normal_form(shifted);
  const std::vector<SurdSum> uc = act(snf.U, c);
  for (std::size_t i = 0; i < 2; ++i)
    if (sgn(snf.S(i, i)) == 0 && !uc[i].is_integer()) return {PeriodicKind::none, std::nullopt};
  return {PeriodicKind::positive_dimensional, std::nullopt};
}

TorusOrbitReport torus_orbit_report(const AffineTorusMap& map, std::int64_t max_period) {
  if (max_period < 1) throw std::invalid_argument("torus_orbit_report: max period must be >= 1");
  TorusOrbitReport report;
  report.max_period = max_period;
  for (std::int64_t p = 1; p <= max_period; ++p) {
    PeriodicPoints points = torus_periodic_points(map, p);
    if (!report.first_period && points.kind != PeriodicKind::none) report.first_period = p;
    report.table.emplace_back(p, std::move(points));
  }
  return report;
}

}  // namespace echlab
