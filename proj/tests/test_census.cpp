#include "echlab/census.hpp"
#include "echlab/presets.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <optional>

using namespace echlab;

namespace {

ExactReal quad(long p, long q, long r, long d) {
  return ExactReal::quadratic(Integer(p), Integer(q), Integer(r), Integer(d));
}

// Exhaustive scan over the box m_i <= limit, filtered by I <= imax.
std::vector<CensusEntry> box_scan(const OrbitSystem& system, std::int64_t imax, std::int64_t limit) {
  const IndexEvaluator eval(system, limit);
  std::vector<CensusEntry> out;
  const std::size_t n = system.orbits.size();
  std::vector<std::int64_t> m(n, 0);
  while (true) {
    const Generator g{m};
    if (eval.is_nullhomologous(g)) {
      const Integer index = eval.ech_index(g);
      if (index <= imax) out.push_back(CensusEntry{g, index});
    }
    std::size_t i = 0;
    while (i < n && m[i] == limit) m[i++] = 0;
    if (i == n) break;
    ++m[i];
  }
  std::sort(out.begin(), out.end(), [](const CensusEntry& a, const CensusEntry& b) {
    if (a.index != b.index) return a.index < b.index;
    return a.generator.multiplicities < b.generator.multiplicities;
  });
  return out;
}

// Direct count of lattice points under the line through (m1, m2) with slope -phi1.
Integer brute_triangle(const ExactReal& phi1, std::int64_t m1, std::int64_t m2) {
  long count = 0;
  const SurdSum rhs = SurdSum(phi1) * SurdSum(Rational(m1)) + SurdSum(Rational(m2));
  for (std::int64_t x = 0; x <= m1 + m2 + 2; ++x)
    for (std::int64_t y = 0; y <= m2 + 3 * (m1 + 1); ++y) {
      const SurdSum lhs = SurdSum(phi1) * SurdSum(Rational(x)) + SurdSum(Rational(y));
      if (compare(lhs, rhs) <= 0) ++count;
    }
  return count;
}

}  // namespace

TEST(Census, EllipsoidExample) {
  const CensusResult result = enumerate_generators(load_system_preset("ellipsoid-sqrt2"), 12);
  const std::vector<std::pair<std::vector<std::int64_t>, long>> expected = {
      {{0, 0}, 0}, {{0, 1}, 2}, {{1, 0}, 4}, {{0, 2}, 6}, {{1, 1}, 8}, {{2, 0}, 10}, {{0, 3}, 12}};
  ASSERT_EQ(result.entries.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_EQ(result.entries[i].generator.multiplicities, expected[i].first);
    EXPECT_EQ(result.entries[i].index, expected[i].second);
  }
  EXPECT_EQ(result.completeness, Completeness::certified);
  EXPECT_EQ(result.count_up_to(7), 4u);
  EXPECT_EQ(result.count_up_to(-1), 0u);
  EXPECT_EQ(result.histogram.back(), (std::pair<Integer, std::size_t>{12, 7}));
}

TEST(Census, SingleOrbitZeroCutoff) {
  const CensusResult result = enumerate_generators(load_system_preset("single-orbit"), 0);
  ASSERT_EQ(result.entries.size(), 1u);
  EXPECT_EQ(result.entries[0].generator.multiplicities, std::vector<std::int64_t>{0});
}

TEST(Census, LensCongruenceFilter) {
  const CensusResult result = enumerate_generators(load_system_preset("lens3"), 60);
  EXPECT_EQ(result.lattice_index, 3);
  ASSERT_FALSE(result.entries.empty());
  for (const CensusEntry& e : result.entries)
    EXPECT_EQ((e.generator[0] + 2 * e.generator[1]) % 3, 0) << e.generator.to_string();
}

TEST(Census, MatchesBoxScan) {
  for (const std::string& name : {"ellipsoid-sqrt2", "ellipsoid-golden", "ellipsoid-sqrt3", "single-orbit",
                                   "three-orbit", "lens3"}) {
    const OrbitSystem system = load_system_preset(name);
    for (std::int64_t imax : {0, 7, 30, 60}) {
      const CensusResult result = enumerate_generators(system, imax);
      EXPECT_EQ(result.entries, box_scan(system, imax, system.orbits.size() >= 3 ? 24 : 64)) << name << " " << imax;
      for (std::size_t i = 1; i < result.histogram.size(); ++i)
        EXPECT_GT(result.histogram[i].second, result.histogram[i - 1].second);
      ASSERT_FALSE(result.histogram.empty());
      EXPECT_GE(result.histogram.front().second, 1u);
    }
  }
}

TEST(Census, BoxModeAndRefusals) {
  const OrbitSystem indefinite = load_system_preset("lens3-indefinite");
  try {
    enumerate_generators(indefinite, 20);
    ADD_FAILURE() << "indefinite system was enumerated without a box";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("no positivity certificate"), std::string::npos);
  }
  const CensusResult boxed = enumerate_generators(indefinite, 20, BoundStrategy{std::vector<std::int64_t>{30, 30}});
  EXPECT_EQ(boxed.completeness, Completeness::box_relative);
  EXPECT_EQ(boxed.entries, box_scan(indefinite, 20, 30));

  EXPECT_THROW(enumerate_generators(load_system_preset("eh-system"), 10), std::invalid_argument);
  OrbitSystem rational = load_system_preset("ellipsoid-sqrt2");
  rational.orbits[0].phi = ExactReal::rational(Integer(3), Integer(2));
  EXPECT_THROW(enumerate_generators(rational, 10), std::invalid_argument);
  EXPECT_THROW(enumerate_generators(load_system_preset("ellipsoid-sqrt2"), 10, BoundStrategy{std::vector<std::int64_t>{3}}),
               std::invalid_argument);
}

TEST(Spectrum, Examples) {
  std::vector<Integer> evens;
  for (long j = 0; j <= 20; j += 2) evens.emplace_back(j);
  EXPECT_EQ(spectrum(load_system_preset("ellipsoid-sqrt2"), 20), evens);

  const std::vector<Integer> single = spectrum(load_system_preset("single-orbit"), 400);
  for (std::size_t i = 2; i < single.size(); ++i) EXPECT_GT(single[i] - single[i - 1], single[i - 1] - single[i - 2]);

  EXPECT_EQ(spectrum(OrbitSystem{}, 10), std::vector<Integer>{0});
}

TEST(Triangle, Examples) {
  const ExactReal r2 = quad(0, 1, 1, 2);
  EXPECT_EQ(triangle_lattice_count(r2, 0, 0), 1);
  EXPECT_EQ(triangle_lattice_count(r2, 0, 1), 2);
  EXPECT_EQ(triangle_lattice_count(r2, 1, 1), 5);
  EXPECT_THROW(triangle_lattice_count(ExactReal::rational(Integer(2)), 1, 1), std::invalid_argument);
}

TEST(Triangle, MatchesBruteCountAndIndex) {
  for (const ExactReal& phi1 : {quad(0, 1, 1, 2), quad(1, 1, 2, 5), quad(0, 1, 1, 3)}) {
    const IndexEvaluator eval(ellipsoid_system(phi1), 40);
    for (std::int64_t m1 = 0; m1 <= 12; ++m1)
      for (std::int64_t m2 = 0; m1 + m2 <= 12; ++m2) {
        const Integer count = triangle_lattice_count(phi1, m1, m2);
        EXPECT_EQ(count, brute_triangle(phi1, m1, m2));
        EXPECT_EQ(eval.ech_index(Generator{{m1, m2}}), 2 * (count - 1));
      }
  }
}

TEST(EllipsoidVerify, PassesForQuadraticIrrationals) {
  for (const ExactReal& phi1 : {quad(0, 1, 1, 2), quad(1, 1, 2, 5), quad(0, 1, 1, 3)}) {
    const EllipsoidVerification v = ellipsoid_verify(phi1, 200);
    EXPECT_TRUE(v.pass) << phi1.to_string() << " " << v.first_discrepancy.value_or("");
    EXPECT_EQ(v.generators, 101u);
  }
  EXPECT_THROW(ellipsoid_verify(ExactReal::rational(Integer(3), Integer(2)), 20), std::invalid_argument);
}

TEST(Growth, FitRequiresFourSamples) {
  EXPECT_THROW(growth_exponent(load_system_preset("ellipsoid-sqrt2"), {100, 200, 300}), std::invalid_argument);
  EXPECT_THROW(fit_growth({{1, 1}, {2, 2}, {3, 3}}), std::invalid_argument);
}

TEST(Growth, ExactPowerLawRecovered) {
  std::vector<std::pair<std::int64_t, std::size_t>> samples;
  for (std::int64_t k : {100, 400, 900, 1600, 2500, 3600}) samples.emplace_back(k, static_cast<std::size_t>(k * k));
  const GrowthFit fit = fit_growth(samples);
  EXPECT_NEAR(fit.exponent, 2.0, 1e-9);
  EXPECT_NEAR(fit.max_residual, 0.0, 1e-9);
}

TEST(Growth, EllipsoidIsLinear) {
  const GrowthFit fit = growth_exponent(load_system_preset("ellipsoid-sqrt2"), {200, 400, 800, 1600, 3200});
  EXPECT_NEAR(fit.exponent, 1.0, 0.05);
  for (const auto& [k, count] : fit.samples) EXPECT_EQ(count, static_cast<std::size_t>(k / 2 + 1));
}

TEST(Shells, MinimumIndex) {
  const OrbitSystem e = load_system_preset("ellipsoid-sqrt2");
  std::vector<std::int64_t> radii;
  for (std::int64_t r = 0; r <= 40; ++r) radii.push_back(r);
  const auto shells = min_index_on_shells(e, radii);
  ASSERT_EQ(shells.size(), radii.size());
  EXPECT_EQ(shells[0].min_index, Integer(0));
  EXPECT_EQ(shells[1].min_index, Integer(2));
  const QuadraticLowerFit fit = fit_quadratic_lower_bound(shells);
  EXPECT_GT(fit.c1, 0.0);
  const IndexEvaluator eval(e, 40);
  for (std::int64_t r = 0; r <= 12; ++r) {
    std::optional<Integer> best;
    for (std::int64_t m1 = 0; m1 <= r; ++m1)
      for (std::int64_t m2 = 0; m2 <= r; ++m2) {
        const std::int64_t norm = m1 * m1 + m2 * m2;
        if (norm > r * r || (r > 0 && norm <= (r - 1) * (r - 1))) continue;
        const Integer index = eval.ech_index(Generator{{m1, m2}});
        if (!best || index < *best) best = index;
      }
    EXPECT_EQ(shells[r].min_index, best) << r;
  }
}
