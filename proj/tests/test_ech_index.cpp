#include "echlab/ech_index.hpp"
#include "echlab/presets.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <random>

using namespace echlab;

namespace {

ExactReal sqrt_of(long d, long r = 1) { return ExactReal::quadratic(Integer(0), Integer(1), Integer(r), Integer(d)); }

OrbitSystem two_orbit(const ExactReal& phi1, const ExactReal& phi2, long q12) {
  OrbitSystem system;
  system.orbits.push_back(Orbit::elliptic("a", Rational(1), phi1, {}));
  system.orbits.push_back(Orbit::elliptic("b", Rational(1), phi2, {}));
  system.linking = {{Integer(0), Integer(q12)}, {Integer(q12), Integer(0)}};
  return system;
}

// Independent evaluation of I by hand: floors via Integer arithmetic on the
// float-free representation (p + q sqrt d) / r, using mpz_sqrt for isqrt.
Integer naive_floor_mult(const ExactReal& x, long k) {
  if (x.is_rational()) {
    Integer out;
    const Rational v = x.rational_value() * Rational(k);
    mpz_fdiv_q(out.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
    return out;
  }
  // floor((k p + k q sqrt d) / r): find the largest n with n r <= k p + k q sqrt d.
  const Integer kp = Integer(k) * x.p();
  const Integer kq = Integer(k) * x.q();
  auto le = [&](const Integer& n) {
    // n r - k p <= k q sqrt d
    const Integer lhs = n * x.r() - kp;
    if (sgn(kq) >= 0) return sgn(lhs) <= 0 || lhs * lhs <= kq * kq * x.d();
    return sgn(lhs) <= 0 && lhs * lhs >= kq * kq * x.d();
  };
  Integer lo = -1, hi = 1;
  while (!le(lo)) lo *= 2;
  while (le(hi)) hi *= 2;
  while (hi - lo > 1) {
    const Integer mid = Integer(lo + hi) / 2;
    if (le(mid)) lo = mid; else hi = mid;
  }
  return lo;
}

Integer naive_index(const OrbitSystem& s, const std::vector<std::int64_t>& m) {
  Rational half = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    half += Rational(m[i]) * *s.orbits[i].eta;
    for (std::size_t j = i + 1; j < m.size(); ++j) half += Rational(m[i] * m[j]) * Rational(s.linking[i][j]);
    for (long k = 1; k <= m[i]; ++k) half += Rational(naive_floor_mult(*s.orbits[i].phi, k));
  }
  const Rational total = 2 * half;
  EXPECT_EQ(total.get_den(), 1);
  return total.get_num();
}

std::vector<std::string> elliptic_presets() {
  return {"ellipsoid-sqrt2", "ellipsoid-golden", "ellipsoid-sqrt3", "single-orbit", "three-orbit", "lens3",
          "lens3-indefinite"};
}

}  // namespace

TEST(ConleyZehnder, Examples) {
  EXPECT_EQ(conley_zehnder(sqrt_of(2), 1), 3);
  EXPECT_EQ(conley_zehnder(ExactReal::quadratic(Integer(-1), Integer(1), Integer(1), Integer(2)), 1), 1);
  EXPECT_EQ(conley_zehnder(sqrt_of(2), 3), 9);
}

TEST(ConleyZehnder, OddAndMonotone) {
  for (const ExactReal& theta : {sqrt_of(2), sqrt_of(3, 7), ExactReal::quadratic(Integer(1), Integer(1), Integer(2), Integer(5))}) {
    Integer previous = conley_zehnder(theta, 1);
    for (std::int64_t k = 1; k <= 300; ++k) {
      const Integer cz = conley_zehnder(theta, k);
      EXPECT_TRUE(mpz_odd_p(cz.get_mpz_t()));
      EXPECT_GE(cz, previous);
      previous = cz;
    }
  }
  EXPECT_TRUE(mpz_odd_p(conley_zehnder(-sqrt_of(5), 17).get_mpz_t()));
}

TEST(EchIndex, EllipsoidExamples) {
  const OrbitSystem e = load_system_preset("ellipsoid-sqrt2");
  EXPECT_EQ(ech_index(e, Generator{{0, 0}}), 0);
  EXPECT_EQ(ech_index(e, Generator{{0, 1}}), 2);
  EXPECT_EQ(ech_index(e, Generator{{1, 0}}), 4);
  EXPECT_EQ(ech_index(e, Generator{{1, 1}}), 8);
  EXPECT_EQ(ech_index(e, Generator{{2, 0}}), 10);

  EXPECT_EQ(j0_index(e, Generator{{0, 0}}), 0);
  EXPECT_EQ(j0_index(e, Generator{{1, 1}}), 0);
  EXPECT_EQ(j0_index(e, Generator{{1, 0}}), -1);

  EXPECT_EQ(index_identity_residual(e, Generator{{1, 1}}), 8);
  EXPECT_EQ(index_identity_residual(e, Generator{{2, 0}}), 9);
  EXPECT_EQ(index_identity_residual(e, Generator{{0, 0}}), 0);
}

TEST(EchIndex, AgreesWithNaiveEvaluation) {
  std::mt19937_64 rng(31);
  for (const std::string& name : elliptic_presets()) {
    const OrbitSystem s = load_system_preset(name);
    const IndexEvaluator eval(s, 16);
    std::uniform_int_distribution<std::int64_t> entry(0, 40);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<std::int64_t> m(s.orbits.size());
      for (auto& x : m) x = entry(rng);
      if (!eval.is_nullhomologous(Generator{m})) continue;
      EXPECT_EQ(eval.ech_index(Generator{m}), naive_index(s, m)) << name;
    }
  }
}

TEST(EchIndex, Errors) {
  const OrbitSystem lens = load_system_preset("lens3");
  EXPECT_THROW(ech_index(lens, Generator{{1, 0}}), std::invalid_argument);
  const OrbitSystem eh = load_system_preset("eh-system");
  EXPECT_THROW(ech_index(eh, Generator{{1, 1}}), std::invalid_argument);
  EXPECT_THROW(qbar(eh, Generator{{1, 1}}), std::invalid_argument);
  EXPECT_NO_THROW(qbar(eh, Generator{{1, 0}}));

  OrbitSystem third = load_system_preset("single-orbit");
  third.orbits[0].eta = Rational(1, 3);
  EXPECT_THROW(ech_index(third, Generator{{1}}), std::domain_error);
  EXPECT_EQ(ech_index(third, Generator{{3}}), 2 * (1 + 1 + 2 + 4));
}

TEST(Mod2Grading, Examples) {
  EXPECT_EQ(mod2_grading(load_system_preset("ellipsoid-sqrt2"), Generator{{3, 4}}), 0);
  const OrbitSystem eh = load_system_preset("eh-system");
  EXPECT_EQ(mod2_grading(eh, Generator{{5, 1}}), 1);
  EXPECT_EQ(mod2_grading(eh, Generator{{5, 0}}), 0);

  OrbitSystem hh;
  hh.orbits.push_back(Orbit::hyperbolic("h1", OrbitKind::positive_hyperbolic, {}));
  hh.orbits.push_back(Orbit::hyperbolic("h2", OrbitKind::positive_hyperbolic, {}));
  hh.linking.assign(2, std::vector<Integer>(2, Integer(0)));
  EXPECT_EQ(mod2_grading(hh, Generator{{1, 1}}), 0);
}

TEST(Qbar, Examples) {
  const OrbitSystem e = load_system_preset("ellipsoid-sqrt2");
  EXPECT_EQ(qbar(e, Generator{{1, 0}}), SurdSum::term(Rational(1), Integer(2)));
  EXPECT_EQ(qbar(e, Generator{{1, 1}}),
            SurdSum(Rational(2)) + SurdSum::term(Rational(1), Integer(2)) + SurdSum::term(Rational(1, 2), Integer(2)));
  EXPECT_TRUE(qbar(e, Generator{{0, 0}}).is_zero());
  const IndexEvaluator eval(e);
  const std::vector<Rational> real{Rational(1, 2), Rational(1, 2)};
  EXPECT_EQ(eval.qbar(std::span<const Rational>(real)),
            SurdSum(Rational(1, 2)) + SurdSum::term(Rational(3, 8), Integer(2)));
}

TEST(QuadrantCertificate, Examples) {
  EXPECT_EQ(qbar_quadrant_positive(load_system_preset("ellipsoid-sqrt2")).verdict, QuadrantVerdict::positive);
  EXPECT_EQ(qbar_quadrant_positive(two_orbit(sqrt_of(2), sqrt_of(2, 2), -2)).verdict, QuadrantVerdict::indefinite);
  EXPECT_EQ(qbar_quadrant_positive(two_orbit(sqrt_of(2), sqrt_of(2), 0)).verdict, QuadrantVerdict::positive);
  // Q12^2 = phi1 phi2 exactly: a null direction on the boundary of positivity.
  const QuadrantCertificate degenerate = qbar_quadrant_positive(two_orbit(sqrt_of(2), sqrt_of(2, 2), -1));
  EXPECT_EQ(degenerate.verdict, QuadrantVerdict::degenerate_direction);
  ASSERT_TRUE(degenerate.null_direction.has_value());
  EXPECT_EQ(qbar_quadrant_positive(two_orbit(sqrt_of(2), sqrt_of(3), -1)).verdict, QuadrantVerdict::positive);
  EXPECT_THROW(qbar_quadrant_positive(load_system_preset("eh-system")), std::invalid_argument);
}

TEST(QuadrantCertificate, PositiveImpliesQbarPositiveOnIntegerPoints) {
  const std::vector<OrbitSystem> systems = {
      load_system_preset("ellipsoid-sqrt2"), load_system_preset("ellipsoid-golden"), load_system_preset("three-orbit"),
      load_system_preset("lens3"), two_orbit(sqrt_of(2), sqrt_of(3), -1), two_orbit(sqrt_of(5), sqrt_of(2, 3), 0)};
  for (const OrbitSystem& s : systems) {
    if (qbar_quadrant_positive(s).verdict != QuadrantVerdict::positive) continue;
    const IndexEvaluator eval(s);
    const std::size_t n = s.orbits.size();
    std::vector<std::int64_t> m(n, 0);
    std::function<void(std::size_t, std::int64_t)> walk = [&](std::size_t i, std::int64_t left) {
      if (i == n) {
        if (left < 40) EXPECT_GT(eval.qbar(std::span<const std::int64_t>(m)).sign(), 0);
        return;
      }
      for (std::int64_t v = 0; v <= left; ++v) {
        m[i] = v;
        walk(i + 1, left - v);
      }
      m[i] = 0;
    };
    walk(0, 40);
  }
}

TEST(IndexEnvelope, Examples) {
  const OrbitSystem e = load_system_preset("ellipsoid-sqrt2");
  const IndexEnvelope one = index_envelope(e, Generator{{1, 0}});
  EXPECT_EQ(one.hi, 4);
  EXPECT_TRUE(one.contains(4));
  EXPECT_EQ(index_envelope(e, Generator{{0, 0}}), (IndexEnvelope{0, 0}));
  EXPECT_TRUE(index_envelope(e, Generator{{2, 0}}).contains(10));
}

TEST(IndexProperties, ParityIdentityEnvelope) {
  for (const std::string& name : elliptic_presets()) {
    const OrbitSystem s = load_system_preset(name);
    const IndexEvaluator eval(s);
    const std::size_t n = s.orbits.size();
    std::vector<std::int64_t> m(n, 0);
    std::function<void(std::size_t, std::int64_t)> walk = [&](std::size_t i, std::int64_t left) {
      if (i == n) {
        const Generator g{m};
        if (!eval.is_nullhomologous(g)) return;
        const Integer index = eval.ech_index(g);
        EXPECT_TRUE(mpz_even_p(index.get_mpz_t())) << name << " " << g.to_string();
        EXPECT_EQ(index - eval.j0_index(g), eval.identity_residual(g));
        const IndexEnvelope env = eval.envelope(g);
        EXPECT_TRUE(env.contains(index)) << name << " " << g.to_string();
        std::int64_t total = 0;
        for (std::int64_t x : m) total += x;
        EXPECT_LE(env.hi - env.lo, 2 * (total + 1));
        return;
      }
      for (std::int64_t v = 0; v <= left; ++v) {
        m[i] = v;
        walk(i + 1, left - v);
      }
      m[i] = 0;
    };
    walk(0, n >= 3 ? 18 : 30);
  }
}

TEST(IndexProperties, RandomIdentityAndTelescoping) {
  std::mt19937_64 rng(32);
  std::uniform_int_distribution<std::int64_t> entry(0, 50);
  for (const std::string& name : elliptic_presets()) {
    const OrbitSystem s = load_system_preset(name);
    const IndexEvaluator eval(s, 50);
    auto draw = [&] {
      while (true) {
        std::vector<std::int64_t> m(s.orbits.size());
        for (auto& x : m) x = entry(rng);
        if (eval.is_nullhomologous(Generator{m})) return Generator{m};
      }
    };
    for (int trial = 0; trial < 300; ++trial) {
      const Generator a = draw(), b = draw(), c = draw();
      EXPECT_EQ(eval.ech_index(a) - eval.j0_index(a), eval.identity_residual(a));
      const Integer ia = eval.ech_index(a), ib = eval.ech_index(b), ic = eval.ech_index(c);
      EXPECT_EQ(ia - ic, (ia - ib) + (ib - ic));
    }
  }
}

TEST(EndBounds, IntersectionBoundExamples) {
  EXPECT_EQ(intersection_bound(EndData{}), 0);
  EndData plus;
  plus.ends.push_back(EndRecord{0, 1, EndSign::positive, sqrt_of(2)});
  EXPECT_EQ(intersection_bound(plus), 1);
  EndData minus;
  minus.ends.push_back(EndRecord{0, 2, EndSign::negative, sqrt_of(2)});
  EXPECT_EQ(intersection_bound(minus), -6);
  minus.q_tau = 4;
  EXPECT_EQ(intersection_bound(minus), -2);

  EndData degenerate;
  degenerate.ends.push_back(EndRecord{0, 2, EndSign::positive, ExactReal::rational(Integer(1), Integer(2))});
  EXPECT_THROW(intersection_bound(degenerate), std::invalid_argument);
  EndData missing;
  missing.ends.push_back(EndRecord{0, 1, EndSign::positive, std::nullopt});
  EXPECT_THROW(intersection_bound(missing), std::invalid_argument);
}

TEST(EndBounds, GenusBoundExamples) {
  EndData two_ends;
  two_ends.ends = {EndRecord{0, 1, EndSign::positive, {}}, EndRecord{1, 1, EndSign::negative, {}}};
  EXPECT_EQ(genus_bound(2, two_ends), Integer(1));

  EndData one_end;
  one_end.ends = {EndRecord{0, 1, EndSign::positive, {}}};
  EXPECT_EQ(genus_bound(-1, one_end), Integer(0));

  EndData doubled;
  doubled.ends = {EndRecord{0, 1, EndSign::positive, {}}, EndRecord{0, 2, EndSign::positive, {}}};
  EXPECT_FALSE(genus_bound(0, doubled).has_value());
}

TEST(EndBounds, CylinderCriterionExamples) {
  EndData ends;
  ends.ends = {EndRecord{0, 1, EndSign::positive, {}}, EndRecord{1, 1, EndSign::negative, {}}};
  ends.trivial_cylinders = {0, 1};
  const std::vector<std::int64_t> m{1, 1}, mp{1, 1};
  EXPECT_EQ(cylinder_criterion(2, ends, m, mp).verdict, CylinderVerdict::cylinder);
  EXPECT_EQ(cylinder_criterion(1, ends, m, mp).verdict, CylinderVerdict::infeasible);
  const CylinderReport four = cylinder_criterion(4, ends, m, mp);
  EXPECT_EQ(four.verdict, CylinderVerdict::not_cylinder);
  EXPECT_TRUE(four.genus_bound.has_value());

  const std::vector<std::int64_t> zero{0, 1};
  EXPECT_THROW(cylinder_criterion(2, ends, zero, mp), std::invalid_argument);
  EndData one_sided;
  one_sided.ends = {EndRecord{0, 1, EndSign::positive, {}}};
  EXPECT_THROW(cylinder_criterion(2, one_sided, m, mp), std::invalid_argument);
}
