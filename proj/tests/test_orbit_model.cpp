#include "echlab/orbit_model.hpp"
#include "echlab/presets.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace echlab;

namespace {

ExactReal sqrt_of(long d, long r = 1) { return ExactReal::quadratic(Integer(0), Integer(1), Integer(r), Integer(d)); }

OrbitSystem torsion_system(std::vector<long> orders, std::vector<std::vector<long>> classes) {
  OrbitSystem system;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    std::vector<Integer> cls(classes[i].begin(), classes[i].end());
    system.orbits.push_back(Orbit::elliptic("g" + std::to_string(i), Rational(1), sqrt_of(2 + static_cast<long>(i)), cls));
  }
  system.linking.assign(classes.size(), std::vector<Integer>(classes.size(), Integer(0)));
  for (long d : orders) system.homology.orders.emplace_back(d);
  return system;
}

// Direct congruence check: sum_i m_i class_i == 0 in every Z/d_j.
bool congruence_holds(const OrbitSystem& system, const std::vector<std::int64_t>& m) {
  for (std::size_t j = 0; j < system.homology.orders.size(); ++j) {
    Integer total = 0;
    for (std::size_t i = 0; i < m.size(); ++i) total += Integer(static_cast<long>(m[i])) * system.orbits[i].homology_class[j];
    const Integer& d = system.homology.orders[j];
    if (sgn(d) == 0) {
      if (sgn(total) != 0) return false;
    } else if (!mpz_divisible_p(total.get_mpz_t(), d.get_mpz_t())) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST(OrbitModel, EllipsoidPresetValidates) {
  const ValidationReport report = validate_system(load_system_preset("ellipsoid-sqrt2"));
  EXPECT_TRUE(report.ok());
  EXPECT_TRUE(report.degenerate_risk.empty());
  for (const std::string& name : preset_names()) {
    const Preset p = load_preset(name);
    if (p.is_orbit_system()) EXPECT_TRUE(validate_system(std::get<OrbitSystem>(p.value)).ok()) << name;
  }
}

TEST(OrbitModel, ValidationFindsViolations) {
  OrbitSystem system = load_system_preset("ellipsoid-sqrt2");
  system.linking[0][1] = 2;
  ValidationReport report = validate_system(system);
  ASSERT_FALSE(report.ok());
  EXPECT_NE(std::find(report.violations.begin(), report.violations.end(), "linking not symmetric"),
            report.violations.end());

  system = load_system_preset("ellipsoid-sqrt2");
  system.orbits[1].name = system.orbits[0].name;
  EXPECT_FALSE(validate_system(system).ok());

  system = load_system_preset("ellipsoid-sqrt2");
  system.orbits[0].phi = ExactReal::rational(Integer(1), Integer(2));
  report = validate_system(system);
  EXPECT_TRUE(report.ok());
  EXPECT_EQ(report.degenerate_risk, std::vector<std::string>{"gamma1"});
}

TEST(OrbitModel, RawConstantsConvert) {
  // eta = (c - Q + 1) / 2, phi = Q + theta.
  const Orbit o = Orbit::elliptic_from_raw("x", Integer(3), Integer(1), sqrt_of(2, 2));
  EXPECT_EQ(*o.eta, Rational(3, 2));
  EXPECT_EQ(*o.phi, ExactReal::quadratic(Integer(2), Integer(1), Integer(2), Integer(2)));
}

TEST(OrbitModel, OrbitOrderExamples) {
  EXPECT_EQ(orbit_order(torsion_system({3}, {{1}}).orbits[0], Homology{{Integer(3)}}), 3);
  EXPECT_EQ(orbit_order(torsion_system({4}, {{2}}).orbits[0], Homology{{Integer(4)}}), 2);
  EXPECT_EQ(orbit_order(torsion_system({3, 4}, {{1, 2}}).orbits[0], Homology{{Integer(3), Integer(4)}}), 6);
  EXPECT_THROW(orbit_order(torsion_system({0}, {{1}}).orbits[0], Homology{{Integer(0)}}), std::invalid_argument);
  EXPECT_EQ(orbit_order(torsion_system({0}, {{0}}).orbits[0], Homology{{Integer(0)}}), 1);
}

TEST(OrbitModel, OrbitOrderDividesEveryAnnihilator) {
  for (long d1 = 1; d1 <= 8; ++d1)
    for (long d2 = 1; d2 <= 6; ++d2)
      for (long a1 = 0; a1 < d1; ++a1)
        for (long a2 = 0; a2 < d2; ++a2) {
          const OrbitSystem s = torsion_system({d1, d2}, {{a1, a2}});
          const Integer l = orbit_order(s.orbits[0], s.homology);
          long smallest = 0;
          for (long k = 1; k <= 4 * l.get_si(); ++k) {
            if ((k * a1) % d1 == 0 && (k * a2) % d2 == 0) {
              if (smallest == 0) smallest = k;
              EXPECT_EQ(k % l.get_si(), 0);
            }
          }
          EXPECT_EQ(smallest, l.get_si());
        }
}

TEST(NullhomologousLattice, LensExample) {
  const OrbitSystem lens = load_system_preset("lens3");
  const NullhomologousLattice lattice = nullhomologous_lattice(lens);
  EXPECT_EQ(lattice.index(), 3);
  EXPECT_TRUE(lattice.contains(Generator{{1, 1}}));
  EXPECT_FALSE(lattice.contains(Generator{{1, 0}}));
  EXPECT_TRUE(lattice.contains(Generator{{0, 3}}));
}

TEST(NullhomologousLattice, TrivialAndZ2) {
  EXPECT_EQ(nullhomologous_lattice(load_system_preset("ellipsoid-sqrt2")).index(), 1);
  const NullhomologousLattice z2 = nullhomologous_lattice(torsion_system({2}, {{1}, {1}}));
  EXPECT_EQ(z2.index(), 2);
  for (std::int64_t a = -6; a <= 6; ++a)
    for (std::int64_t b = -6; b <= 6; ++b) {
      const std::vector<std::int64_t> m{a, b};
      EXPECT_EQ(z2.contains(m), (a + b) % 2 == 0);
    }
}

TEST(NullhomologousLattice, MembershipAgreesWithCongruences) {
  const std::vector<std::pair<std::vector<long>, std::vector<std::vector<long>>>> cases = {
      {{3}, {{1}, {2}}},
      {{4, 6}, {{1, 2}, {2, 3}}},
      {{5}, {{0}, {0}}},
      {{2, 2}, {{1, 0}, {0, 1}}},
      {{12}, {{4}, {6}}},
      {{0, 3}, {{0, 1}, {0, 1}}},
  };
  for (const auto& [orders, classes] : cases) {
    const OrbitSystem system = torsion_system(orders, classes);
    const NullhomologousLattice lattice = nullhomologous_lattice(system);
    for (std::int64_t a = -20; a <= 20; ++a)
      for (std::int64_t b = -20; b <= 20; ++b) {
        const std::vector<std::int64_t> m{a, b};
        EXPECT_EQ(lattice.contains(m), congruence_holds(system, m)) << a << "," << b;
      }
  }
}

TEST(NullhomologousLattice, IndexEqualsGeneratedSubgroupOrder) {
  // Brute force: enumerate the subgroup of H_1 generated by the classes.
  for (long d1 = 1; d1 <= 8; ++d1)
    for (long d2 = 1; d2 <= 8; ++d2) {
      const OrbitSystem system = torsion_system({d1, d2}, {{1 % d1, 0}, {d1 > 1 ? 1 : 0, 1 % d2}, {0, 2 % d2}});
      std::set<std::pair<long, long>> subgroup;
      for (long x = 0; x < d1 * d2; ++x)
        for (long y = 0; y < d1 * d2; ++y)
          for (long z = 0; z < d2; ++z) {
            long u = 0, v = 0;
            const long coeff[3] = {x, y, z};
            for (std::size_t i = 0; i < 3; ++i) {
              u += coeff[i] * system.orbits[i].homology_class[0].get_si();
              v += coeff[i] * system.orbits[i].homology_class[1].get_si();
            }
            subgroup.emplace(u % d1, v % d2);
          }
      EXPECT_EQ(nullhomologous_lattice(system).index(), static_cast<long>(subgroup.size())) << d1 << " " << d2;
    }
}

TEST(NullhomologousLattice, NonTorsionThrows) {
  EXPECT_THROW(nullhomologous_lattice(torsion_system({0}, {{1}, {0}})), std::invalid_argument);
}

TEST(Generator, Validity) {
  const OrbitSystem eh = load_system_preset("eh-system");
  for (std::int64_t m = 0; m < 10; ++m) {
    EXPECT_TRUE(is_valid_generator(eh, Generator{{m, 0}}));
    EXPECT_TRUE(is_valid_generator(eh, Generator{{m, 1}}));
  }
  EXPECT_FALSE(is_valid_generator(eh, Generator{{0, 2}}));
  EXPECT_TRUE(is_valid_generator(load_system_preset("ellipsoid-sqrt2"), Generator{{7, 9}}));
  EXPECT_THROW(is_valid_generator(eh, Generator{{1}}), std::invalid_argument);
  EXPECT_EQ(Generator({{1, 0}}).to_string(), "(1,0)");
}
