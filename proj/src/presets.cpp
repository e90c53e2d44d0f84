#include "echlab/presets.hpp"

#include "echlab/census.hpp"

#include <stdexcept>

namespace echlab {

namespace {

ExactReal sqrt_of(long d, long den = 1) { return ExactReal::quadratic(Integer(0), Integer(1), Integer(den), Integer(d)); }

ExactReal golden() { return ExactReal::quadratic(Integer(1), Integer(1), Integer(2), Integer(5)); }

std::vector<std::vector<Integer>> uniform_linking(std::size_t n, long q) {
  std::vector<std::vector<Integer>> out(n, std::vector<Integer>(n, Integer(q)));
  for (std::size_t i = 0; i < n; ++i) out[i][i] = 0;
  return out;
}

OrbitSystem single_orbit() {
  OrbitSystem system;
  system.orbits.push_back(Orbit::elliptic("gamma", Rational(1), sqrt_of(2)));
  system.linking = uniform_linking(1, 0);
  return system;
}

OrbitSystem three_orbit() {
  OrbitSystem system;
  system.orbits.push_back(Orbit::elliptic("gamma1", Rational(1), sqrt_of(2)));
  system.orbits.push_back(Orbit::elliptic("gamma2", Rational(1), sqrt_of(3)));
  system.orbits.push_back(Orbit::elliptic("gamma3", Rational(1), sqrt_of(5)));
  system.linking = uniform_linking(3, 1);
  return system;
}

OrbitSystem lens3(long q12) {
  OrbitSystem system;
  system.orbits.push_back(Orbit::elliptic("gamma1", Rational(1), sqrt_of(2), {Integer(1)}));
  system.orbits.push_back(Orbit::elliptic("gamma2", Rational(1), sqrt_of(2, 2), {Integer(2)}));
  system.linking = uniform_linking(2, q12);
  system.homology.orders = {Integer(3)};
  return system;
}

OrbitSystem eh_system() {
  OrbitSystem system;
  system.orbits.push_back(Orbit::elliptic("e", Rational(1), sqrt_of(2)));
  system.orbits.push_back(Orbit::hyperbolic("h", OrbitKind::positive_hyperbolic));
  system.linking = uniform_linking(2, 0);
  return system;
}

std::vector<Preset> build_presets() {
  std::vector<Preset> out;
  out.push_back({"ellipsoid-sqrt2", "irrational ellipsoid, phi1 = sqrt(2), phi2 = 1/phi1", ellipsoid_system(sqrt_of(2))});
  out.push_back({"ellipsoid-golden", "irrational ellipsoid, phi1 = (1+sqrt(5))/2", ellipsoid_system(golden())});
  out.push_back({"ellipsoid-sqrt3", "irrational ellipsoid, phi1 = sqrt(3)", ellipsoid_system(sqrt_of(3))});
  out.push_back({"single-orbit", "one elliptic orbit, eta = 1, phi = sqrt(2)", single_orbit()});
  out.push_back({"three-orbit", "three elliptic orbits, phi = sqrt(2), sqrt(3), sqrt(5), Q_ij = 1", three_orbit()});
  out.push_back({"lens3", "two orbits in H_1 = Z/3, classes 1 and 2, Q12 = 1", lens3(1)});
  out.push_back({"lens3-indefinite", "lens3 data with Q12 = -2 (Qbar indefinite on the quadrant)", lens3(-2)});
  out.push_back({"eh-system", "one elliptic and one positive hyperbolic orbit", eh_system()});

  AffineTorusMap rotation;
  rotation.A = IntMatrix::identity(2);
  rotation.b = {sqrt_of(2, 2), ExactReal::rational(Integer(1), Integer(3))};
  out.push_back({"irrational-rotation", "torus rotation by (sqrt(2)/2, 1/3)", rotation});

  AffineTorusMap twist;
  twist.A = IntMatrix{{1, 1}, {0, 1}};
  twist.b = {ExactReal::rational(Integer(0)), sqrt_of(2, 2)};
  out.push_back({"twist", "Dehn twist composed with translation (0, sqrt(2)/2)", twist});

  AffineTorusMap anosov;
  anosov.A = IntMatrix{{2, 1}, {1, 1}};
  out.push_back({"anosov", "cat map [[2,1],[1,1]], no translation", anosov});
  return out;
}

const std::vector<Preset>& all_presets() {
  static const std::vector<Preset> presets = build_presets();
  return presets;
}

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const Preset& p : all_presets()) out.push_back(p.name);
    return out;
  }();
  return names;
}

Preset load_preset(std::string_view name) {
  for (const Preset& p : all_presets())
    if (p.name == name) return p;
  throw std::invalid_argument("unknown preset '" + std::string(name) + "'");
}

OrbitSystem load_system_preset(std::string_view name) {
  Preset p = load_preset(name);
  if (!p.is_orbit_system()) throw std::invalid_argument("preset '" + p.name + "' is a torus map, not an orbit system");
  return std::get<OrbitSystem>(std::move(p.value));
}

AffineTorusMap load_torus_preset(std::string_view name) {
  Preset p = load_preset(name);
  if (p.is_orbit_system()) throw std::invalid_argument("preset '" + p.name + "' is an orbit system, not a torus map");
  return std::get<AffineTorusMap>(std::move(p.value));
}

}  // namespace echlab
