#pragma once

// Named example systems: irrational ellipsoids, a single orbit, three orbits,
// two-orbit lens space data, an elliptic/hyperbolic pair and torus maps.

#include "echlab/lefschetz.hpp"
#include "echlab/orbit_model.hpp"

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace echlab {

struct Preset {
  std::string name;
  std::string description;
  std::variant<OrbitSystem, AffineTorusMap> value;

  bool is_orbit_system() const noexcept { return std::holds_alternative<OrbitSystem>(value); }
};

/// All preset names in listing order.
const std::vector<std::string>& preset_names();

/// Throws std::invalid_argument("unknown preset ...") for an unknown name.
Preset load_preset(std::string_view name);

/// Orbit-system presets only; throws std::invalid_argument otherwise.
OrbitSystem load_system_preset(std::string_view name);
/// Torus-map presets only; throws std::invalid_argument otherwise.
AffineTorusMap load_torus_preset(std::string_view name);

}  // namespace echlab
