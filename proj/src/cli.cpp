#include "echlab/cli.hpp"

#include "echlab/approximation_sets.hpp"
#include "echlab/census.hpp"
#include "echlab/ech_index.hpp"
#include "echlab/lefschetz.hpp"
#include "echlab/presets.hpp"
#include "echlab/serialization.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace echlab {

namespace {

// Thrown when a report was produced but its verdict is negative.
struct VerificationFailure {};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

OrbitSystem load_system(const std::string& path, const std::string& preset) {
  if (path.empty() == preset.empty()) throw std::invalid_argument("give exactly one of --system or --preset");
  OrbitSystem system = path.empty() ? load_system_preset(preset)
                                    : parse_json_text(read_file(path), path).get<OrbitSystem>();
  const ValidationReport report = validate_system(system);
  if (!report.ok()) {
    std::string message = "invalid orbit system:";
    for (const std::string& v : report.violations) message += " " + v + ";";
    throw std::invalid_argument(message);
  }
  return system;
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  const std::string trimmed = text.empty() || text.front() != '[' ? "[" + text + "]" : text;
  std::vector<std::int64_t> out;
  const Json j = parse_json_text(trimmed, "integer list");
  if (!j.is_array()) throw std::invalid_argument("expected a list of integers, got '" + text + "'");
  for (const Json& v : j) {
    const Integer value = integer_from_json(v);
    if (!fits_int64(value)) throw std::invalid_argument("integer out of range: " + value.get_str());
    out.push_back(to_int64(value));
  }
  return out;
}

std::string fixed(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.10f", value);
  return buffer;
}

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

void cmd_index(std::ostream& out, const std::string& system_path, const std::string& preset, const std::string& m_text,
               std::int64_t random_count, std::int64_t mmax, std::uint64_t seed) {
  const OrbitSystem system = load_system(system_path, preset);
  const IndexEvaluator evaluator(system, std::max<std::int64_t>(mmax, 64));
  if (!m_text.empty()) {
    const Generator g{parse_int_list(m_text)};
    emit_json(out, evaluator.report(g));
    return;
  }
  if (random_count <= 0) throw std::invalid_argument("index needs --m or --random");
  if (mmax < 0) throw std::invalid_argument("--mmax must be nonnegative");
  std::mt19937_64 rng(seed);
  Json reports = Json::array();
  const std::int64_t attempts = 1000 * random_count;
  for (std::int64_t attempt = 0; attempt < attempts && static_cast<std::int64_t>(reports.size()) < random_count;
       ++attempt) {
    Generator g{std::vector<std::int64_t>(system.size())};
    for (std::size_t i = 0; i < system.size(); ++i) {
      const std::int64_t top = system.orbits[i].is_elliptic() ? mmax : std::min<std::int64_t>(mmax, 1);
      g.multiplicities[i] = std::uniform_int_distribution<std::int64_t>(0, top)(rng);
    }
    if (evaluator.is_nullhomologous(g)) reports.push_back(evaluator.report(g));
  }
  emit_json(out, Json{{"seed", seed}, {"reports", std::move(reports)}});
}

void cmd_census(std::ostream& out, const std::string& system_path, const std::string& preset, std::int64_t imax,
                const std::string& box_text, const std::string& format) {
  const OrbitSystem system = load_system(system_path, preset);
  BoundStrategy bounds;
  if (!box_text.empty()) bounds.box = parse_int_list(box_text);
  const CensusResult census = enumerate_generators(system, imax, bounds);
  if (format == "json") {
    emit_json(out, census);
    return;
  }
  const IndexEvaluator evaluator(system, census.search_radius.value_or(64));
  for (std::size_t i = 0; i < system.size(); ++i) out << "m_" << i + 1 << ',';
  out << "I,J0,mod2\n";
  for (const CensusEntry& e : census.entries) {
    for (std::int64_t m : e.generator.multiplicities) out << m << ',';
    out << e.index.get_str() << ',' << evaluator.j0_index(e.generator).get_str() << ','
        << evaluator.mod2_grading(e.generator) << '\n';
  }
}

void cmd_ellipsoid_verify(std::ostream& out, const std::string& phi_text, std::int64_t imax) {
  const ExactReal phi1 = parse_exact_real(phi_text);
  const EllipsoidVerification v = ellipsoid_verify(phi1, imax);
  Json j = v;
  j["phi1"] = phi1;
  j["imax"] = imax;
  emit_json(out, j);
  if (!v.pass) throw VerificationFailure{};
}

void cmd_growth(std::ostream& out, const std::string& system_path, const std::string& preset,
                const std::string& samples_text) {
  const OrbitSystem system = load_system(system_path, preset);
  emit_json(out, growth_exponent(system, parse_int_list(samples_text)));
}

void cmd_stheta(std::ostream& out, const std::string& theta_text, std::int64_t limit, const std::string& emit,
                std::int64_t samples) {
  const ExactReal theta = parse_exact_real(theta_text);
  if (limit < 1) throw std::invalid_argument("--max must be >= 1");
  if (emit == "members") {
    out << "q\n";
    for (std::int64_t q : s_theta_up_to(theta, limit)) out << q << '\n';
  } else if (emit == "densities") {
    const SThetaProfile profile = density_profile(theta, limit, samples);
    out << "n,members,density\n";
    for (const auto& [n, density] : profile.density_curve) {
      const Rational count = density * static_cast<long>(n);
      out << n << ',' << count.get_num().get_str() << ',' << fixed(density.get_d()) << '\n';
    }
  } else {
    out << "p,q\n";
    for (const Rational& r : semiconvergents_above(theta, limit))
      out << r.get_num().get_str() << ',' << r.get_den().get_str() << '\n';
  }
}

ZetaInstance zeta_instance_from_flags(const std::string& path, int genus, const std::string& a_text,
                                      const std::string& periods_text) {
  ZetaInstance instance;
  if (!path.empty()) {
    instance = parse_json_text(read_file(path), path).get<ZetaInstance>();
  } else {
    instance.genus = genus;
    if (!a_text.empty()) instance.A = parse_int_matrix(a_text);
    if (!periods_text.empty()) instance.periods = parse_int_list(periods_text);
  }
  validate_zeta_instance(instance);
  return instance;
}

void cmd_zeta_check(std::ostream& out, const ZetaInstance& instance, std::int64_t degree) {
  const std::int64_t sum = std::accumulate(instance.periods.begin(), instance.periods.end(), std::int64_t{0});
  if (degree <= 0) degree = std::max<std::int64_t>({2, sum, 2 * instance.genus});
  const ZetaCheck check = zeta_identity_check(instance, degree);
  Json j = check;
  j["instance"] = instance;
  j["degree"] = degree;
  emit_json(out, j);
  if (!check.pass) throw VerificationFailure{};
}

void cmd_zeta_solve(std::ostream& out, int gmax, std::int64_t psum, std::int64_t trace_bound) {
  const std::vector<ZetaSolution> solutions = zeta_solve(gmax, psum, trace_bound);
  Json list = Json::array();
  for (const ZetaSolution& s : solutions) list.push_back(s);
  emit_json(out, Json{{"gmax", gmax},
                      {"psum", psum},
                      {"trace_bound", trace_bound},
                      {"count", solutions.size()},
                      {"solutions", std::move(list)}});
}

void cmd_torus_map(std::ostream& out, const std::string& map_path, const std::string& preset,
                   const std::string& a_text, const std::vector<std::string>& b_text, std::int64_t pmax) {
  AffineTorusMap map;
  if (!map_path.empty() + !preset.empty() + !a_text.empty() > 1)
    throw std::invalid_argument("give one of --map, --preset or --A");
  if (!preset.empty() || !map_path.empty()) {
    if (!b_text.empty()) throw std::invalid_argument("--b goes with --A");
    map = preset.empty() ? parse_json_text(read_file(map_path), map_path).get<AffineTorusMap>() : load_torus_preset(preset);
  } else {
    if (a_text.empty()) throw std::invalid_argument("torus-map needs --map, --preset or --A");
    map.A = parse_int_matrix(a_text);
    if (!b_text.empty()) {
      if (b_text.size() != 2) throw std::invalid_argument("--b takes two components");
      map.b = {parse_exact_real(b_text[0]), parse_exact_real(b_text[1])};
    }
  }
  validate_torus_map(map);
  Json j = torus_orbit_report(map, pmax);
  j["map"] = map;
  emit_json(out, j);
}

void cmd_preset_list(std::ostream& out) {
  Json list = Json::array();
  for (const std::string& name : preset_names()) {
    const Preset p = load_preset(name);
    Json data = p.is_orbit_system() ? Json(std::get<OrbitSystem>(p.value)) : Json(std::get<AffineTorusMap>(p.value));
    list.push_back(Json{{"name", p.name},
                        {"type", p.is_orbit_system() ? "orbit-system" : "torus-map"},
                        {"description", p.description},
                        {"data", std::move(data)}});
  }
  emit_json(out, list);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact ECH index, census and periodic-orbit laboratory", "echlab"};
  app.require_subcommand(1);

  std::string output_path;
  std::uint64_t seed = 1;
  app.add_option("--output", output_path, "Write the report to this file instead of stdout");
  app.add_option("--seed", seed, "Seed for randomized sampling");

  std::string system_path, preset, m_text, box_text, format = "json", samples_text = "200,400,800,1200,1600,2000,3000,4000";
  std::string phi_text, theta_text, emit = "members", a_text, periods_text, instance_path;
  std::vector<std::string> b_text;
  std::int64_t imax = 0, random_count = 0, mmax = 50, limit = 0, density_samples = 100, degree = 0, psum = 0,
               trace_bound = 5, pmax = 100;
  int genus = 0, gmax = 0;

  const auto add_system = [&](CLI::App* cmd) {
    cmd->add_option("--system", system_path, "Orbit system JSON file");
    cmd->add_option("--preset", preset, "Built-in preset name");
  };

  CLI::App* index = app.add_subcommand("index", "ECH index report for one generator or random samples");
  add_system(index);
  index->add_option("--m", m_text, "Multiplicities, e.g. 1,2");
  index->add_option("--random", random_count, "Number of random nullhomologous generators");
  index->add_option("--mmax", mmax, "Maximal multiplicity for --random");

  CLI::App* census = app.add_subcommand("census", "All generators with I <= imax");
  add_system(census);
  census->add_option("--imax", imax, "Index cutoff")->required();
  census->add_option("--box", box_text, "Per-orbit multiplicity bounds, e.g. 64,64");
  census->add_option("--out", format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  CLI::App* ellipsoid = app.add_subcommand("ellipsoid-verify", "Check the irrational ellipsoid spectrum");
  ellipsoid->add_option("--phi1", phi_text, "sqrt2, golden, sqrt3, a/b or JSON")->required();
  ellipsoid->add_option("--imax", imax, "Index cutoff")->default_val(200);

  CLI::App* growth = app.add_subcommand("growth", "Fit the growth exponent of N(k)");
  add_system(growth);
  growth->add_option("--samples", samples_text, "Cutoffs k, e.g. 200,400,800,1600");

  CLI::App* stheta = app.add_subcommand("stheta", "Best approximations from above (CSV)");
  stheta->add_option("--theta", theta_text, "Angle theta")->required();
  stheta->add_option("--max", limit, "Largest denominator")->required();
  stheta->add_option("--emit", emit, "members, densities or semiconvergents")
      ->check(CLI::IsMember({"members", "densities", "semiconvergents"}));
  stheta->add_option("--samples", density_samples, "Sample points for densities");

  CLI::App* zeta_check = app.add_subcommand("zeta-check", "Lefschetz zeta product identity");
  zeta_check->add_option("--instance", instance_path, "Instance JSON file");
  zeta_check->add_option("--genus", genus, "Genus g");
  zeta_check->add_option("--A", a_text, "Induced map on H_1, e.g. [[1,0],[0,1]]");
  zeta_check->add_option("--periods", periods_text, "Periods, e.g. 1,1");
  zeta_check->add_option("--degree", degree, "Degree N (default: smallest admissible)");

  CLI::App* zeta_solve_cmd = app.add_subcommand("zeta-solve", "Solve the zeta identity for genus and periods");
  zeta_solve_cmd->add_option("--gmax", gmax, "Largest genus")->required();
  zeta_solve_cmd->add_option("--psum", psum, "Largest sum of periods")->required();
  zeta_solve_cmd->add_option("--trace-bound", trace_bound, "Trace range for genus 1");

  CLI::App* torus = app.add_subcommand("torus-map", "Periodic points of an affine torus map");
  torus->add_option("--map", instance_path, "Torus map JSON file");
  torus->add_option("--preset", preset, "Built-in torus preset");
  torus->add_option("--A", a_text, "2x2 integer matrix with det 1");
  torus->add_option("--b", b_text, "Translation components")->expected(2);
  torus->add_option("--pmax", pmax, "Largest period");

  CLI::App* preset_list = app.add_subcommand("preset-list", "List built-in presets as JSON");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_input_error;
  }

  std::ostringstream report;
  int status = exit_ok;
  try {
    if (index->parsed()) {
      cmd_index(report, system_path, preset, m_text, random_count, mmax, seed);
    } else if (census->parsed()) {
      cmd_census(report, system_path, preset, imax, box_text, format);
    } else if (ellipsoid->parsed()) {
      cmd_ellipsoid_verify(report, phi_text, imax);
    } else if (growth->parsed()) {
      cmd_growth(report, system_path, preset, samples_text);
    } else if (stheta->parsed()) {
      cmd_stheta(report, theta_text, limit, emit, density_samples);
    } else if (zeta_check->parsed()) {
      cmd_zeta_check(report, zeta_instance_from_flags(instance_path, genus, a_text, periods_text), degree);
    } else if (zeta_solve_cmd->parsed()) {
      cmd_zeta_solve(report, gmax, psum, trace_bound);
    } else if (torus->parsed()) {
      cmd_torus_map(report, instance_path, preset, a_text, b_text, pmax);
    } else if (preset_list->parsed()) {
      cmd_preset_list(report);
    }
  } catch (const VerificationFailure&) {
    status = exit_verification_failed;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_input_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_input_error;
  }

  if (output_path.empty()) {
    out << report.str();
  } else {
    std::ofstream file(output_path);
    if (!file) {
      err << "error: cannot write '" << output_path << "'\n";
      return exit_input_error;
    }
    file << report.str();
  }
  return status;
}

}  // namespace echlab
