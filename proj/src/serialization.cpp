#include "echlab/serialization.hpp"

#include <algorithm>
#include <cctype>
#include <regex>
#include <stdexcept>
#include <string>

namespace echlab {

namespace {

[[noreturn]] void fail(const std::string& message) { throw std::invalid_argument(message); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) fail(std::string("expected a JSON object with field '") + key + "'");
  const auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing field '") + key + "'");
  return *it;
}

bool has(const Json& j, const char* key) { return j.is_object() && j.contains(key) && !j.at(key).is_null(); }

std::string string_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) fail(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

bool bool_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_boolean()) fail(std::string("field '") + key + "' must be a boolean");
  return v.get<bool>();
}

double double_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number()) fail(std::string("field '") + key + "' must be a number");
  return v.get<double>();
}

std::int64_t int64_from_json(const Json& j) {
  const Integer value = integer_from_json(j);
  if (!fits_int64(value)) fail("integer out of range: " + value.get_str());
  return to_int64(value);
}

const Json& array_of(const Json& j, const char* what) {
  if (!j.is_array()) fail(std::string(what) + " must be a JSON array");
  return j;
}

Json matrix_to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t jj = 0; jj < m.cols(); ++jj) row.push_back(integer_to_json(m(i, jj)));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix matrix_from_json(const Json& j) {
  std::vector<std::vector<Integer>> rows;
  for (const Json& row : array_of(j, "matrix")) {
    std::vector<Integer> values;
    for (const Json& v : array_of(row, "matrix row")) values.push_back(integer_from_json(v));
    if (!rows.empty() && values.size() != rows.front().size()) fail("matrix rows have different lengths");
    rows.push_back(std::move(values));
  }
  return IntMatrix::from_rows(rows);
}

template <typename T>
Json int_vector_to_json(const std::vector<T>& values) {
  Json out = Json::array();
  for (const T& v : values) out.push_back(v);
  return out;
}

std::vector<std::int64_t> int64_vector_from_json(const Json& j, const char* what) {
  std::vector<std::int64_t> out;
  for (const Json& v : array_of(j, what)) out.push_back(int64_from_json(v));
  return out;
}

std::string trim(std::string_view text) {
  std::size_t a = 0, b = text.size();
  while (a < b && std::isspace(static_cast<unsigned char>(text[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(text[b - 1]))) --b;
  return std::string(text.substr(a, b - a));
}

}  // namespace

Json integer_to_json(const Integer& value) {
  if (fits_int64(value)) return Json(to_int64(value));
  return Json(value.get_str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
  if (j.is_string()) {
    static const std::regex pattern("-?[0-9]+");
    const std::string text = j.get<std::string>();
    if (!std::regex_match(text, pattern)) fail("not an integer: \"" + text + "\"");
    return Integer(text);
  }
  fail("expected an integer, got " + j.dump());
}

Json rational_to_json(const Rational& value) {
  return Json{{"num", integer_to_json(value.get_num())}, {"den", integer_to_json(value.get_den())}};
}

Rational rational_from_json(const Json& j) {
  if (!j.is_object()) return Rational(integer_from_json(j));
  const Integer den = integer_from_json(field(j, "den"));
  if (sgn(den) == 0) fail("zero denominator");
  Rational out(integer_from_json(field(j, "num")), den);
  out.canonicalize();
  return out;
}

Json parse_json_text(std::string_view text, std::string_view what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail("malformed JSON in " + std::string(what) + ": " + e.what());
  }
}

ExactReal parse_exact_real(std::string_view raw) {
  std::string text = trim(raw);
  if (!text.empty() && text.front() == '{') return parse_json_text(text, "exact real").get<ExactReal>();
  text.erase(std::remove_if(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); }), text.end());
  if (text.empty()) fail("empty exact real");
  // Sum of signed terms: [k*]base[/den] with base one of n, sqrtN, sqrt(N), golden.
  static const std::regex term_pattern(R"(([+-]?)(?:([0-9]+)\*)?(golden|sqrt\(?([0-9]+)\)?|[0-9]+)(?:/([0-9]+))?)");
  SurdSum sum;
  auto it = text.cbegin();
  std::smatch match;
  while (it != text.cend()) {
    if (!std::regex_search(it, text.cend(), match, term_pattern, std::regex_constants::match_continuous) ||
        match.length(0) == 0 || (it != text.cbegin() && match[1].length() == 0)) {
      fail("cannot parse exact real '" + text + "'");
    }
    const Integer factor = match[2].matched ? Integer(match[2].str()) : Integer(1);
    const Integer den = match[5].matched ? Integer(match[5].str()) : Integer(1);
    if (sgn(den) == 0) fail("zero denominator in '" + text + "'");
    Rational coef(factor, den);
    coef.canonicalize();
    if (match[1].str() == "-") coef = -coef;
    if (match[3].str() == "golden") {
      sum += SurdSum(Rational(coef / 2)) + SurdSum::term(Rational(coef / 2), Integer(5));
    } else if (match[4].matched) {
      sum += SurdSum::term(coef, Integer(match[4].str()));
    } else {
      sum += SurdSum(Rational(coef * Integer(match[3].str())));
    }
    it += match.length(0);
  }
  const auto value = sum.to_exact_real();
  if (!value) fail("'" + text + "' mixes several square roots");
  return *value;
}

IntMatrix parse_int_matrix(std::string_view raw) {
  const std::string text = trim(raw);
  if (!text.empty() && text.front() == '[') return matrix_from_json(parse_json_text(text, "matrix"));
  std::vector<std::vector<Integer>> rows;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t stop = std::min(text.find(';', start), text.size());
    std::vector<Integer> row;
    std::size_t pos = start;
    while (pos <= stop) {
      const std::size_t comma = std::min(text.find(',', pos), stop);
      row.push_back(integer_from_json(Json(trim(std::string_view(text).substr(pos, comma - pos)))));
      pos = comma + 1;
    }
    if (!rows.empty() && row.size() != rows.front().size()) fail("matrix rows have different lengths");
    rows.push_back(std::move(row));
    start = stop + 1;
  }
  return IntMatrix::from_rows(rows);
}

void to_json(Json& j, const ExactReal& x) {
  if (x.is_rational()) {
    j = Json{{"kind", "rational"}, {"num", integer_to_json(x.p())}, {"den", integer_to_json(x.r())}};
  } else {
    j = Json{{"kind", "quadratic"},
             {"p", integer_to_json(x.p())},
             {"q", integer_to_json(x.q())},
             {"r", integer_to_json(x.r())},
             {"d", integer_to_json(x.d())}};
  }
}

void from_json(const Json& j, ExactReal& x) {
  if (!j.is_object()) {
    x = ExactReal::rational(integer_from_json(j));
    return;
  }
  const std::string kind = string_field(j, "kind");
  if (kind == "rational") {
    const Integer den = has(j, "den") ? integer_from_json(j.at("den")) : Integer(1);
    if (sgn(den) == 0) fail("zero denominator");
    x = ExactReal::rational(integer_from_json(field(j, "num")), den);
  } else if (kind == "quadratic") {
    const Integer r = integer_from_json(field(j, "r"));
    const Integer d = integer_from_json(field(j, "d"));
    if (sgn(r) == 0) fail("quadratic with r = 0");
    if (sgn(d) < 0) fail("quadratic with negative radicand");
    x = ExactReal::quadratic(integer_from_json(field(j, "p")), integer_from_json(field(j, "q")), r, d);
  } else {
    fail("unknown exact real kind '" + kind + "'");
  }
}

void to_json(Json& j, const SurdSum& x) {
  if (const auto single = x.to_exact_real()) {
    to_json(j, *single);
    return;
  }
  Json terms = Json::array();
  for (const auto& [radicand, coef] : x.terms())
    terms.push_back(Json{{"radicand", integer_to_json(radicand)}, {"coef", rational_to_json(coef)}});
  j = Json{{"kind", "surd-sum"}, {"terms", std::move(terms)}};
}

void from_json(const Json& j, SurdSum& x) {
  if (j.is_object() && j.contains("kind") && j.at("kind") == "surd-sum") {
    SurdSum sum;
    for (const Json& t : array_of(field(j, "terms"), "terms")) {
      const Integer radicand = integer_from_json(field(t, "radicand"));
      if (sgn(radicand) <= 0) fail("surd-sum radicand must be positive");
      sum += SurdSum::term(rational_from_json(field(t, "coef")), radicand);
    }
    x = std::move(sum);
    return;
  }
  x = SurdSum(j.get<ExactReal>());
}

void to_json(Json& j, const Orbit& orbit) {
  j = Json{{"name", orbit.name}, {"kind", std::string(to_string(orbit.kind))}};
  if (orbit.eta) j["eta"] = rational_to_json(*orbit.eta);
  if (orbit.phi) j["phi"] = *orbit.phi;
  Json cls = Json::array();
  for (const Integer& a : orbit.homology_class) cls.push_back(integer_to_json(a));
  j["class"] = std::move(cls);
}

void from_json(const Json& j, Orbit& orbit) {
  const std::string name = string_field(j, "name");
  const OrbitKind kind = has(j, "kind") ? parse_orbit_kind(string_field(j, "kind")) : OrbitKind::elliptic;
  std::vector<Integer> cls;
  if (has(j, "class"))
    for (const Json& a : array_of(j.at("class"), "class")) cls.push_back(integer_from_json(a));
  if (kind != OrbitKind::elliptic) {
    orbit = Orbit::hyperbolic(name, kind, std::move(cls));
    return;
  }
  if (has(j, "eta") || has(j, "phi")) {
    orbit = Orbit::elliptic(name, rational_from_json(field(j, "eta")), field(j, "phi").get<ExactReal>(), std::move(cls));
  } else if (has(j, "c") || has(j, "Q") || has(j, "theta")) {
    orbit = Orbit::elliptic_from_raw(name, integer_from_json(field(j, "c")), integer_from_json(field(j, "Q")),
                                     field(j, "theta").get<ExactReal>(), std::move(cls));
  } else {
    fail("elliptic orbit '" + name + "' needs eta and phi (or raw c, Q, theta)");
  }
}

void to_json(Json& j, const OrbitSystem& system) {
  Json orbits = Json::array();
  for (const Orbit& o : system.orbits) orbits.push_back(o);
  Json linking = Json::array();
  for (const auto& row : system.linking) {
    Json r = Json::array();
    for (const Integer& v : row) r.push_back(integer_to_json(v));
    linking.push_back(std::move(r));
  }
  Json homology = Json::array();
  for (const Integer& d : system.homology.orders) homology.push_back(integer_to_json(d));
  j = Json{{"orbits", std::move(orbits)}, {"linking", std::move(linking)}, {"homology", std::move(homology)}};
}

void from_json(const Json& j, OrbitSystem& system) {
  OrbitSystem out;
  for (const Json& o : array_of(field(j, "orbits"), "orbits")) out.orbits.push_back(o.get<Orbit>());
  const std::size_t n = out.orbits.size();
  if (has(j, "linking")) {
    for (const Json& row : array_of(j.at("linking"), "linking")) {
      std::vector<Integer> values;
      for (const Json& v : array_of(row, "linking row")) values.push_back(integer_from_json(v));
      out.linking.push_back(std::move(values));
    }
  } else {
    out.linking.assign(n, std::vector<Integer>(n, Integer(0)));
  }
  if (has(j, "homology"))
    for (const Json& d : array_of(j.at("homology"), "homology")) out.homology.orders.push_back(integer_from_json(d));
  system = std::move(out);
}

void to_json(Json& j, const Generator& g) { j = int_vector_to_json(g.multiplicities); }

void from_json(const Json& j, Generator& g) { g.multiplicities = int64_vector_from_json(j, "generator"); }

void to_json(Json& j, const IndexReport& report) {
  j = Json{{"generator", report.generator}, {"mod2", report.mod2}};
  if (report.ech) j["I"] = integer_to_json(*report.ech);
  if (report.j0) j["J0"] = integer_to_json(*report.j0);
  if (report.qbar) j["qbar"] = *report.qbar;
  if (report.envelope)
    j["envelope"] = Json{{"lo", integer_to_json(report.envelope->lo)}, {"hi", integer_to_json(report.envelope->hi)}};
}

void from_json(const Json& j, IndexReport& report) {
  IndexReport out;
  out.generator = field(j, "generator").get<Generator>();
  out.mod2 = static_cast<int>(int64_from_json(field(j, "mod2")));
  if (has(j, "I")) out.ech = integer_from_json(j.at("I"));
  if (has(j, "J0")) out.j0 = integer_from_json(j.at("J0"));
  if (has(j, "qbar")) out.qbar = j.at("qbar").get<SurdSum>();
  if (has(j, "envelope")) {
    const Json& e = j.at("envelope");
    out.envelope = IndexEnvelope{integer_from_json(field(e, "lo")), integer_from_json(field(e, "hi"))};
  }
  report = std::move(out);
}

void to_json(Json& j, const CensusResult& census) {
  Json entries = Json::array();
  for (const CensusEntry& e : census.entries) entries.push_back(Json{{"m", e.generator}, {"I", integer_to_json(e.index)}});
  Json histogram = Json::array();
  for (const auto& [index, count] : census.histogram) histogram.push_back(Json::array({integer_to_json(index), count}));
  j = Json{{"cutoff", census.cutoff},
           {"completeness", census.completeness == Completeness::certified ? "certified" : "box-relative"},
           {"lattice_index", integer_to_json(census.lattice_index)},
           {"count", census.entries.size()},
           {"entries", std::move(entries)},
           {"histogram", std::move(histogram)}};
  if (census.search_radius) j["search_radius"] = *census.search_radius;
  if (census.box) j["box"] = int_vector_to_json(*census.box);
}

void from_json(const Json& j, CensusResult& census) {
  CensusResult out;
  out.cutoff = int64_from_json(field(j, "cutoff"));
  const std::string completeness = string_field(j, "completeness");
  if (completeness == "certified") {
    out.completeness = Completeness::certified;
  } else if (completeness == "box-relative") {
    out.completeness = Completeness::box_relative;
  } else {
    fail("unknown completeness '" + completeness + "'");
  }
  out.lattice_index = integer_from_json(field(j, "lattice_index"));
  for (const Json& e : array_of(field(j, "entries"), "entries"))
    out.entries.push_back({field(e, "m").get<Generator>(), integer_from_json(field(e, "I"))});
  for (const Json& h : array_of(field(j, "histogram"), "histogram")) {
    if (!h.is_array() || h.size() != 2) fail("histogram rows are [index, count] pairs");
    out.histogram.emplace_back(integer_from_json(h[0]), static_cast<std::size_t>(int64_from_json(h[1])));
  }
  if (has(j, "search_radius")) out.search_radius = int64_from_json(j.at("search_radius"));
  if (has(j, "box")) out.box = int64_vector_from_json(j.at("box"), "box");
  census = std::move(out);
}

void to_json(Json& j, const EllipsoidVerification& v) {
  j = Json{{"pass", v.pass}, {"generators", v.generators}};
  if (v.first_discrepancy) j["first_discrepancy"] = *v.first_discrepancy;
}

void from_json(const Json& j, EllipsoidVerification& v) {
  v.pass = bool_field(j, "pass");
  v.generators = static_cast<std::size_t>(int64_from_json(field(j, "generators")));
  v.first_discrepancy.reset();
  if (has(j, "first_discrepancy")) v.first_discrepancy = string_field(j, "first_discrepancy");
}

void to_json(Json& j, const GrowthFit& fit) {
  Json samples = Json::array();
  for (const auto& [k, n] : fit.samples) samples.push_back(Json::array({k, n}));
  j = Json{{"exponent", fit.exponent},
           {"intercept", fit.intercept},
           {"max_residual", fit.max_residual},
           {"samples", std::move(samples)}};
}

void from_json(const Json& j, GrowthFit& fit) {
  fit.exponent = double_field(j, "exponent");
  fit.intercept = double_field(j, "intercept");
  fit.max_residual = double_field(j, "max_residual");
  fit.samples.clear();
  for (const Json& s : array_of(field(j, "samples"), "samples")) {
    if (!s.is_array() || s.size() != 2) fail("growth samples are [k, N] pairs");
    fit.samples.emplace_back(int64_from_json(s[0]), static_cast<std::size_t>(int64_from_json(s[1])));
  }
}

void to_json(Json& j, const ZetaInstance& instance) {
  j = Json{{"genus", instance.genus}, {"A", matrix_to_json(instance.A)}, {"periods", int_vector_to_json(instance.periods)}};
}

void from_json(const Json& j, ZetaInstance& instance) {
  ZetaInstance out;
  out.genus = static_cast<int>(int64_from_json(field(j, "genus")));
  out.A = has(j, "A") ? matrix_from_json(j.at("A")) : IntMatrix();
  if (has(j, "periods")) out.periods = int64_vector_from_json(j.at("periods"), "periods");
  instance = std::move(out);
}

void to_json(Json& j, const ZetaCheck& check) {
  Json product = Json::array();
  for (const Integer& c : check.product) product.push_back(integer_to_json(c));
  j = Json{{"pass", check.pass}, {"product", std::move(product)}};
  if (check.first_failing_coefficient) j["first_failing_coefficient"] = *check.first_failing_coefficient;
  if (check.first_failing_period) j["first_failing_period"] = *check.first_failing_period;
}

void from_json(const Json& j, ZetaCheck& check) {
  ZetaCheck out;
  out.pass = bool_field(j, "pass");
  for (const Json& c : array_of(field(j, "product"), "product")) out.product.push_back(integer_from_json(c));
  if (has(j, "first_failing_coefficient"))
    out.first_failing_coefficient = static_cast<std::size_t>(int64_from_json(j.at("first_failing_coefficient")));
  if (has(j, "first_failing_period")) out.first_failing_period = int64_from_json(j.at("first_failing_period"));
  check = std::move(out);
}

void to_json(Json& j, const ZetaSolution& solution) {
  j = Json{{"genus", solution.genus}, {"periods", int_vector_to_json(solution.periods)}};
  if (solution.trace) j["trace"] = integer_to_json(*solution.trace);
  if (solution.det) j["det"] = integer_to_json(*solution.det);
}

void from_json(const Json& j, ZetaSolution& solution) {
  ZetaSolution out;
  out.genus = static_cast<int>(int64_from_json(field(j, "genus")));
  out.periods = int64_vector_from_json(field(j, "periods"), "periods");
  if (has(j, "trace")) out.trace = integer_from_json(j.at("trace"));
  if (has(j, "det")) out.det = integer_from_json(j.at("det"));
  solution = std::move(out);
}

void to_json(Json& j, const AffineTorusMap& map) {
  j = Json{{"A", matrix_to_json(map.A)}, {"b", Json::array({map.b[0], map.b[1]})}};
}

void from_json(const Json& j, AffineTorusMap& map) {
  AffineTorusMap out;
  out.A = matrix_from_json(field(j, "A"));
  if (has(j, "b")) {
    const Json& b = array_of(j.at("b"), "b");
    if (b.size() != 2) fail("translation b must have two components");
    out.b = {b[0].get<ExactReal>(), b[1].get<ExactReal>()};
  }
  map = std::move(out);
}

void to_json(Json& j, const PeriodicPoints& points) {
  j = Json{{"kind", std::string(to_string(points.kind))}};
  if (points.count) j["count"] = integer_to_json(*points.count);
}

void from_json(const Json& j, PeriodicPoints& points) {
  const std::string kind = string_field(j, "kind");
  PeriodicPoints out;
  if (kind == "none") {
    out.kind = PeriodicKind::none;
  } else if (kind == "finite") {
    out.kind = PeriodicKind::finite;
    out.count = integer_from_json(field(j, "count"));
  } else if (kind == "positive-dimensional") {
    out.kind = PeriodicKind::positive_dimensional;
  } else {
    fail("unknown periodic point kind '" + kind + "'");
  }
  points = std::move(out);
}

void to_json(Json& j, const TorusOrbitReport& report) {
  Json table = Json::array();
  for (const auto& [p, points] : report.table) {
    Json row = points;
    row["p"] = p;
    table.push_back(std::move(row));
  }
  j = Json{{"max_period", report.max_period}, {"table", std::move(table)}};
  if (report.first_period) {
    j["first_period"] = *report.first_period;
    j["verdict"] = "first period " + std::to_string(*report.first_period);
  } else {
    j["verdict"] = "no periodic orbits up to " + std::to_string(report.max_period);
  }
}

void from_json(const Json& j, TorusOrbitReport& report) {
  TorusOrbitReport out;
  out.max_period = int64_from_json(field(j, "max_period"));
  for (const Json& row : array_of(field(j, "table"), "table"))
    out.table.emplace_back(int64_from_json(field(row, "p")), row.get<PeriodicPoints>());
  if (has(j, "first_period")) out.first_period = int64_from_json(j.at("first_period"));
  report = std::move(out);
}

}  // namespace echlab
