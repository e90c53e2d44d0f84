#pragma once

// JSON encodings of every input and report type. Integers are written as JSON
// numbers when they fit in 64 bits and as decimal strings otherwise; both
// forms are accepted on input. Decoding errors throw std::invalid_argument.

#include "echlab/census.hpp"
#include "echlab/ech_index.hpp"
#include "echlab/exact_real.hpp"
#include "echlab/lefschetz.hpp"
#include "echlab/orbit_model.hpp"

#include <json.hpp>

#include <string_view>

namespace echlab {

using Json = nlohmann::json;

Json integer_to_json(const Integer& value);
Integer integer_from_json(const Json& j);

/// {"num": n, "den": d}; a bare integer is also accepted on input.
Json rational_to_json(const Rational& value);
Rational rational_from_json(const Json& j);

/// Parses an ExactReal from a command-line token: "sqrt2", "sqrt(7)",
/// "golden", "n", "n/m", or a JSON object.
ExactReal parse_exact_real(std::string_view text);

/// Parses "[[a,b],[c,d]]" style JSON or "a,b;c,d".
IntMatrix parse_int_matrix(std::string_view text);

/// Throws std::invalid_argument with the parser message on malformed text.
Json parse_json_text(std::string_view text, std::string_view what);

// ExactReal: {"kind":"rational","num","den"} or {"kind":"quadratic","p","q","r","d"}.
void to_json(Json& j, const ExactReal& x);
void from_json(const Json& j, ExactReal& x);

// SurdSum: an ExactReal object when a single radicand is present, otherwise
// {"kind":"surd-sum","terms":[{"radicand","coef"}]}.
void to_json(Json& j, const SurdSum& x);
void from_json(const Json& j, SurdSum& x);

// Orbit: {"name","kind","eta","phi","class"}; an elliptic orbit may instead
// give raw data {"c","Q","theta"}.
void to_json(Json& j, const Orbit& orbit);
void from_json(const Json& j, Orbit& orbit);

// OrbitSystem: {"orbits":[...],"linking":[[...]],"homology":[d_1,...]}.
void to_json(Json& j, const OrbitSystem& system);
void from_json(const Json& j, OrbitSystem& system);

void to_json(Json& j, const Generator& g);
void from_json(const Json& j, Generator& g);

void to_json(Json& j, const IndexReport& report);
void from_json(const Json& j, IndexReport& report);

void to_json(Json& j, const CensusResult& census);
void from_json(const Json& j, CensusResult& census);

void to_json(Json& j, const EllipsoidVerification& v);
void from_json(const Json& j, EllipsoidVerification& v);

void to_json(Json& j, const GrowthFit& fit);
void from_json(const Json& j, GrowthFit& fit);

void to_json(Json& j, const ZetaInstance& instance);
void from_json(const Json& j, ZetaInstance& instance);

void to_json(Json& j, const ZetaCheck& check);
void from_json(const Json& j, ZetaCheck& check);

void to_json(Json& j, const ZetaSolution& solution);
void from_json(const Json& j, ZetaSolution& solution);

void to_json(Json& j, const AffineTorusMap& map);
void from_json(const Json& j, AffineTorusMap& map);

void to_json(Json& j, const PeriodicPoints& points);
void from_json(const Json& j, PeriodicPoints& points);

void to_json(Json& j, const TorusOrbitReport& report);
void from_json(const Json& j, TorusOrbitReport& report);

}  // namespace echlab
