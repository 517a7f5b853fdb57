#pragma once

#include "ent/search.hpp"

#include <nlohmann/json.hpp>

#include <string>

// Serialization of states, POVMs, gap reports and certificates.
// Field order is fixed (ordered_json) so output is stable across runs.
namespace ent {

using ojson = nlohmann::ordered_json;

// Accepts a plain number, a numeric string, or a multiple of pi
// written as "pi", "pi*2/5", "-pi*1/2", "pi*0.25".
double parse_angle(const nlohmann::json& v);
double parse_angle_string(const std::string& s);

// {"amplitudes": [[re, im], ...]} | {"acin": {...}} | {"thetas": {...}}
// | {"named": "ghz3"} — exactly one key.
PureState parse_state_spec(const nlohmann::json& spec);

// {"angles": {varphi1, varphi2, psi1, psi2}} or
// {"operators": [[8 x [re, im]], [8 x [re, im]]]} row-major.
BinaryPovm parse_povm_spec(const nlohmann::json& spec);

int parse_party(const std::string& name);

ojson gap_report_to_json(const GapReport& rep);

ojson certificate_to_json(const ViolationCertificate& c);
ViolationCertificate certificate_from_json(const nlohmann::json& j);

// Treats `arg` as inline JSON when it starts with '{', otherwise as a
// path to a JSON file.
nlohmann::json load_json_arg(const std::string& arg);

std::string format_double(double v);  // 17 significant digits

}  // namespace ent
