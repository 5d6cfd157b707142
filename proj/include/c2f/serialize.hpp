#pragma once

#include "c2f/isotropy.hpp"
#include "c2f/parser.hpp"

#include <json.hpp>

namespace c2f {

using nlohmann::json;

/// Re-parseable element text, e.g. "(1+t)/t" or "0b11*t^2 + 0b10".
std::string to_text(const FieldElem& x);
std::string to_text(const Quaternion& x);
std::string to_text(const HermForm& phi);
std::string to_text(const QuadFormQ& rho);
std::string to_text(const QuadFormF& rho);
std::string form_to_text(const ParsedForm& f);

json field_to_json(const Field& f);
Field field_from_json(const json& j);

json to_json(const WpClass& w);
json to_json(const ArfValue& v);
json to_json(const Certificate& c);
json verdict_to_json(const IsotropyVerdict& v);
json utable_to_json(const UTable& t);

/// Versioned form schema ("schema": 1); parse o print = id.
json form_to_json(const ParsedForm& f);
ParsedForm form_from_json(const json& j);

} // namespace c2f
