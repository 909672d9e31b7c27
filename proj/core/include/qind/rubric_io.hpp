#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "qind/rubric.hpp"

namespace qind {

// Rubric file format, JSON:
//   {id, title, max_level,
//    dimensions:[{id, title, description,
//                 attributes:[{id, title, default_weight,
//                              levels:[{level, text}],
//                              checks:[{level, check}]}]}]}
// Unknown keys are rejected. "checks" may be omitted; every level then
// defaults to MANUAL. Weights accept numbers or strings ("0.5", "1/3").

// Parses and validates; throws InputError with location info on parse or
// validation failure.
Rubric load_rubric(const std::string& text);
Rubric rubric_from_json(const nlohmann::json& doc);

nlohmann::json rubric_to_json(const Rubric& rubric);
std::string serialize_rubric(const Rubric& rubric);

// Resolves "pocme" / "fairst" to the built-ins, anything else as a file path.
Rubric resolve_rubric(const std::string& ref);

}  // namespace qind
