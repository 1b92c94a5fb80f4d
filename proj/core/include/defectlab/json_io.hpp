#pragma once

#include <nlohmann/json.hpp>

#include "defectlab/generate.hpp"
#include "defectlab/morphism.hpp"
#include "defectlab/word.hpp"

namespace defectlab {

using json = nlohmann::json;

/// Morphism <-> {"rules": {"<letter>": "<image>", ...}, "alphabet": [...]}.
/// Rules apply in key order (nlohmann keeps objects sorted); the optional
/// alphabet fixes the codomain and its letter order.
Morphism morphism_from_json(const json& j);
json morphism_to_json(const Morphism& m);

/// WordSpec <-> {"type": ..., "length": N, per-type fields}.
WordSpec wordspec_from_json(const json& j);
json wordspec_to_json(const WordSpec& spec);

json load_json_file(const std::string& path);

}  // namespace defectlab
