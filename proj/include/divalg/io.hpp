#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "divalg/fusion_ring.hpp"
#include "divalg/nimrep.hpp"

namespace divalg {

// Ring files: {"labels": [...], "unit": [ints], "dual": [ints],
// "fusion": [[[ints]]]}. Malformed JSON or wrong field types throw
// ParseError; shape inconsistencies surface later as StructuralError.
FusionRingData parse_ring_json(std::string_view text);
nlohmann::json ring_to_json(const FusionRing& ring);

// NIM-rep files: {"module_labels": [...], "actions": [[[ints]]]}, with
// actions[i][k][j] the multiplicity of module basis k in X_i ▷ M_j.
NimRepData parse_nimrep_json(std::string_view text);
nlohmann::json nimrep_to_json(const NimRepData& nr);

// Whole file as bytes; ParseError if it cannot be read.
std::string read_file(const std::string& path);

// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view bytes);

}  // namespace divalg
