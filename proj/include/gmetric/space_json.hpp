#pragma once

#include <string>

#include <json.hpp>

#include "gmetric/space.hpp"

namespace gmetric {

// Space file format:
//   {"kind": string, "arity": int, "elements": [string...],
//    "values": [{"tuple": [string...], "value": number}...]}
// Tuples may come in any order; every multiset must be covered exactly;
// duplicate tuples with conflicting values are an error.
nlohmann::json space_to_json(const FiniteSpace& space);
FiniteSpace space_from_json(const nlohmann::json& doc);

FiniteSpace load_space(const std::string& path);
void save_space(const FiniteSpace& space, const std::string& path);

} // namespace gmetric
