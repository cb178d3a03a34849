#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace gtcli {

// Validates against the JSON Schema keywords the shipped schemas use: type,
// enum, required, properties, additionalProperties, items, minItems, maxItems,
// minimum, maximum and local "$ref" pointers. Other keywords are ignored.
std::vector<std::string> schema_errors(const nlohmann::json& value, const nlohmann::json& schema);

// Embedded copy of schemas/<name>.schema.json.
const nlohmann::json& builtin_schema(const std::string& name);

// Throws gt::Error(ConfigError) listing the violations.
void require_valid(const nlohmann::json& value, const std::string& schema_name);

}  // namespace gtcli
