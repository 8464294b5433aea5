#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <vector>

#include <json.hpp>

#include "memcost/types.hpp"

namespace memcost::cli {

// Scenario plus parse provenance: which fields fell back to defaults.
struct ParsedScenario {
    Scenario scenario;
    std::vector<std::string> defaulted_fields;  // sorted "section.key" paths
};

// Sectioned key-value scenario file. Strict schema: unknown sections or keys
// are errors, and every error is collected before reporting. Numeric values
// accept a '%' suffix, converted to a fraction at parse time.
ParsedScenario parse_scenario_text(std::istream&);

// JSON form of the same schema; also accepts a full analyze report, in which
// case its "scenario" object is used.
ParsedScenario parse_scenario_json(const nlohmann::json&);

// Reads either format (JSON when the first non-space byte is '{') and runs
// semantic validation on the result.
ParsedScenario load_scenario_file(const std::filesystem::path&);

nlohmann::ordered_json scenario_to_json(const ParsedScenario&);

}  // namespace memcost::cli
