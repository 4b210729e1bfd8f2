// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include <json.hpp>

#include "starsec/analytic_rates.hpp"
#include "starsec/scenario.hpp"

namespace starsec {

/// Baseline parameters (the member initializers of ScenarioConfig).
ScenarioConfig default_scenario();

/// Merge a JSON document onto a base scenario. Absent fields keep the base
/// value; lambda_t / lambda_r and w1 / w2 auto-complete to sum to 1 when only
/// one of the pair is given. Keys starting with "_" are documentation and
/// ignored; any other unknown key is an error. Does not validate.
ScenarioConfig scenario_from_json(const nlohmann::json& doc,
                                  const ScenarioConfig& base = default_scenario());

nlohmann::json scenario_to_json(const ScenarioConfig& s);

/// Parse the file, merge onto the built-in defaults, and validate; throws
/// ScenarioError with the full violation list on invalid input.
ScenarioConfig load_scenario(const std::string& path);

/// Apply one "key=value" override onto a scenario JSON document.
void apply_override(nlohmann::json& doc, const std::string& key_value);

nlohmann::json report_to_json(const SecrecyReport& r);

}  // namespace starsec
