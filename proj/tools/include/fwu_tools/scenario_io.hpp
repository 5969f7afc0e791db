#pragma once

#include <string>

#include <json.hpp>

#include "fwu/simulation.hpp"

namespace fwu::tools {

using json = nlohmann::ordered_json;

// Parses a scenario document. Unknown keys are rejected with their full key
// path; beacon_velocity and controller phi0 default to (0,0) when absent, the
// sim block falls back to the Scenario defaults, label to "".
Scenario scenario_from_json(const json& doc);

// Serializes with a fixed key order so that serialize(parse(x)) is idempotent.
json scenario_to_json(const Scenario& scenario);

// Reads and parses a JSON file; parse errors carry line and column.
json load_json(const std::string& path);

Scenario load_scenario(const std::string& path);

// Accepts either a full scenario document or a bare
// {beacons: [...], beacon_velocity: {...}} file.
BeaconSet beacons_from_json(const json& doc);

// Deep merge for scenario overrides: objects merge key-by-key, everything
// else is replaced. A patch object carrying a "kind" different from the
// base's replaces that object wholesale, so switching controller kinds does
// not leave stale gain keys behind.
json merge_scenario(const json& base, const json& patch);

} // namespace fwu::tools
