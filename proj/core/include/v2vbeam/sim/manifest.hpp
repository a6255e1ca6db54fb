#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "v2vbeam/sim/generate.hpp"

namespace v2vbeam::sim {

nlohmann::json scenario_to_json(const ScenarioConfig& config);
ScenarioConfig scenario_from_json(const nlohmann::json& j);

/// JSON-lines manifest: per scenario a header record
/// {"type":"scenario","schema":"v2vbeam.frames.v1",...} followed by one
/// {"type":"frame",...} record per frame. Byte-identical for identical
/// configs and seeds. Schema details are documented in the README.
void write_manifest(const std::string& path,
                    const std::vector<ScenarioRecording>& recordings);

std::vector<ScenarioRecording> read_manifest(const std::string& path);

}  // namespace v2vbeam::sim
