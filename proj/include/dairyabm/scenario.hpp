#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "dairyabm/calendar.hpp"
#include "dairyabm/farm.hpp"

namespace dairyabm {

/// Parsed scenario file: one farm config plus the optional overrides a run
/// may carry (date, sweep sizes, output path).
struct ScenarioFile {
    FarmConfig config;
    std::optional<SimDate> date;
    std::vector<int> herd_sizes;
    std::optional<std::string> out;
};

/// Load and validate a scenario JSON file. Unknown keys are rejected with
/// the offending key named. A missing constants section falls back to the
/// shipped calibrated defaults.
ScenarioFile load_scenario(const std::filesystem::path& path);

} // namespace dairyabm
