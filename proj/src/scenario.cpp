#include "dairyabm/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <string>

#include <json.hpp>

#include "dairyabm/calibration.hpp"
#include "dairyabm/errors.hpp"
#include "dairyabm/report_io.hpp"

namespace dairyabm {

using nlohmann::json;

namespace {

const char* kScenarioKeys[] = {
    "herd_size_cows",
    "milking_units",
    "water_heating",
    "milk_cooling",
    "milk_per_cow_per_day_litres",
    "milking_row_minutes",
    "cooling_tail_hours",
    "date",
    "herd_sizes",
    "constants",
    "constants_file",
    "out",
};

int require_int(const json& j, const std::string& key) {
    if (!j.contains(key)) {
        throw ConfigError("scenario is missing required key " + key);
    }
    if (!j.at(key).is_number_integer()) {
        throw ConfigError("scenario key " + key + " must be an integer");
    }
    return j.at(key).get<int>();
}

std::string require_string(const json& j, const std::string& key) {
    if (!j.contains(key)) {
        throw ConfigError("scenario is missing required key " + key);
    }
    if (!j.at(key).is_string()) {
        throw ConfigError("scenario key " + key + " must be a string");
    }
    return j.at(key).get<std::string>();
}

double optional_number(const json& j, const std::string& key, double fallback) {
    if (!j.contains(key)) {
        return fallback;
    }
    if (!j.at(key).is_number()) {
        throw ConfigError("scenario key " + key + " must be a number");
    }
    return j.at(key).get<double>();
}

} // namespace

ScenarioFile load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open scenario file: " + path.string());
    }
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ConfigError("scenario file " + path.string() + ": " + e.what());
    }
    if (!j.is_object()) {
        throw ConfigError("scenario file must hold a JSON object");
    }
    for (const auto& item : j.items()) {
        if (std::find(std::begin(kScenarioKeys), std::end(kScenarioKeys), item.key()) ==
            std::end(kScenarioKeys)) {
            throw ConfigError("unknown scenario key: " + item.key());
        }
    }
    if (j.contains("constants") && j.contains("constants_file")) {
        throw ConfigError("scenario may set constants or constants_file, not both");
    }

    ScenarioFile scenario;
    FarmConfig& config = scenario.config;
    config.herd_size = require_int(j, "herd_size_cows");
    config.milking_units = require_int(j, "milking_units");

    const std::string heating = require_string(j, "water_heating");
    if (heating == "electric") {
        config.water_heating = WaterHeatingMode::Electric;
    } else if (heating == "non_electric") {
        config.water_heating = WaterHeatingMode::NonElectric;
    } else {
        throw ConfigError("water_heating must be 'electric' or 'non_electric', got '" + heating +
                          "'");
    }

    const std::string cooling = require_string(j, "milk_cooling");
    if (cooling == "dx") {
        config.milk_cooling = MilkCoolingMode::DirectExpansion;
    } else if (cooling == "ib") {
        config.milk_cooling = MilkCoolingMode::IceBulk;
    } else {
        throw ConfigError("milk_cooling must be 'dx' or 'ib', got '" + cooling + "'");
    }

    config.milk_per_cow_per_day =
        optional_number(j, "milk_per_cow_per_day_litres", config.milk_per_cow_per_day);
    config.schedule.row_minutes =
        optional_number(j, "milking_row_minutes", config.schedule.row_minutes);
    config.schedule.cooling_tail_hours =
        optional_number(j, "cooling_tail_hours", config.schedule.cooling_tail_hours);

    if (j.contains("constants")) {
        config.constants = constants_from_json(j.at("constants"), calibrated_defaults());
    } else if (j.contains("constants_file")) {
        std::filesystem::path constants_path = require_string(j, "constants_file");
        if (constants_path.is_relative()) {
            constants_path = path.parent_path() / constants_path;
        }
        config.constants = load_constants(constants_path);
    } else {
        config.constants = calibrated_defaults();
    }

    if (j.contains("date")) {
        scenario.date = parse_date(require_string(j, "date"));
    }
    if (j.contains("herd_sizes")) {
        if (!j.at("herd_sizes").is_array() || j.at("herd_sizes").empty()) {
            throw ConfigError("herd_sizes must be a non-empty array of integers");
        }
        for (const json& size : j.at("herd_sizes")) {
            if (!size.is_number_integer() || size.get<int>() < 1) {
                throw ConfigError("herd_sizes entries must be positive integers");
            }
            scenario.herd_sizes.push_back(size.get<int>());
        }
    }
    if (j.contains("out")) {
        scenario.out = require_string(j, "out");
    }

    config.validate();
    return scenario;
}

} // namespace dairyabm
