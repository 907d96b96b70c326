#include "dairyabm/farm.hpp"

#include <cmath>

#include "dairyabm/errors.hpp"

namespace dairyabm {

const char* to_string(AgentKind kind) {
    switch (kind) {
    case AgentKind::WaterHeating: return "water_heating";
    case AgentKind::MilkHarvesting: return "milk_harvesting";
    case AgentKind::MilkCooling: return "milk_cooling";
    case AgentKind::Lights: return "lights";
    case AgentKind::WashPump: return "wash_pump";
    case AgentKind::Compressor: return "compressor";
    case AgentKind::Scraper: return "scraper";
    case AgentKind::EffluentPump: return "effluent_pump";
    case AgentKind::Other: return "other";
    }
    return "unknown";
}

std::optional<AgentKind> agent_kind_from_string(std::string_view name) {
    for (AgentKind kind : kAllAgentKinds) {
        if (name == to_string(kind)) {
            return kind;
        }
    }
    return std::nullopt;
}

const char* to_string(WaterHeatingMode mode) {
    return mode == WaterHeatingMode::Electric ? "electric" : "non_electric";
}

const char* to_string(MilkCoolingMode mode) {
    return mode == MilkCoolingMode::DirectExpansion ? "dx" : "ib";
}

namespace {

void require_non_negative(double value, const char* field) {
    if (!std::isfinite(value) || value < 0.0) {
        throw ConfigError(std::string(field) + " must be finite and non-negative");
    }
}

} // namespace

void ConstantsTable::validate() const {
    require_non_negative(wh_base, "wh_base_kwh");
    require_non_negative(wh_per_unit, "wh_per_unit_kwh");
    require_non_negative(wh_per_cow, "wh_per_cow_kwh");
    require_non_negative(cpl_harvest, "cpl_harvest_kwh_per_litre");
    require_non_negative(cpl_cooling_dx, "cpl_cooling_dx_kwh_per_litre");
    require_non_negative(cpl_cooling_ib, "cpl_cooling_ib_kwh_per_litre");
    if (cpl_other.size() != kPerLitreOtherKinds.size()) {
        throw ConfigError("cpl_other must hold exactly the six generic per-litre agents");
    }
    for (AgentKind kind : kPerLitreOtherKinds) {
        auto it = cpl_other.find(kind);
        if (it == cpl_other.end()) {
            throw ConfigError(std::string("cpl_other is missing agent ") + to_string(kind));
        }
        require_non_negative(it->second, to_string(kind));
    }
}

void ScheduleParams::validate() const {
    if (!std::isfinite(row_minutes) || row_minutes <= 0.0) {
        throw ConfigError("milking_row_minutes must be positive");
    }
    if (!std::isfinite(cooling_tail_hours) || cooling_tail_hours < 0.0) {
        throw ConfigError("cooling_tail_hours must be non-negative");
    }
}

void FarmConfig::validate() const {
    if (herd_size < 1) {
        throw ConfigError("herd_size_cows must be at least 1");
    }
    if (milking_units < 1) {
        throw ConfigError("milking_units must be at least 1");
    }
    if (!std::isfinite(milk_per_cow_per_day) || milk_per_cow_per_day <= 0.0) {
        throw ConfigError("milk_per_cow_per_day_litres must be positive");
    }
    constants.validate();
    schedule.validate();
}

} // namespace dairyabm
