#include "dairyabm/consumption.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dairyabm {

namespace {

// df = 0 is the "start of month" evaluation used for day deltas, so the
// accepted domain is the closed interval [0, 1].
void check_day_factor(double df) {
    if (!std::isfinite(df) || df < 0.0 || df > 1.0) {
        throw std::invalid_argument("day factor must lie in [0, 1], got " + std::to_string(df));
    }
}

void check_positive_count(int value, const char* name) {
    if (value < 1) {
        throw std::invalid_argument(std::string(name) + " must be at least 1");
    }
}

} // namespace

EnergyKwh water_heating_consumption(double df, int herd_size, int milking_units,
                                    WaterHeatingMode mode, const ConstantsTable& constants) {
    check_day_factor(df);
    check_positive_count(herd_size, "herd_size");
    check_positive_count(milking_units, "milking_units");
    if (mode == WaterHeatingMode::NonElectric) {
        return EnergyKwh(0.0);
    }
    const double scaled = df * (constants.wh_base + milking_units * constants.wh_per_unit);
    return EnergyKwh(scaled + herd_size * constants.wh_per_cow);
}

EnergyKwh per_litre_consumption(double df, int herd_size, double milk_per_cow_per_day,
                                double cpl) {
    check_day_factor(df);
    check_positive_count(herd_size, "herd_size");
    if (!std::isfinite(milk_per_cow_per_day) || milk_per_cow_per_day <= 0.0) {
        throw std::invalid_argument("milk_per_cow_per_day must be positive");
    }
    if (!std::isfinite(cpl) || cpl < 0.0) {
        throw std::invalid_argument("per-litre coefficient must be non-negative");
    }
    return EnergyKwh(df * herd_size * milk_per_cow_per_day * cpl);
}

double cooling_cpl(MilkCoolingMode mode, const ConstantsTable& constants) {
    return mode == MilkCoolingMode::DirectExpansion ? constants.cpl_cooling_dx
                                                    : constants.cpl_cooling_ib;
}

double per_litre_cpl(AgentKind kind, const FarmConfig& config) {
    switch (kind) {
    case AgentKind::WaterHeating:
        throw std::invalid_argument("water heating has no per-litre coefficient");
    case AgentKind::MilkHarvesting:
        return config.constants.cpl_harvest;
    case AgentKind::MilkCooling:
        return cooling_cpl(config.milk_cooling, config.constants);
    default:
        return config.constants.cpl_other.at(kind);
    }
}

} // namespace dairyabm
