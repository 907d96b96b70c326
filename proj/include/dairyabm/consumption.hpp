#pragma once

#include "dairyabm/energy.hpp"
#include "dairyabm/farm.hpp"

namespace dairyabm {

// The consumption equations in their month-to-date cumulative form: df sweeps
// (0, 1] across a month, so evaluating at df = d/D gives the consumption
// accumulated up to day d. Single-day values are differences of consecutive
// evaluations (see agent_daily_energy).

/// Water heating consumption at day factor df. The day factor scales only the
/// base + per-unit group; the per-cow term stands alone. NonElectric mode
/// (water heated by other energy sources) always yields zero.
EnergyKwh water_heating_consumption(double df, int herd_size, int milking_units,
                                    WaterHeatingMode mode, const ConstantsTable& constants);

/// Shared form of the milk harvesting, milk cooling and generic equipment
/// equations: df * herd * litres-per-cow-per-day * coefficient.
EnergyKwh per_litre_consumption(double df, int herd_size, double milk_per_cow_per_day,
                                double cpl);

/// Per-litre coefficient of the configured milk cooling method.
double cooling_cpl(MilkCoolingMode mode, const ConstantsTable& constants);

/// Per-litre coefficient for any of the eight per-litre agents
/// (throws for AgentKind::WaterHeating, which is not per-litre).
double per_litre_cpl(AgentKind kind, const FarmConfig& config);

} // namespace dairyabm
