#pragma once

#include <map>
#include <string>
#include <vector>

#include "dairyabm/agents.hpp"
#include "dairyabm/calendar.hpp"
#include "dairyabm/energy.hpp"
#include "dairyabm/farm.hpp"

namespace dairyabm {

/// One simulated day: an hourly profile per agent plus farm-level totals.
struct DailyReport {
    SimDate date;
    std::map<AgentKind, HourlyProfile> per_agent; // always all nine agents
    HourlyProfile total_hourly;
    EnergyKwh total;
};

struct DailySummary {
    SimDate date;
    EnergyKwh total;
};

/// Aggregation over a month or the whole year.
struct PeriodReport {
    std::string label;
    std::vector<DailySummary> days;
    std::map<AgentKind, EnergyKwh> per_agent_totals;
    EnergyKwh total;
};

DailyReport simulate_day(const FarmConfig& config, const SimDate& date);

PeriodReport simulate_month(const FarmConfig& config, int month);

PeriodReport simulate_year(const FarmConfig& config);

/// Yearly total divided by 365.
EnergyKwh average_day(const FarmConfig& config);

struct SweepPoint {
    int herd_size;
    EnergyKwh avg_day;
};

/// Average-day totals for a list of herd sizes, all other inputs taken from
/// the base config. Order of sizes is preserved.
std::vector<SweepPoint> sweep_herd_sizes(const FarmConfig& base, const std::vector<int>& sizes);

} // namespace dairyabm
