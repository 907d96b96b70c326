#include "dairyabm/simulator.hpp"

#include <stdexcept>

namespace dairyabm {

namespace {

const char* kMonthNames[12] = {"january", "february", "march",     "april",   "may",      "june",
                               "july",    "august",   "september", "october", "november", "december"};

} // namespace

DailyReport simulate_day(const FarmConfig& config, const SimDate& date) {
    config.validate();
    DailyReport report{date, {}, {}, EnergyKwh(0.0)};
    double farm_total = 0.0;
    for (AgentKind kind : kAllAgentKinds) {
        const EnergyKwh energy = agent_daily_energy(kind, config, date);
        HourlyProfile profile = distribute(energy, schedule_for(kind, config));
        for (int hour = 0; hour < 24; ++hour) {
            report.total_hourly.slots[hour] += profile.slots[hour];
        }
        farm_total += energy.value();
        report.per_agent.emplace(kind, std::move(profile));
    }
    report.total = EnergyKwh(farm_total);
    return report;
}

PeriodReport simulate_month(const FarmConfig& config, int month) {
    config.validate();
    PeriodReport report;
    days_in_month(month); // validates the month index
    report.label = kMonthNames[month - 1];
    double total = 0.0;
    std::map<AgentKind, double> per_agent;
    for (AgentKind kind : kAllAgentKinds) {
        per_agent[kind] = 0.0;
    }
    for (int day = 1; day <= days_in_month(month); ++day) {
        const SimDate date(month, day);
        double day_total = 0.0;
        for (AgentKind kind : kAllAgentKinds) {
            const double energy = agent_daily_energy(kind, config, date).value();
            per_agent[kind] += energy;
            day_total += energy;
        }
        report.days.push_back(DailySummary{date, EnergyKwh(day_total)});
        total += day_total;
    }
    for (const auto& [kind, energy] : per_agent) {
        report.per_agent_totals.emplace(kind, EnergyKwh(energy));
    }
    report.total = EnergyKwh(total);
    return report;
}

PeriodReport simulate_year(const FarmConfig& config) {
    config.validate();
    PeriodReport report;
    report.label = "year";
    double total = 0.0;
    std::map<AgentKind, double> per_agent;
    for (AgentKind kind : kAllAgentKinds) {
        per_agent[kind] = 0.0;
    }
    for (int month = 1; month <= kMonthsPerYear; ++month) {
        const PeriodReport monthly = simulate_month(config, month);
        report.days.insert(report.days.end(), monthly.days.begin(), monthly.days.end());
        for (const auto& [kind, energy] : monthly.per_agent_totals) {
            per_agent[kind] += energy.value();
        }
        total += monthly.total.value();
    }
    for (const auto& [kind, energy] : per_agent) {
        report.per_agent_totals.emplace(kind, EnergyKwh(energy));
    }
    report.total = EnergyKwh(total);
    return report;
}

EnergyKwh average_day(const FarmConfig& config) {
    return EnergyKwh(simulate_year(config).total.value() / kDaysPerYear);
}

std::vector<SweepPoint> sweep_herd_sizes(const FarmConfig& base, const std::vector<int>& sizes) {
    if (sizes.empty()) {
        throw std::invalid_argument("herd size sweep needs at least one size");
    }
    std::vector<SweepPoint> points;
    points.reserve(sizes.size());
    for (int size : sizes) {
        FarmConfig config = base;
        config.herd_size = size;
        config.validate();
        points.push_back(SweepPoint{size, average_day(config)});
    }
    return points;
}

} // namespace dairyabm
