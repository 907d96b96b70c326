#include "dairyabm/agents.hpp"

#include <algorithm>
#include <cmath>

#include "dairyabm/errors.hpp"

namespace dairyabm {

namespace {

constexpr double kHoursPerDay = 24.0;
constexpr double kMaxSessionHours = 10.0;
constexpr double kMilkingStarts[2] = {7.0, 17.0};
constexpr double kPostMilkingWindowHours = 0.5;

// Fixed-start window (milking, cooling): keep the start, truncate at midnight.
ScheduleWindow anchored_window(double start, double hours) {
    return ScheduleWindow{start, std::min(hours, kHoursPerDay - start)};
}

// Post-milking window: prefer the session end, shift left as needed so the
// whole window fits in the day. Placement shapes the profile only; totals
// are set by the consumption equations.
ScheduleWindow fitted_window(double preferred_start, double hours) {
    const double h = std::min(hours, kHoursPerDay);
    const double start = std::clamp(preferred_start, 0.0, kHoursPerDay - h);
    return ScheduleWindow{start, h};
}

} // namespace

double HourlyProfile::total() const {
    double sum = 0.0;
    for (double slot : slots) {
        sum += slot;
    }
    return sum;
}

double AgentSchedule::total_hours() const {
    double sum = 0.0;
    for (const ScheduleWindow& window : windows) {
        sum += window.hours;
    }
    return sum;
}

double milking_session_duration(int herd_size, int milking_units, double row_minutes) {
    if (herd_size < 1 || milking_units < 1) {
        throw std::invalid_argument("herd_size and milking_units must be at least 1");
    }
    const int rows = (herd_size + milking_units - 1) / milking_units;
    const double hours = rows * row_minutes / 60.0;
    return std::min(hours, kMaxSessionHours);
}

AgentSchedule schedule_for(AgentKind kind, const FarmConfig& config) {
    const double session =
        milking_session_duration(config.herd_size, config.milking_units,
                                 config.schedule.row_minutes);
    AgentSchedule schedule;
    switch (kind) {
    case AgentKind::MilkHarvesting:
        for (double start : kMilkingStarts) {
            schedule.windows.push_back(anchored_window(start, session));
        }
        break;
    case AgentKind::MilkCooling:
        // Cooling starts with each milking and keeps running for the
        // pull-down tail.
        for (double start : kMilkingStarts) {
            schedule.windows.push_back(
                anchored_window(start, session + config.schedule.cooling_tail_hours));
        }
        break;
    case AgentKind::WaterHeating: {
        // Wash-down water is reheated after each milking; the window grows
        // with herd size.
        const double heating_hours = 1.0 + 0.01 * config.herd_size;
        for (double start : kMilkingStarts) {
            schedule.windows.push_back(fitted_window(start + session, heating_hours));
        }
        break;
    }
    case AgentKind::WashPump:
    case AgentKind::Scraper:
    case AgentKind::EffluentPump:
        for (double start : kMilkingStarts) {
            schedule.windows.push_back(fitted_window(start + session, kPostMilkingWindowHours));
        }
        break;
    case AgentKind::Lights:
    case AgentKind::Compressor:
    case AgentKind::Other:
        schedule.windows.push_back(ScheduleWindow{0.0, kHoursPerDay});
        break;
    }
    return schedule;
}

HourlyProfile distribute(EnergyKwh energy, const AgentSchedule& schedule) {
    HourlyProfile profile;
    if (energy.value() == 0.0) {
        return profile;
    }
    const double total_hours = schedule.total_hours();
    if (total_hours <= 0.0) {
        throw SimulationError("agent has positive energy but a zero-duration schedule");
    }
    const double rate = energy.value() / total_hours; // kWh per active hour
    for (const ScheduleWindow& window : schedule.windows) {
        const double begin = window.start_hour;
        const double end = window.start_hour + window.hours;
        const int first = static_cast<int>(std::floor(begin));
        const int last = std::min(23, static_cast<int>(std::ceil(end)) - 1);
        for (int hour = first; hour <= last; ++hour) {
            const double overlap =
                std::min(end, static_cast<double>(hour + 1)) - std::max(begin, static_cast<double>(hour));
            if (overlap > 0.0) {
                profile.slots[hour] += rate * overlap;
            }
        }
    }
    return profile;
}

EnergyKwh agent_daily_energy(AgentKind kind, const FarmConfig& config, const SimDate& date) {
    const double days = static_cast<double>(days_in_month(date.month));
    const double df_today = date.day / days;
    const double df_yesterday = (date.day - 1) / days;

    if (kind == AgentKind::WaterHeating) {
        const EnergyKwh today = water_heating_consumption(
            df_today, config.herd_size, config.milking_units, config.water_heating,
            config.constants);
        const EnergyKwh yesterday = water_heating_consumption(
            df_yesterday, config.herd_size, config.milking_units, config.water_heating,
            config.constants);
        return EnergyKwh(today.value() - yesterday.value());
    }

    const double cpl = per_litre_cpl(kind, config);
    const EnergyKwh today =
        per_litre_consumption(df_today, config.herd_size, config.milk_per_cow_per_day, cpl);
    const EnergyKwh yesterday =
        per_litre_consumption(df_yesterday, config.herd_size, config.milk_per_cow_per_day, cpl);
    return EnergyKwh(today.value() - yesterday.value());
}

} // namespace dairyabm
