#pragma once

#include <array>
#include <vector>

#include "dairyabm/calendar.hpp"
#include "dairyabm/consumption.hpp"
#include "dairyabm/energy.hpp"
#include "dairyabm/farm.hpp"

namespace dairyabm {

/// Energy per clock hour for one day. Slot i covers [i:00, i+1:00).
struct HourlyProfile {
    std::array<double, 24> slots{};

    double total() const;
};

/// One activation window. Start is a clock hour in [0, 24); windows are
/// clamped at midnight, never wrapped.
struct ScheduleWindow {
    double start_hour = 0.0;
    double hours = 0.0;
};

struct AgentSchedule {
    std::vector<ScheduleWindow> windows;

    double total_hours() const;
};

/// Length of one milking session in hours: one parlour row of milking_units
/// cows takes row_minutes, capped at 10 h so the 07:00 and 17:00 sessions
/// never overlap.
double milking_session_duration(int herd_size, int milking_units, double row_minutes = 8.0);

/// Activation windows for an agent. Milking-driven agents anchor on the
/// 07:00 and 17:00 sessions; lights, compressor and the unmonitored load run
/// around the clock.
AgentSchedule schedule_for(AgentKind kind, const FarmConfig& config);

/// Spread energy uniformly per unit time across the schedule's windows.
/// Partial hours receive proportional shares. A zero-duration schedule with
/// positive energy signals an inconsistent agent definition and throws.
HourlyProfile distribute(EnergyKwh energy, const AgentSchedule& schedule);

/// Single-day energy for one agent: the difference between the cumulative
/// equation at this day's factor and at the previous day's (day 0 evaluates
/// with df = 0, which leaves only the per-cow water heating term).
EnergyKwh agent_daily_energy(AgentKind kind, const FarmConfig& config, const SimDate& date);

} // namespace dairyabm
