#pragma once

namespace dairyabm {

// Fixed 365-day non-leap calendar. February always has 28 days.
inline constexpr int kMonthsPerYear = 12;
inline constexpr int kDaysPerYear = 365;

int days_in_month(int month);

/// Calendar position within the simulated year.
struct SimDate {
    int month; // 1..12
    int day;   // 1..days_in_month(month)

    SimDate(int month, int day);
};

/// Day of month divided by the number of days in that month; in (0, 1].
double day_factor(const SimDate& date);

} // namespace dairyabm
