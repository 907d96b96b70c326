#include "dairyabm/calendar.hpp"

#include <stdexcept>
#include <string>

namespace dairyabm {

namespace {
constexpr int kMonthDays[12] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
}

int days_in_month(int month) {
    if (month < 1 || month > 12) {
        throw std::invalid_argument("month must be in 1..12, got " + std::to_string(month));
    }
    return kMonthDays[month - 1];
}

SimDate::SimDate(int month_, int day_) : month(month_), day(day_) {
    const int days = days_in_month(month); // validates month
    if (day < 1 || day > days) {
        throw std::invalid_argument("day must be in 1.." + std::to_string(days) + " for month " +
                                    std::to_string(month) + ", got " + std::to_string(day));
    }
}

double day_factor(const SimDate& date) {
    return static_cast<double>(date.day) / static_cast<double>(days_in_month(date.month));
}

} // namespace dairyabm
