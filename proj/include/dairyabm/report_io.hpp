#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "dairyabm/simulator.hpp"

namespace dairyabm {

/// Format a number with six significant digits (CSV and console output).
std::string format_number(double value);

std::string date_string(const SimDate& date); // "MM-DD"
SimDate parse_date(const std::string& text);  // throws ConfigError

// CSV emission. Schemas:
//   hourly:  date,hour,agent,kwh       (nine agent rows then a total row per hour)
//   daily:   date,agent,kwh            (nine agent rows then a total row)
//   period:  month,agent,kwh           (per month: nine agent rows then a total row)
//   sweep:   herd_size,avg_day_kwh
std::string hourly_csv(const DailyReport& report);
std::string daily_csv(const DailyReport& report);
std::string period_csv(const PeriodReport& report);
std::string yearly_csv(const std::vector<PeriodReport>& months, const PeriodReport& year);
std::string sweep_csv(const std::vector<SweepPoint>& points);

// JSON mirrors the report field names. Numbers keep full precision so a
// re-read report equals the in-memory one.
nlohmann::json to_json(const DailyReport& report);
nlohmann::json to_json(const PeriodReport& report);
DailyReport daily_report_from_json(const nlohmann::json& j);
PeriodReport period_report_from_json(const nlohmann::json& j);

/// Write-then-rename. Either the full content appears at `path` or nothing
/// does; no partial files are left behind.
void atomic_write(const std::filesystem::path& path, const std::string& content);

} // namespace dairyabm
