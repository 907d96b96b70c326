#include "dairyabm/report_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "dairyabm/errors.hpp"

namespace dairyabm {

using nlohmann::json;

std::string format_number(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.6g", value);
    return buffer;
}

std::string date_string(const SimDate& date) {
    char buffer[8];
    std::snprintf(buffer, sizeof(buffer), "%02d-%02d", date.month, date.day);
    return buffer;
}

SimDate parse_date(const std::string& text) {
    int month = 0, day = 0;
    char extra = 0;
    if (std::sscanf(text.c_str(), "%d-%d%c", &month, &day, &extra) != 2) {
        throw ConfigError("date must be MM-DD, got '" + text + "'");
    }
    try {
        return SimDate(month, day);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("date: ") + e.what());
    }
}

std::string hourly_csv(const DailyReport& report) {
    std::ostringstream out;
    out << "date,hour,agent,kwh\n";
    const std::string date = date_string(report.date);
    for (int hour = 0; hour < 24; ++hour) {
        for (AgentKind kind : kAllAgentKinds) {
            out << date << ',' << hour << ',' << to_string(kind) << ','
                << format_number(report.per_agent.at(kind).slots[hour]) << '\n';
        }
        out << date << ',' << hour << ",total," << format_number(report.total_hourly.slots[hour])
            << '\n';
    }
    return out.str();
}

std::string daily_csv(const DailyReport& report) {
    std::ostringstream out;
    out << "date,agent,kwh\n";
    const std::string date = date_string(report.date);
    for (AgentKind kind : kAllAgentKinds) {
        out << date << ',' << to_string(kind) << ','
            << format_number(report.per_agent.at(kind).total()) << '\n';
    }
    out << date << ",total," << format_number(report.total.value()) << '\n';
    return out.str();
}

namespace {

void append_period_rows(std::ostringstream& out, const PeriodReport& report) {
    for (AgentKind kind : kAllAgentKinds) {
        out << report.label << ',' << to_string(kind) << ','
            << format_number(report.per_agent_totals.at(kind).value()) << '\n';
    }
    out << report.label << ",total," << format_number(report.total.value()) << '\n';
}

} // namespace

std::string period_csv(const PeriodReport& report) {
    std::ostringstream out;
    out << "month,agent,kwh\n";
    append_period_rows(out, report);
    return out.str();
}

std::string yearly_csv(const std::vector<PeriodReport>& months, const PeriodReport& year) {
    std::ostringstream out;
    out << "month,agent,kwh\n";
    for (const PeriodReport& month : months) {
        append_period_rows(out, month);
    }
    append_period_rows(out, year);
    return out.str();
}

std::string sweep_csv(const std::vector<SweepPoint>& points) {
    std::ostringstream out;
    out << "herd_size,avg_day_kwh\n";
    for (const SweepPoint& point : points) {
        out << point.herd_size << ',' << format_number(point.avg_day.value()) << '\n';
    }
    return out.str();
}

json to_json(const DailyReport& report) {
    json per_agent = json::object();
    for (const auto& [kind, profile] : report.per_agent) {
        per_agent[to_string(kind)] = profile.slots;
    }
    return json{
        {"date", date_string(report.date)},
        {"per_agent", per_agent},
        {"total_hourly", report.total_hourly.slots},
        {"total", report.total.value()},
    };
}

json to_json(const PeriodReport& report) {
    json days = json::array();
    for (const DailySummary& day : report.days) {
        days.push_back(json{{"date", date_string(day.date)}, {"total", day.total.value()}});
    }
    json per_agent = json::object();
    for (const auto& [kind, total] : report.per_agent_totals) {
        per_agent[to_string(kind)] = total.value();
    }
    return json{
        {"label", report.label},
        {"days", days},
        {"per_agent_totals", per_agent},
        {"total", report.total.value()},
    };
}

namespace {

AgentKind agent_key(const std::string& name) {
    const auto kind = agent_kind_from_string(name);
    if (!kind) {
        throw ConfigError("unknown agent in report: " + name);
    }
    return *kind;
}

} // namespace

DailyReport daily_report_from_json(const json& j) {
    DailyReport report{parse_date(j.at("date").get<std::string>()), {}, {},
                       EnergyKwh(j.at("total").get<double>())};
    for (const auto& item : j.at("per_agent").items()) {
        HourlyProfile profile;
        profile.slots = item.value().get<std::array<double, 24>>();
        report.per_agent.emplace(agent_key(item.key()), profile);
    }
    if (report.per_agent.size() != kAllAgentKinds.size()) {
        throw ConfigError("daily report must cover all nine agents");
    }
    report.total_hourly.slots = j.at("total_hourly").get<std::array<double, 24>>();
    return report;
}

PeriodReport period_report_from_json(const json& j) {
    PeriodReport report;
    report.label = j.at("label").get<std::string>();
    for (const json& day : j.at("days")) {
        report.days.push_back(DailySummary{parse_date(day.at("date").get<std::string>()),
                                           EnergyKwh(day.at("total").get<double>())});
    }
    for (const auto& item : j.at("per_agent_totals").items()) {
        report.per_agent_totals.emplace(agent_key(item.key()),
                                        EnergyKwh(item.value().get<double>()));
    }
    report.total = EnergyKwh(j.at("total").get<double>());
    return report;
}

void atomic_write(const std::filesystem::path& path, const std::string& content) {
    const std::filesystem::path temp = path.string() + ".tmp";
    {
        std::ofstream out(temp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw ConfigError("cannot write to " + temp.string());
        }
        out << content;
        out.flush();
        if (!out) {
            std::error_code ec;
            std::filesystem::remove(temp, ec);
            throw ConfigError("failed while writing " + temp.string());
        }
    }
    std::error_code ec;
    std::filesystem::rename(temp, path, ec);
    if (ec) {
        std::filesystem::remove(temp, ec);
        throw ConfigError("cannot move report into place at " + path.string());
    }
}

} // namespace dairyabm
