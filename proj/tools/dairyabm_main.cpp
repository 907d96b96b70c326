#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dairyabm/calibration.hpp"
#include "dairyabm/errors.hpp"
#include "dairyabm/report_io.hpp"
#include "dairyabm/scenario.hpp"
#include "dairyabm/simulator.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitConfig = 2;
constexpr int kExitValidation = 3;

using dairyabm::AgentKind;
using dairyabm::FarmConfig;
using dairyabm::SimDate;

void emit(const std::string& content, const std::optional<std::string>& out_path) {
    if (out_path) {
        dairyabm::atomic_write(*out_path, content);
    } else {
        std::cout << content;
    }
}

std::vector<int> parse_sizes(const std::string& csv) {
    std::vector<int> sizes;
    std::stringstream stream(csv);
    std::string item;
    while (std::getline(stream, item, ',')) {
        try {
            sizes.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw dairyabm::ConfigError("bad herd size '" + item + "' in --herd-sizes");
        }
        if (sizes.back() < 1) {
            throw dairyabm::ConfigError("herd sizes must be positive, got " + item);
        }
    }
    if (sizes.empty()) {
        throw dairyabm::ConfigError("--herd-sizes needs at least one value");
    }
    return sizes;
}

int run_simulate(const std::string& config_path, const std::string& date_text,
                 const std::string& resolution, const std::string& format,
                 std::optional<std::string> out_path) {
    const dairyabm::ScenarioFile scenario = dairyabm::load_scenario(config_path);
    if (!out_path && scenario.out) {
        out_path = scenario.out;
    }

    std::optional<SimDate> date = scenario.date;
    if (!date_text.empty()) {
        date = dairyabm::parse_date(date_text);
    }
    if (!date && resolution != "yearly") {
        throw dairyabm::ConfigError("no date given: pass --date MM-DD or set it in the scenario");
    }

    std::string content;
    if (resolution == "hourly" || resolution == "daily") {
        const dairyabm::DailyReport report = dairyabm::simulate_day(scenario.config, *date);
        if (format == "json") {
            content = dairyabm::to_json(report).dump(2) + "\n";
        } else {
            content = resolution == "hourly" ? dairyabm::hourly_csv(report)
                                             : dairyabm::daily_csv(report);
        }
    } else if (resolution == "monthly") {
        const dairyabm::PeriodReport report =
            dairyabm::simulate_month(scenario.config, date->month);
        content = format == "json" ? dairyabm::to_json(report).dump(2) + "\n"
                                   : dairyabm::period_csv(report);
    } else { // yearly
        const dairyabm::PeriodReport year = dairyabm::simulate_year(scenario.config);
        if (format == "json") {
            content = dairyabm::to_json(year).dump(2) + "\n";
        } else {
            std::vector<dairyabm::PeriodReport> months;
            for (int month = 1; month <= dairyabm::kMonthsPerYear; ++month) {
                months.push_back(dairyabm::simulate_month(scenario.config, month));
            }
            content = dairyabm::yearly_csv(months, year);
        }
    }
    emit(content, out_path);
    return kExitOk;
}

int run_sweep(const std::string& config_path, const std::string& sizes_csv,
              std::optional<std::string> out_path) {
    const dairyabm::ScenarioFile scenario = dairyabm::load_scenario(config_path);
    if (!out_path && scenario.out) {
        out_path = scenario.out;
    }
    std::vector<int> sizes = scenario.herd_sizes;
    if (!sizes_csv.empty()) {
        sizes = parse_sizes(sizes_csv);
    }
    if (sizes.empty()) {
        throw dairyabm::ConfigError(
            "no herd sizes given: pass --herd-sizes or set herd_sizes in the scenario");
    }
    emit(dairyabm::sweep_csv(dairyabm::sweep_herd_sizes(scenario.config, sizes)), out_path);
    return kExitOk;
}

int run_calibrate(const std::string& rows_path, const std::string& config_path,
                  const std::string& out_path) {
    std::vector<dairyabm::ReferenceRow> rows =
        rows_path.empty() ? dairyabm::builtin_reference_table()
                          : dairyabm::load_reference_rows(rows_path);
    FarmConfig base;
    if (!config_path.empty()) {
        base = dairyabm::load_scenario(config_path).config;
    }
    const dairyabm::CalibrationResult result = dairyabm::fit_constants(rows, base);
    dairyabm::save_constants(result.constants, out_path);

    std::cout << "herd_size,target_kwh,model_kwh,residual_pct\n";
    for (const dairyabm::ReferenceRow& row : rows) {
        FarmConfig config = base;
        config.constants = result.constants;
        config.herd_size = row.herd_size;
        std::cout << row.herd_size << ',' << dairyabm::format_number(row.abm_kwh) << ','
                  << dairyabm::format_number(dairyabm::average_day(config).value()) << ','
                  << dairyabm::format_number(result.residuals.at(row.herd_size)) << '\n';
    }
    std::cout << "max residual: " << dairyabm::format_number(result.max_residual_pct) << " %\n";
    std::cout << "constants written to " << out_path << "\n";
    return kExitOk;
}

int run_validate(const std::string& config_path, const std::string& rows_path) {
    const dairyabm::ScenarioFile scenario = dairyabm::load_scenario(config_path);
    const std::vector<dairyabm::ReferenceRow> rows =
        rows_path.empty() ? dairyabm::builtin_reference_table()
                          : dairyabm::load_reference_rows(rows_path);
    const dairyabm::ValidationReport report = dairyabm::validate(scenario.config, rows);

    std::cout << "herd_size,dssed_kwh,abm_kwh,table_error_pct,model_kwh,model_error_pct\n";
    for (const dairyabm::ValidationRow& row : report.rows) {
        std::cout << row.herd_size << ',' << dairyabm::format_number(row.dssed_kwh) << ','
                  << dairyabm::format_number(row.abm_kwh) << ','
                  << dairyabm::format_number(row.table_error_pct) << ','
                  << dairyabm::format_number(row.model_kwh) << ','
                  << dairyabm::format_number(row.model_error_pct) << '\n';
    }
    std::cout << "max table error: " << dairyabm::format_number(report.max_table_error_pct)
              << " %\n";
    std::cout << "max model error: " << dairyabm::format_number(report.max_model_error_pct)
              << " %\n";
    std::cout << "within 5.5 % gate: " << (report.within_5_5 ? "yes" : "no") << "\n";
    std::cout << "within 5.2 % gate: " << (report.within_5_2 ? "yes" : "no") << "\n";
    return report.within_5_5 ? kExitOk : kExitValidation;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Agent-based dairy farm electricity consumption simulator"};
    app.require_subcommand(1);

    std::string config_path, date_text, out_path, rows_path, sizes_csv;
    std::string resolution = "daily";
    std::string format = "csv";

    CLI::App* simulate = app.add_subcommand("simulate", "Simulate a farm and emit a report");
    simulate->add_option("--config", config_path, "Scenario file (JSON)")->required();
    simulate->add_option("--date", date_text, "Date as MM-DD (falls back to the scenario's date)");
    simulate->add_option("--resolution", resolution, "hourly|daily|monthly|yearly")
        ->check(CLI::IsMember({"hourly", "daily", "monthly", "yearly"}));
    simulate->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
    simulate->add_option("--out", out_path, "Output path (stdout when omitted)");

    CLI::App* sweep = app.add_subcommand("sweep", "Average-day totals for a range of herd sizes");
    sweep->add_option("--config", config_path, "Scenario file (JSON)")->required();
    sweep->add_option("--herd-sizes", sizes_csv, "Comma-separated herd sizes");
    sweep->add_option("--out", out_path, "Output path (stdout when omitted)");

    CLI::App* calibrate = app.add_subcommand("calibrate", "Fit constants to a reference table");
    calibrate->add_option("--rows", rows_path, "Reference rows CSV (defaults to the built-in table)");
    calibrate->add_option("--config", config_path, "Base scenario for the fit");
    std::string constants_out = "constants.json";
    calibrate->add_option("--out", constants_out, "Constants file to write");

    CLI::App* validate = app.add_subcommand("validate", "Compare the model against DSSED figures");
    validate->add_option("--config", config_path, "Scenario file (JSON)")->required();
    validate->add_option("--rows", rows_path, "Reference rows CSV (defaults to the built-in table)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            return app.exit(e);
        }
        app.exit(e);
        return kExitUsage;
    }

    const std::optional<std::string> out =
        out_path.empty() ? std::nullopt : std::optional<std::string>(out_path);
    try {
        if (simulate->parsed()) {
            return run_simulate(config_path, date_text, resolution, format, out);
        }
        if (sweep->parsed()) {
            return run_sweep(config_path, sizes_csv, out);
        }
        if (calibrate->parsed()) {
            return run_calibrate(rows_path, config_path, constants_out);
        }
        if (validate->parsed()) {
            return run_validate(config_path, rows_path);
        }
    } catch (const dairyabm::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const dairyabm::CalibrationError& e) {
        std::cerr << "calibration error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const dairyabm::SimulationError& e) {
        std::cerr << "simulation error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    return kExitUsage;
}
