#pragma once

#include <filesystem>
#include <map>
#include <vector>

#include <json.hpp>

#include "dairyabm/energy.hpp"
#include "dairyabm/farm.hpp"

namespace dairyabm {

/// One row of the DSSED comparison table: average-day kWh from the external
/// reference model and from the agent-based model, plus the published
/// percentage error between them.
struct ReferenceRow {
    int herd_size;
    double dssed_kwh;
    double abm_kwh;
    double error_pct;
};

/// The seven published comparison rows (herd sizes 35..95).
std::vector<ReferenceRow> builtin_reference_table();

/// |reference - value| / reference * 100.
double percent_error(double reference, double value);

/// Truncate a percentage toward zero at one decimal, the convention used by
/// the published error column.
double to_one_decimal(double pct);

struct CalibrationResult {
    ConstantsTable constants;
    std::map<int, double> residuals; // herd size -> |model - target| / target %
    double max_residual_pct = 0.0;
};

/// Fit the per-litre coefficients (and the water-heating base override) so
/// that the simulated average day reproduces the reference ABM column, then
/// split the aggregate per-litre coefficient across agents by the documented
/// share weights. Requires at least two distinct herd sizes and an
/// electric-heating, direct-expansion base config.
CalibrationResult fit_constants(const std::vector<ReferenceRow>& rows, const FarmConfig& base);

/// Constants fitted against the built-in reference table with the default
/// farm config. Scenario files that omit constants fall back to these.
ConstantsTable calibrated_defaults();

struct ValidationRow {
    int herd_size;
    double dssed_kwh;
    double abm_kwh;          // reference column value
    double table_error_pct;  // recomputed |dssed-abm|/dssed, one decimal
    double model_kwh;        // simulated average day
    double model_error_pct;  // |dssed-model|/dssed, one decimal
};

struct ValidationReport {
    std::vector<ValidationRow> rows;
    double max_table_error_pct = 0.0;
    double max_model_error_pct = 0.0;
    // The comparison table states a 5.5 % maximum while the accompanying
    // summary claims 5.2 %; both gates are reported.
    bool within_5_5 = false;
    bool within_5_2 = false;
};

/// Recompute average-day totals for every reference herd size with the given
/// (calibrated) config and compare against the DSSED column; also recompute
/// the reference table's own error column.
ValidationReport validate(const FarmConfig& calibrated, const std::vector<ReferenceRow>& rows);

// Constants persistence (JSON, schema documented in the README). Keys left
// out of a constants object fall back to the given table; load_constants
// falls back to the shipped calibrated defaults.
ConstantsTable constants_from_json(const nlohmann::json& j, const ConstantsTable& fallback);
nlohmann::json constants_to_json(const ConstantsTable& constants);
ConstantsTable load_constants(const std::filesystem::path& path);
void save_constants(const ConstantsTable& constants, const std::filesystem::path& path);

/// Reference rows from a CSV file with header
/// herd_size,dssed_kwh,abm_kwh,error_pct.
std::vector<ReferenceRow> load_reference_rows(const std::filesystem::path& path);

} // namespace dairyabm
