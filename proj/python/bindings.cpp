#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "dairyabm/calibration.hpp"
#include "dairyabm/errors.hpp"
#include "dairyabm/report_io.hpp"
#include "dairyabm/simulator.hpp"

namespace py = pybind11;
using namespace dairyabm;

namespace {

py::object json_to_py(const nlohmann::json& j) {
    switch (j.type()) {
    case nlohmann::json::value_t::object: {
        py::dict d;
        for (const auto& item : j.items()) {
            d[py::str(item.key())] = json_to_py(item.value());
        }
        return d;
    }
    case nlohmann::json::value_t::array: {
        py::list l;
        for (const auto& item : j) {
            l.append(json_to_py(item));
        }
        return l;
    }
    case nlohmann::json::value_t::string:
        return py::str(j.get<std::string>());
    case nlohmann::json::value_t::boolean:
        return py::bool_(j.get<bool>());
    case nlohmann::json::value_t::number_integer:
    case nlohmann::json::value_t::number_unsigned:
        return py::int_(j.get<long long>());
    case nlohmann::json::value_t::number_float:
        return py::float_(j.get<double>());
    default:
        return py::none();
    }
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Agent-based dairy farm electricity consumption simulator";

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<SimulationError>(m, "SimulationError", PyExc_RuntimeError);
    py::register_exception<CalibrationError>(m, "CalibrationError", PyExc_ValueError);

    py::enum_<WaterHeatingMode>(m, "WaterHeatingMode")
        .value("Electric", WaterHeatingMode::Electric)
        .value("NonElectric", WaterHeatingMode::NonElectric);

    py::enum_<MilkCoolingMode>(m, "MilkCoolingMode")
        .value("DirectExpansion", MilkCoolingMode::DirectExpansion)
        .value("IceBulk", MilkCoolingMode::IceBulk);

    py::enum_<AgentKind>(m, "AgentKind")
        .value("WaterHeating", AgentKind::WaterHeating)
        .value("MilkHarvesting", AgentKind::MilkHarvesting)
        .value("MilkCooling", AgentKind::MilkCooling)
        .value("Lights", AgentKind::Lights)
        .value("WashPump", AgentKind::WashPump)
        .value("Compressor", AgentKind::Compressor)
        .value("Scraper", AgentKind::Scraper)
        .value("EffluentPump", AgentKind::EffluentPump)
        .value("Other", AgentKind::Other);

    py::class_<ConstantsTable>(m, "ConstantsTable")
        .def(py::init<>())
        .def_readwrite("wh_base", &ConstantsTable::wh_base)
        .def_readwrite("wh_per_unit", &ConstantsTable::wh_per_unit)
        .def_readwrite("wh_per_cow", &ConstantsTable::wh_per_cow)
        .def_readwrite("cpl_harvest", &ConstantsTable::cpl_harvest)
        .def_readwrite("cpl_cooling_dx", &ConstantsTable::cpl_cooling_dx)
        .def_readwrite("cpl_cooling_ib", &ConstantsTable::cpl_cooling_ib)
        .def_readwrite("cpl_other", &ConstantsTable::cpl_other);

    py::class_<ScheduleParams>(m, "ScheduleParams")
        .def(py::init<>())
        .def_readwrite("row_minutes", &ScheduleParams::row_minutes)
        .def_readwrite("cooling_tail_hours", &ScheduleParams::cooling_tail_hours);

    py::class_<FarmConfig>(m, "FarmConfig")
        .def(py::init<>())
        .def_readwrite("herd_size", &FarmConfig::herd_size)
        .def_readwrite("milking_units", &FarmConfig::milking_units)
        .def_readwrite("water_heating", &FarmConfig::water_heating)
        .def_readwrite("milk_cooling", &FarmConfig::milk_cooling)
        .def_readwrite("milk_per_cow_per_day", &FarmConfig::milk_per_cow_per_day)
        .def_readwrite("constants", &FarmConfig::constants)
        .def_readwrite("schedule", &FarmConfig::schedule);

    py::class_<ReferenceRow>(m, "ReferenceRow")
        .def(py::init<int, double, double, double>(), py::arg("herd_size"), py::arg("dssed_kwh"),
             py::arg("abm_kwh"), py::arg("error_pct") = 0.0)
        .def_readwrite("herd_size", &ReferenceRow::herd_size)
        .def_readwrite("dssed_kwh", &ReferenceRow::dssed_kwh)
        .def_readwrite("abm_kwh", &ReferenceRow::abm_kwh)
        .def_readwrite("error_pct", &ReferenceRow::error_pct);

    py::class_<CalibrationResult>(m, "CalibrationResult")
        .def_readonly("constants", &CalibrationResult::constants)
        .def_readonly("residuals", &CalibrationResult::residuals)
        .def_readonly("max_residual_pct", &CalibrationResult::max_residual_pct);

    py::class_<ValidationRow>(m, "ValidationRow")
        .def_readonly("herd_size", &ValidationRow::herd_size)
        .def_readonly("dssed_kwh", &ValidationRow::dssed_kwh)
        .def_readonly("abm_kwh", &ValidationRow::abm_kwh)
        .def_readonly("table_error_pct", &ValidationRow::table_error_pct)
        .def_readonly("model_kwh", &ValidationRow::model_kwh)
        .def_readonly("model_error_pct", &ValidationRow::model_error_pct);

    py::class_<ValidationReport>(m, "ValidationReport")
        .def_readonly("rows", &ValidationReport::rows)
        .def_readonly("max_table_error_pct", &ValidationReport::max_table_error_pct)
        .def_readonly("max_model_error_pct", &ValidationReport::max_model_error_pct)
        .def_readonly("within_5_5", &ValidationReport::within_5_5)
        .def_readonly("within_5_2", &ValidationReport::within_5_2);

    m.def(
        "day_factor",
        [](int month, int day) { return day_factor(SimDate(month, day)); },
        py::arg("month"), py::arg("day"));

    m.def(
        "water_heating_consumption",
        [](double df, int herd_size, int milking_units, WaterHeatingMode mode,
           const ConstantsTable& constants) {
            return water_heating_consumption(df, herd_size, milking_units, mode, constants)
                .value();
        },
        py::arg("df"), py::arg("herd_size"), py::arg("milking_units"), py::arg("mode"),
        py::arg("constants") = ConstantsTable{});

    m.def(
        "per_litre_consumption",
        [](double df, int herd_size, double milk_per_cow_per_day, double cpl) {
            return per_litre_consumption(df, herd_size, milk_per_cow_per_day, cpl).value();
        },
        py::arg("df"), py::arg("herd_size"), py::arg("milk_per_cow_per_day"), py::arg("cpl"));

    m.def("milking_session_duration", &milking_session_duration, py::arg("herd_size"),
          py::arg("milking_units"), py::arg("row_minutes") = 8.0);

    m.def(
        "agent_daily_energy",
        [](AgentKind kind, const FarmConfig& config, int month, int day) {
            return agent_daily_energy(kind, config, SimDate(month, day)).value();
        },
        py::arg("kind"), py::arg("config"), py::arg("month"), py::arg("day"));

    m.def(
        "simulate_day",
        [](const FarmConfig& config, int month, int day) {
            return json_to_py(to_json(simulate_day(config, SimDate(month, day))));
        },
        py::arg("config"), py::arg("month"), py::arg("day"),
        "Daily report as a dict: date, per_agent, total_hourly, total");

    m.def(
        "simulate_month",
        [](const FarmConfig& config, int month) {
            return json_to_py(to_json(simulate_month(config, month)));
        },
        py::arg("config"), py::arg("month"));

    m.def(
        "simulate_year",
        [](const FarmConfig& config) { return json_to_py(to_json(simulate_year(config))); },
        py::arg("config"));

    m.def(
        "average_day", [](const FarmConfig& config) { return average_day(config).value(); },
        py::arg("config"), "Yearly total divided by 365, in kWh");

    m.def(
        "sweep_herd_sizes",
        [](const FarmConfig& base, const std::vector<int>& sizes) {
            std::vector<std::pair<int, double>> out;
            for (const SweepPoint& point : sweep_herd_sizes(base, sizes)) {
                out.emplace_back(point.herd_size, point.avg_day.value());
            }
            return out;
        },
        py::arg("base"), py::arg("sizes"));

    m.def("builtin_reference_table", &builtin_reference_table);
    m.def("fit_constants", &fit_constants, py::arg("rows"), py::arg("base") = FarmConfig{});
    m.def("calibrated_defaults", &calibrated_defaults);
    m.def("validate", &validate, py::arg("config"), py::arg("rows"));
    m.def("percent_error", &percent_error, py::arg("reference"), py::arg("value"));
    m.def("to_one_decimal", &to_one_decimal, py::arg("pct"));

    m.attr("__version__") = "0.1.0";
}
