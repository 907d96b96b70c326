"""Agent-based dairy farm electricity consumption simulator."""

from dairyabm._core import (
    AgentKind,
    CalibrationResult,
    ConfigError,
    CalibrationError,
    ConstantsTable,
    FarmConfig,
    MilkCoolingMode,
    ReferenceRow,
    ScheduleParams,
    SimulationError,
    ValidationReport,
    ValidationRow,
    WaterHeatingMode,
    agent_daily_energy,
    average_day,
    builtin_reference_table,
    calibrated_defaults,
    day_factor,
    fit_constants,
    milking_session_duration,
    per_litre_consumption,
    percent_error,
    simulate_day,
    simulate_month,
    simulate_year,
    sweep_herd_sizes,
    to_one_decimal,
    validate,
    water_heating_consumption,
    __version__,
)

__all__ = [
    "AgentKind",
    "CalibrationResult",
    "CalibrationError",
    "ConfigError",
    "ConstantsTable",
    "FarmConfig",
    "MilkCoolingMode",
    "ReferenceRow",
    "ScheduleParams",
    "SimulationError",
    "ValidationReport",
    "ValidationRow",
    "WaterHeatingMode",
    "agent_daily_energy",
    "average_day",
    "builtin_reference_table",
    "calibrated_defaults",
    "day_factor",
    "fit_constants",
    "milking_session_duration",
    "per_litre_consumption",
    "percent_error",
    "simulate_day",
    "simulate_month",
    "simulate_year",
    "sweep_herd_sizes",
    "to_one_decimal",
    "validate",
    "water_heating_consumption",
]
