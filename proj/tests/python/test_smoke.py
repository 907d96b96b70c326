import math

import pytest

import dairyabm


def calibrated_farm():
    config = dairyabm.FarmConfig()
    config.constants = dairyabm.calibrated_defaults()
    return config


def test_day_factor():
    assert dairyabm.day_factor(6, 15) == 0.5
    assert dairyabm.day_factor(1, 31) == 1.0
    with pytest.raises(ValueError):
        dairyabm.day_factor(2, 29)


def test_water_heating_equation():
    whc = dairyabm.water_heating_consumption(
        1.0, 75, 8, dairyabm.WaterHeatingMode.Electric
    )
    assert math.isclose(whc, 7.6020, rel_tol=0, abs_tol=1e-9)
    assert (
        dairyabm.water_heating_consumption(
            1.0, 75, 8, dairyabm.WaterHeatingMode.NonElectric
        )
        == 0.0
    )


def test_daily_report_decomposes():
    report = dairyabm.simulate_day(calibrated_farm(), 6, 15)
    assert report["date"] == "06-15"
    assert len(report["per_agent"]) == 9
    agent_sum = sum(sum(slots) for slots in report["per_agent"].values())
    assert math.isclose(agent_sum, report["total"], rel_tol=1e-9)
    assert math.isclose(sum(report["total_hourly"]), report["total"], rel_tol=1e-9)


def test_average_day_tracks_reference():
    assert math.isclose(dairyabm.average_day(calibrated_farm()), 72.745, rel_tol=0.01)


def test_sweep_matches_reference_and_increases():
    rows = dairyabm.builtin_reference_table()
    sizes = [row.herd_size for row in rows]
    points = dairyabm.sweep_herd_sizes(calibrated_farm(), sizes)
    previous = 0.0
    for (herd, kwh), row in zip(points, rows):
        assert herd == row.herd_size
        assert math.isclose(kwh, row.abm_kwh, rel_tol=0.02)
        assert kwh > previous
        previous = kwh


def test_validate_reports_published_errors():
    report = dairyabm.validate(calibrated_farm(), dairyabm.builtin_reference_table())
    assert [row.table_error_pct for row in report.rows] == [
        3.9, 5.5, 2.1, 2.6, 0.4, 1.9, 0.9,
    ]
    assert report.max_model_error_pct <= 5.5
    assert report.within_5_5


def test_config_validation_raises():
    config = calibrated_farm()
    config.herd_size = 0
    with pytest.raises(ValueError):
        dairyabm.simulate_day(config, 6, 15)
