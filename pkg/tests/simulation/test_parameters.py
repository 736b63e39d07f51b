import pytest

from tlr.environment.domain import EventWindow, ExtremeWind, ScenarioKind, Wildfire
from tlr.exceptions import ModelValidationError
from tlr.simulation.domain import FailureMode
from tlr.simulation.parameters import ParameterName, apply_parameters, parameter_baseline
from tlr.simulation.sweep import sweep_failure_times

GUSTS = (
    EventWindow(start=0.0, duration=0.1, period=0.5, payload=ExtremeWind(w_max=30.0)),
    EventWindow(start=0.2, duration=0.1, payload=ExtremeWind(w_max=25.0)),
)


@pytest.mark.unit
@pytest.mark.parametrize(
    "name,value",
    [
        ("g_c", 12e3),
        ("a", 2e-10),
        ("gamma", 0.03),
        ("A_sigma", 1.5),
        ("theta_b", 1.05),
        ("w_b", 0.9),
        ("I_b", 1200.0),
        ("I_A", 80.0),
        ("w_max", 40.0),
    ],
)
def test_applied_value_reads_back_as_the_baseline(config_factory, name, value):
    cfg = config_factory(events=GUSTS)

    updated = apply_parameters(cfg, {name: value})

    assert parameter_baseline(updated, name) == pytest.approx(value)
    assert parameter_baseline(cfg, name) != pytest.approx(value)


@pytest.mark.unit
def test_event_parameters_update_every_matching_window(config_factory):
    cfg = config_factory(events=GUSTS)

    updated = apply_parameters(cfg, {"w_max": 40.0})

    assert [w.payload.w_max for w in updated.scenario.events] == [40.0, 40.0]
    assert [w.start for w in updated.scenario.events] == [0.0, 0.2]


@pytest.mark.unit
def test_fire_parameters(config_factory):
    fire = (EventWindow(start=0.5, duration=0.02, payload=Wildfire()),)
    cfg = config_factory(events=fire, kind=ScenarioKind.WILDFIRE)

    updated = apply_parameters(cfg, {"T_fire": 1300.0, "V_f": 0.002})

    assert updated.scenario.events[0].payload.flame_temp == 1300.0
    assert updated.scenario.events[0].payload.view_factor == 0.002


@pytest.mark.unit
def test_original_config_is_left_untouched(config_factory):
    cfg = config_factory()

    apply_parameters(cfg, {"g_c": 1.0, "A_sigma": 2.0})

    assert cfg.material.fracture_energy == 10e3
    assert cfg.area.spread_depth_ratio == 1.0


@pytest.mark.unit
@pytest.mark.parametrize(
    "values",
    [
        {"bogus": 1.0},
        {"t_ice": 0.01},
        {"V_f": 0.01},
    ],
)
def test_unknown_or_inapplicable_parameters_are_rejected(config_factory, values):
    with pytest.raises(ModelValidationError):
        apply_parameters(config_factory(), values)


@pytest.mark.unit
@pytest.mark.parametrize("values", [{"A_sigma": 0.2}, {"V_f": 2.0}, {"g_c": -1.0}])
def test_out_of_range_values_fail_validation(config_factory, values):
    fire = (EventWindow(start=0.5, duration=0.02, payload=Wildfire()),)
    cfg = config_factory(events=fire, kind=ScenarioKind.WILDFIRE)

    with pytest.raises(ValueError):
        apply_parameters(cfg, values)


@pytest.mark.unit
def test_parameter_names_cover_all_random_inputs():
    assert {p.value for p in ParameterName} == {
        "g_c", "a", "gamma", "A_sigma", "theta_b", "w_b", "I_b", "I_A", "w_max", "T_fire", "V_f", "t_ice"
    }  # fmt: skip


@pytest.mark.integration
def test_sweep_reports_failure_time_and_mode_per_value(config_factory):
    cfg = config_factory(
        events=(EventWindow(start=0.5, duration=0.2, payload=Wildfire()),),
        kind=ScenarioKind.WILDFIRE,
        wind=3.0,
    )

    rows = sweep_failure_times(cfg, "V_f", [0.0, 0.0125])

    assert [r.value for r in rows] == [0.0, 0.0125]
    assert rows[0].failure_time is None and rows[0].mode is None
    assert rows[1].mode is FailureMode.TEMPERATURE
    assert rows[1].failure_time == pytest.approx(0.5)
