import pytest

from tests.fakes import make_config
from tlr.environment.domain import EventWindow, ExtremeWind, IceLayer, ScenarioKind, Wildfire
from tlr.exceptions import ModelValidationError
from tlr.stochastic.presets import (
    SPACE_PRESETS,
    load_space_file,
    preset_names,
    resolve_space,
    space_preset,
)

GUST = (EventWindow(start=0.5, duration=0.1, payload=ExtremeWind(w_max=30.48)),)
FIRE = (EventWindow(start=0.5, duration=0.02, payload=Wildfire()),)
ICE = (EventWindow(start=0.0, duration=0.1, period=1.0, payload=IceLayer(thickness=0.00635)),)


@pytest.mark.unit
@pytest.mark.parametrize("name", ["xi_3", "xi3", "XI_3", "xi-3"])
def test_preset_spellings(name):
    assert preset_names(name) == SPACE_PRESETS["xi_3"]


@pytest.mark.unit
def test_unknown_preset_is_rejected():
    with pytest.raises(ModelValidationError):
        preset_names("xi_9")


@pytest.mark.unit
def test_presets_stay_within_six_dimensions():
    assert all(1 <= len(names) <= 6 for names in SPACE_PRESETS.values())


@pytest.mark.unit
@pytest.mark.parametrize(
    "events,kind,name,event_parameter",
    [
        (GUST, ScenarioKind.HIGH_WIND, "xi_1", "w_max"),
        (FIRE, ScenarioKind.WILDFIRE, "xi_2", "V_f"),
        (ICE, ScenarioKind.ICING, "xi_3", "t_ice"),
    ],
)
def test_scenario_spaces_bracket_the_config_values(events, kind, name, event_parameter):
    cfg = make_config(events=events, kind=kind)

    space = space_preset(cfg, name, spread=0.1)

    assert event_parameter in space.names
    g_c = space.parameters[space.names.index("g_c")]
    assert (g_c.lower, g_c.upper) == pytest.approx((9e3, 11e3))


@pytest.mark.unit
def test_event_space_without_the_event_is_rejected():
    with pytest.raises(ModelValidationError):
        space_preset(make_config(), "xi_1")


@pytest.mark.unit
@pytest.mark.parametrize(
    "kind,events,expected",
    [
        (ScenarioKind.HIGH_WIND, GUST, "xi_1"),
        (ScenarioKind.WILDFIRE, FIRE, "xi_2"),
        (ScenarioKind.ICING, ICE, "xi_3"),
    ],
)
def test_default_space_follows_the_scenario(kind, events, expected):
    space = resolve_space(make_config(events=events, kind=kind), None)

    assert tuple(space.names) == SPACE_PRESETS[expected]


@pytest.mark.unit
def test_space_file_mixes_named_and_bounded_parameters(tmp_path):
    path = tmp_path / "space.yaml"
    path.write_text("parameters:\n  - g_c\n  - {name: w_b, lower: 0.5, upper: 1.5}\n")

    space = resolve_space(make_config(), str(path), spread=0.2)

    assert space.names == ["g_c", "w_b"]
    assert (space.parameters[0].lower, space.parameters[0].upper) == pytest.approx((8e3, 12e3))
    assert (space.parameters[1].lower, space.parameters[1].upper) == (0.5, 1.5)


@pytest.mark.unit
def test_space_file_must_hold_a_list(tmp_path):
    path = tmp_path / "space.yaml"
    path.write_text("g_c: 1.0\n")

    with pytest.raises(ModelValidationError):
        load_space_file(path, make_config())
