import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from pydantic import ValidationError

from tlr.constants import GRAVITY
from tlr.environment.domain import IceLayer
from tlr.exceptions import ModelValidationError, TautLineError
from tlr.mechanics.domain import SagParameters, WindLoadParams
from tlr.mechanics.sag import (
    drag_coefficient,
    ice_load,
    initial_sag,
    sag_chain,
    tension_at_temperature,
    wind_load,
)

PARAMS = SagParameters(unit_weight=12.0)
WIND = WindLoadParams()


@pytest.mark.unit
def test_initial_sag_of_the_reference_line():
    # 12 N/m over 200 m at 30 kN
    assert initial_sag(PARAMS) == pytest.approx(2.0)


@pytest.mark.unit
def test_unperturbed_line_keeps_its_pretension():
    state = sag_chain(PARAMS, WIND, delta_theta=0.0, wind_speed=0.0)

    assert state.sag == pytest.approx(state.initial_sag)
    assert state.length == pytest.approx(state.initial_length)
    assert state.tension == pytest.approx(PARAMS.pretension)


@pytest.mark.unit
def test_heating_stretches_the_cable_and_relaxes_tension():
    cold = sag_chain(PARAMS, WIND, delta_theta=0.0, wind_speed=0.0)
    hot = sag_chain(PARAMS, WIND, delta_theta=50.0, wind_speed=0.0)

    assert hot.length == pytest.approx(cold.initial_length * (1.0 + 2.3e-5 * 50.0))
    assert hot.sag > cold.sag
    assert hot.tension < cold.tension


@pytest.mark.unit
@given(
    low=st.floats(min_value=-5.0, max_value=150.0),
    gap=st.floats(min_value=0.5, max_value=100.0),
)
@settings(max_examples=50, deadline=None)
def test_tension_decreases_with_temperature(low, gap):
    assert tension_at_temperature(PARAMS, WIND, low + gap, 0.0) < tension_at_temperature(
        PARAMS, WIND, low, 0.0
    )


@pytest.mark.unit
def test_wind_and_ice_raise_tension():
    calm = tension_at_temperature(PARAMS, WIND, 0.0, 0.0)
    windy = tension_at_temperature(PARAMS, WIND, 0.0, 30.48)
    iced = tension_at_temperature(PARAMS, WIND, 0.0, 0.0, ice=IceLayer(thickness=0.00635))

    assert windy > calm
    assert iced > calm


@pytest.mark.unit
def test_cooling_into_a_taut_line_is_an_error():
    with pytest.raises(TautLineError):
        sag_chain(PARAMS, WIND, delta_theta=-50.0, wind_speed=0.0)


@pytest.mark.unit
@pytest.mark.parametrize(
    "reynolds,expected",
    [
        (1.0, 2.0),
        (200.0, 10.0 * 200.0 ** (-1.0 / 3.0)),
        (1e3, 1.0),
        (1e4, 1.2),
        (1e5, 1.2),
        (1e6, 0.3),
    ],
)
def test_drag_coefficient_curve(reynolds, expected):
    assert drag_coefficient(reynolds) == pytest.approx(expected)


@pytest.mark.unit
def test_drag_coefficient_is_continuous_where_the_power_law_ends():
    below = drag_coefficient(1e3 * (1.0 - 1e-9))
    above = drag_coefficient(1e3 * (1.0 + 1e-9))

    assert below == pytest.approx(above, abs=1e-6)
    assert below == pytest.approx(1.0, abs=1e-6)


@pytest.mark.unit
@given(reynolds=st.floats(min_value=1e-3, max_value=1e8))
def test_drag_coefficient_stays_in_band(reynolds):
    assert 0.3 <= drag_coefficient(reynolds) <= 2.0


@pytest.mark.unit
@pytest.mark.parametrize("reynolds", [0.0, -10.0])
def test_drag_coefficient_rejects_non_positive_reynolds(reynolds):
    with pytest.raises(ModelValidationError):
        drag_coefficient(reynolds)


@pytest.mark.unit
def test_wind_load_oracle():
    # Re = 10 * 0.04 / 15e-6 ~ 2.7e4 sits on the 1.2 plateau
    expected = 0.5 * 1.225 * 10.0**2 * 1.2 * 0.04 * 1.0 * 0.6

    assert wind_load(WIND, 10.0) == pytest.approx(expected)
    assert wind_load(WIND, 0.0) == 0.0


@pytest.mark.unit
def test_ice_thickens_the_wind_profile():
    ice = IceLayer(thickness=0.01)

    assert wind_load(WIND, 10.0, ice) > wind_load(WIND, 10.0)


@pytest.mark.unit
def test_ice_load_oracle():
    assert ice_load(0.04, 0.01, 917.0) == pytest.approx(917.0 * math.pi * 0.05 * 0.01 * GRAVITY)


@pytest.mark.unit
def test_pretension_must_stay_below_ultimate_strength():
    with pytest.raises(ValidationError):
        SagParameters(unit_weight=12.0, pretension=200e3, ultimate_strength=150e3)
