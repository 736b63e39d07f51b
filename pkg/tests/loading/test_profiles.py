import math

import numpy as np
import pytest
from pydantic import ValidationError

from tlr.loading.domain import MIN_SPREAD_DEPTH_RATIO, AreaProfile, CurrentDemand
from tlr.loading.profiles import area_at, current_demand

NOMINAL_AREA = 4.42e-4


@pytest.mark.unit
@pytest.mark.parametrize(
    "t,expected",
    [
        (0.0, -1500.0),
        (0.125, -1600.0),
        (0.375, -1400.0),
        (0.5, -1500.0),
    ],
)
def test_current_demand_follows_semiannual_cycle(t, expected):
    assert current_demand(CurrentDemand(), t) == pytest.approx(expected)


@pytest.mark.unit
def test_current_demand_vectorizes():
    t = np.array([0.0, 0.125, 0.375])

    np.testing.assert_allclose(current_demand(CurrentDemand(), t), [-1500.0, -1600.0, -1400.0])


@pytest.mark.unit
@pytest.mark.parametrize("base,amplitude", [(1500.0, 100.0), (800.0, 400.0), (0.0, 50.0)])
def test_current_demand_averages_to_the_base_over_a_year(base, amplitude):
    t = np.arange(1000) / 1000.0

    mean = np.mean(current_demand(CurrentDemand(base=base, amplitude=amplitude), t))

    assert mean == pytest.approx(-base, abs=1e-9)


@pytest.mark.unit
@pytest.mark.parametrize("ratio", [0.75, 1.0, 1.5])
def test_area_notch_is_deepest_at_midspan(ratio):
    profile = AreaProfile(nominal_area=NOMINAL_AREA, spread_depth_ratio=ratio)
    x = np.linspace(0.0, profile.span, 401)

    area = area_at(profile, x)

    expected_min = NOMINAL_AREA * (1.0 - 1.0 / (ratio * math.sqrt(2.0 * math.pi)))
    assert area.min() == pytest.approx(expected_min)
    assert x[np.argmin(area)] == pytest.approx(profile.span / 2.0)
    assert area[0] == pytest.approx(NOMINAL_AREA)
    assert np.all(area > 0)


@pytest.mark.unit
def test_smaller_ratio_means_deeper_notch():
    severe = AreaProfile(nominal_area=NOMINAL_AREA, spread_depth_ratio=0.75)
    mild = AreaProfile(nominal_area=NOMINAL_AREA, spread_depth_ratio=1.5)

    assert area_at(severe, 100.0) < area_at(mild, 100.0)


@pytest.mark.unit
@pytest.mark.parametrize("ratio", [MIN_SPREAD_DEPTH_RATIO, 0.3, 0.0, -1.0])
def test_area_profile_rejects_non_positive_cross_section(ratio):
    with pytest.raises(ValidationError):
        AreaProfile(nominal_area=NOMINAL_AREA, spread_depth_ratio=ratio)
