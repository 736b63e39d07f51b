"""Published monthly weather for the three study regions and their default event schedules."""

from enum import Enum
from typing import Optional

from tlr.constants import FREEZING_POINT, FT_TO_M, INCH_TO_M, MONTHS_PER_YEAR
from tlr.environment.domain import (
    EventWindow,
    ExtremeWind,
    IceLayer,
    ScenarioConfig,
    ScenarioKind,
    Wildfire,
)
from tlr.exceptions import ModelValidationError
from tlr.loading.domain import CurrentDemand, MonthlySeries, QuantityKind
from tlr.loading.fourier import dft_coefficients, sample_instants


class Region(str, Enum):
    AMARILLO_TX = "amarillo_tx"
    SAN_DIEGO_CA = "san_diego_ca"
    BETHEL_AK = "bethel_ak"


class Severity(str, Enum):
    MILD = "mild"
    MODERATE = "moderate"
    SEVERE = "severe"


# ft/s, January first
REGION_WIND: dict[Region, tuple[float, ...]] = {
    Region.AMARILLO_TX: (17.75, 18.92, 20.39, 21.56, 20.09, 20.39, 18.19, 16.72, 17.75, 18.33, 18.63, 17.89),
    Region.SAN_DIEGO_CA: (7.48, 8.95, 9.68, 10.56, 10.85, 10.56, 10.27, 9.97, 9.68, 8.36, 7.48, 7.19),
    Region.BETHEL_AK: (20.68, 20.24, 18.77, 17.01, 15.55, 14.23, 14.08, 15.11, 15.40, 16.72, 18.04, 18.92),
}  # fmt: skip

# K, January first
REGION_TEMPERATURE: dict[Region, tuple[float, ...]] = {
    Region.AMARILLO_TX: (276.87, 280.98, 284.76, 287.32, 290.43, 298.32, 301.37, 297.59, 295.15, 291.87, 284.37, 276.54),
    Region.SAN_DIEGO_CA: (289.15, 290.43, 292.37, 291.93, 290.93, 293.65, 295.59, 297.09, 298.26, 296.71, 290.54, 287.65),
    Region.BETHEL_AK: (256.48, 261.82, 257.32, 268.98, 279.54, 283.65, 284.98, 284.93, 281.76, 272.87, 266.37, 256.82),
}  # fmt: skip

REGION_KIND: dict[Region, ScenarioKind] = {
    Region.AMARILLO_TX: ScenarioKind.HIGH_WIND,
    Region.SAN_DIEGO_CA: ScenarioKind.WILDFIRE,
    Region.BETHEL_AK: ScenarioKind.ICING,
}

# Initial-damage notch width per region; narrower notches mean deeper damage
REGION_SPREAD_DEPTH_RATIO: dict[Region, float] = {
    Region.AMARILLO_TX: 1.0,
    Region.SAN_DIEGO_CA: 0.75,
    Region.BETHEL_AK: 1.5,
}

SEVERITY_SPREAD_DEPTH_RATIO: dict[Severity, float] = {
    Severity.MILD: 1.5,
    Severity.MODERATE: 1.0,
    Severity.SEVERE: 0.75,
}

DEFAULT_EXTREME_WIND = 100.0 * FT_TO_M
DEFAULT_ICE_THICKNESS = 0.25 * INCH_TO_M
DEFAULT_FIRE_START = 10.0
DEFAULT_FIRE_DURATION = 0.02


def region_series(region: Region | str) -> tuple[MonthlySeries, MonthlySeries]:
    """(wind, temperature) monthly rows for a study region."""
    region = Region(region)
    return (
        MonthlySeries(values=REGION_WIND[region], quantity_kind=QuantityKind.WIND),
        MonthlySeries(
            values=REGION_TEMPERATURE[region], quantity_kind=QuantityKind.TEMPERATURE
        ),
    )


def severity_spread_depth_ratio(severity: Severity | str) -> float:
    try:
        return SEVERITY_SPREAD_DEPTH_RATIO[Severity(severity)]
    except ValueError as e:
        raise ModelValidationError(
            "unknown damage severity",
            key="area.severity",
            expected=[s.value for s in Severity],
            got=severity,
        ) from e


def cold_month_windows(
    temperature: MonthlySeries, thickness: float = DEFAULT_ICE_THICKNESS
) -> tuple[EventWindow, ...]:
    """One yearly ice window per month whose mean temperature is below freezing."""
    starts = sample_instants()
    return tuple(
        EventWindow(
            start=float(starts[m]),
            duration=1.0 / MONTHS_PER_YEAR,
            period=1.0,
            payload=IceLayer(thickness=thickness),
        )
        for m, value in enumerate(temperature.values)
        if value < FREEZING_POINT
    )


def default_events(
    kind: ScenarioKind, temperature: MonthlySeries
) -> tuple[EventWindow, ...]:
    if kind is ScenarioKind.HIGH_WIND:
        return (
            EventWindow(
                start=1.0,
                duration=1.0 / MONTHS_PER_YEAR,
                period=1.0,
                payload=ExtremeWind(w_max=DEFAULT_EXTREME_WIND),
            ),
        )
    if kind is ScenarioKind.WILDFIRE:
        return (
            EventWindow(
                start=DEFAULT_FIRE_START,
                duration=DEFAULT_FIRE_DURATION,
                payload=Wildfire(),
            ),
        )
    return cold_month_windows(temperature)


def scenario_presets(
    region: Region | str,
    current: Optional[CurrentDemand] = None,
) -> ScenarioConfig:
    """Scenario for a study region with its published rows and default events."""
    region = Region(region)
    wind, temperature = region_series(region)
    kind = REGION_KIND[region]
    return ScenarioConfig(
        kind=kind,
        wind_loading=dft_coefficients(wind),
        temp_loading=dft_coefficients(temperature),
        current=current or CurrentDemand(),
        events=default_events(kind, temperature),
    )
