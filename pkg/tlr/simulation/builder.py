"""Builder for the physical model from application configuration."""

import logging
from typing import Optional, Sequence

from tlr.configs.app_config import AppConfig
from tlr.constants import GRAVITY
from tlr.environment.domain import ScenarioConfig
from tlr.environment.presets import (
    REGION_KIND,
    REGION_SPREAD_DEPTH_RATIO,
    default_events,
    region_series,
    severity_spread_depth_ratio,
)
from tlr.loading.data import load_monthly_series
from tlr.loading.domain import AreaProfile, MonthlySeries, QuantityKind
from tlr.loading.fourier import dft_coefficients
from tlr.mechanics.domain import SagParameters, WindLoadParams
from tlr.simulation.domain import SimulationConfig

logger = logging.getLogger(__name__)


def _monthly(
    inline: Optional[Sequence[float]],
    path: Optional[str],
    kind: QuantityKind,
    fallback: MonthlySeries,
) -> MonthlySeries:
    if inline is not None:
        return MonthlySeries(values=tuple(inline), quantity_kind=kind)
    if path is not None:
        return load_monthly_series(path, kind)
    return fallback


def scenario_series(config: AppConfig) -> tuple[MonthlySeries, MonthlySeries]:
    """Monthly wind and temperature: inline values, then files, then the region defaults."""
    section = config.scenario
    region_wind, region_temperature = region_series(section.region)
    wind = _monthly(section.wind_series, section.wind_file, QuantityKind.WIND, region_wind)
    temperature = _monthly(
        section.temperature_series,
        section.temperature_file,
        QuantityKind.TEMPERATURE,
        region_temperature,
    )
    return wind, temperature


def build_scenario(config: AppConfig) -> ScenarioConfig:
    section = config.scenario
    wind, temperature = scenario_series(config)
    kind = section.kind or REGION_KIND[section.region]
    events = config.events if config.events is not None else default_events(kind, temperature)
    return ScenarioConfig(
        kind=kind,
        wind_loading=dft_coefficients(wind),
        temp_loading=dft_coefficients(temperature),
        current=section.current,
        events=tuple(events),
        wind_base_scale=section.wind_base_scale,
        temp_base_scale=section.temp_base_scale,
    )


def build_area(config: AppConfig) -> AreaProfile:
    area = config.area
    if area.spread_depth_ratio is not None:
        ratio = area.spread_depth_ratio
    elif area.severity is not None:
        ratio = severity_spread_depth_ratio(area.severity)
    else:
        ratio = REGION_SPREAD_DEPTH_RATIO[config.scenario.region]
    return AreaProfile(
        nominal_area=config.material.nominal_area, spread_depth_ratio=ratio, span=area.span
    )


def build_simulation_config(config: AppConfig) -> SimulationConfig:
    material = config.material
    cable = config.cable
    area = build_area(config)
    unit_weight = cable.unit_weight or material.density * material.nominal_area * GRAVITY
    sag = SagParameters(
        span=area.span,
        pretension=cable.pretension_ratio * cable.ultimate_strength,
        unit_weight=unit_weight,
        thermal_expansion=cable.thermal_expansion,
        reference_temp=material.reference_temp,
        ultimate_strength=cable.ultimate_strength,
    )
    wind = WindLoadParams(
        air_density=material.air.density,
        attack_angle=cable.attack_angle,
        span_factor=cable.span_factor,
        diameter=material.diameter,
        kinematic_viscosity=material.air.kinematic_viscosity,
    )
    sim = config.simulation
    simulation_config = SimulationConfig(
        scenario=build_scenario(config),
        material=material,
        sag=sag,
        wind=wind,
        area=area,
        dt=sim.dt,
        horizon=sim.horizon,
        theta_limit=sim.theta_limit,
        phi_limit=sim.phi_limit,
        n_elements=sim.n_elements,
        snapshot_interval=sim.snapshot_interval,
        sag_temperature=sim.sag_temperature,
        fixed_point=sim.fixed_point,
        fixed_point_max_iter=sim.fixed_point_max_iter,
        fixed_point_tol=sim.fixed_point_tol,
    )
    logger.debug(
        f"Built {simulation_config.scenario.kind.value} model: A_sigma={area.spread_depth_ratio}, "
        f"H0={sag.pretension:.0f} N, {simulation_config.n_steps} steps"
    )
    return simulation_config
