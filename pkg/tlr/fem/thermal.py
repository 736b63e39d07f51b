import logging
import math
from bisect import bisect_right
from dataclasses import dataclass

import numpy as np

from tlr.constants import FREEZING_POINT
from tlr.domain import AirProperties, MaterialProperties
from tlr.environment.domain import AmbientState
from tlr.fem.assembly import (
    area_at_gauss,
    assemble_load,
    assemble_mass,
    assemble_stiffness,
    at_gauss,
    diameter_from_area,
    element_gradient,
    solve_spd,
)
from tlr.fem.domain import FieldState, FloatArray, HeatExchangeMode, HeatExchangeSpec, Mesh
from tlr.fem.electrical import conductance_coefficient
from tlr.loading.domain import AreaProfile

logger = logging.getLogger(__name__)

# Forced convection across a cylinder: Nu = C Re^m Pr^(1/3)
# Upper Reynolds bounds of the bands and their (C, m)
_NUSSELT_BOUNDS = (4.0, 40.0, 4000.0, 40000.0)
_NUSSELT_ROWS = (
    (0.989, 0.330),
    (0.911, 0.385),
    (0.683, 0.466),
    (0.193, 0.618),
    (0.027, 0.805),
)


def nusselt_row(reynolds: float) -> tuple[float, float]:
    """(C, m) for the band containing Re; out-of-table values use the nearest band."""
    return _NUSSELT_ROWS[bisect_right(_NUSSELT_BOUNDS, reynolds)]


def convective_coefficient(wind_speed: float, diameter: float, air: AirProperties) -> float:
    if wind_speed <= 0:
        return air.natural_convection_floor
    reynolds = wind_speed * diameter / air.kinematic_viscosity
    c, m = nusselt_row(reynolds)
    nusselt = c * reynolds**m * air.prandtl ** (1.0 / 3.0)
    return max(nusselt * air.thermal_conductivity / diameter, air.natural_convection_floor)


def heat_exchange_for(ambient: AmbientState, props: MaterialProperties) -> HeatExchangeSpec:
    h = convective_coefficient(ambient.wind_speed, props.diameter, props.air)
    if ambient.ice is not None and ambient.ice.thickness > 0:
        return HeatExchangeSpec(
            mode=HeatExchangeMode.ICE_COVERED,
            h=h,
            ambient_temp=ambient.ambient_temp,
            ice=ambient.ice,
        )
    if ambient.fire is not None:
        return HeatExchangeSpec(
            mode=HeatExchangeMode.CONVECTIVE_PLUS_FIRE,
            h=h,
            ambient_temp=ambient.ambient_temp,
            fire=ambient.fire,
        )
    return HeatExchangeSpec(mode=HeatExchangeMode.CONVECTIVE, h=h, ambient_temp=ambient.ambient_temp)


def joule_source(
    mesh: Mesh, props: MaterialProperties, state: FieldState, area: AreaProfile, spec: HeatExchangeSpec
) -> FloatArray:
    """sigma_E A V'^2 at Gauss points, from the voltage of the previous step."""
    coeff = conductance_coefficient(mesh, props, state, area, spec.ice)
    return coeff * element_gradient(mesh, state.voltage)[:, None] ** 2


def _ice_conductance(spec: HeatExchangeSpec, props: MaterialProperties, diameter: FloatArray) -> FloatArray:
    assert spec.ice is not None
    r1 = diameter / 2.0
    r2 = r1 + spec.ice.thickness
    return 2.0 * math.pi * props.ice.thermal_conductivity / np.log(r2 / r1)


def _exchange_terms(
    mesh: Mesh,
    props: MaterialProperties,
    state: FieldState,
    spec: HeatExchangeSpec,
    area_gp: FloatArray,
) -> tuple[FloatArray, FloatArray]:
    """(linear coefficient, source) of the surface exchange at Gauss points."""
    diameter = diameter_from_area(area_gp)
    surface = np.pi * diameter

    if spec.mode is HeatExchangeMode.ICE_COVERED:
        assert spec.ice is not None and spec.ice.ice_temp is not None
        conductance = _ice_conductance(spec, props, diameter)
        source = conductance * spec.ice.ice_temp
        t = spec.ice.thickness
        melt = (
            props.ice.density
            * np.pi
            * (diameter + t)
            * t
            * props.ice.latent_heat
            / props.ice.melt_duration
        )
        melting = at_gauss(state.theta) > FREEZING_POINT
        return conductance, source - np.where(melting, melt, 0.0)

    coeff = spec.h * surface
    source = coeff * spec.ambient_temp
    if spec.mode is HeatExchangeMode.CONVECTIVE_PLUS_FIRE:
        assert spec.fire is not None
        fire = spec.fire
        source = source + (
            fire.emissivity
            * spec.stefan_boltzmann
            * fire.flame_temp**4
            * fire.view_factor
            * fire.transmissivity
            * surface
        )
    return coeff, source


def solve_temperature(
    mesh: Mesh,
    props: MaterialProperties,
    state: FieldState,
    spec: HeatExchangeSpec,
    area: AreaProfile,
) -> FloatArray:
    """Steady conductor temperature with zero-flux ends."""
    area_gp = area_at_gauss(mesh, area)
    exchange_coeff, exchange_source = _exchange_terms(mesh, props, state, spec, area_gp)

    k_diag, k_off = assemble_stiffness(mesh, props.thermal_conductivity * area_gp)
    m_diag, m_off = assemble_mass(mesh, np.broadcast_to(exchange_coeff, area_gp.shape))
    rhs = assemble_load(mesh, joule_source(mesh, props, state, area, spec) + exchange_source)
    return solve_spd(k_diag + m_diag, k_off + m_off, rhs, field="temperature")


@dataclass(frozen=True)
class HeatBalance:
    joule: float
    exchange: float

    @property
    def relative_residual(self) -> float:
        scale = max(abs(self.joule), abs(self.exchange), 1e-300)
        return abs(self.joule - self.exchange) / scale


def heat_balance(
    mesh: Mesh,
    props: MaterialProperties,
    state: FieldState,
    theta: FloatArray,
    spec: HeatExchangeSpec,
    area: AreaProfile,
) -> HeatBalance:
    """Total Joule input against total surface loss of a temperature solution, per line."""
    area_gp = area_at_gauss(mesh, area)
    exchange_coeff, exchange_source = _exchange_terms(mesh, props, state, spec, area_gp)
    half_h = mesh.h / 2.0
    joule = half_h * float(joule_source(mesh, props, state, area, spec).sum())
    loss = exchange_coeff * at_gauss(theta) - exchange_source
    return HeatBalance(joule=joule, exchange=half_h * float(np.sum(loss)))
