from .domain import FieldState, HeatExchangeMode, HeatExchangeSpec, Mesh
from .electrical import degraded_conductivity, element_flux, solve_voltage
from .mechanics import (
    recover_strain,
    solve_damage,
    solve_displacement,
    step_fatigue,
    update_history,
)
from .thermal import convective_coefficient, heat_balance, heat_exchange_for, solve_temperature

__all__ = [
    "FieldState",
    "HeatExchangeMode",
    "HeatExchangeSpec",
    "Mesh",
    "convective_coefficient",
    "degraded_conductivity",
    "element_flux",
    "heat_balance",
    "heat_exchange_for",
    "recover_strain",
    "solve_damage",
    "solve_displacement",
    "solve_temperature",
    "solve_voltage",
    "step_fatigue",
    "update_history",
]
