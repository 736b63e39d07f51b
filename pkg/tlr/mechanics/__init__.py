from .domain import SagParameters, SagState, WindLoadParams
from .sag import (
    drag_coefficient,
    ice_load,
    initial_sag,
    sag_chain,
    tension_at_temperature,
    wind_load,
)

__all__ = [
    "SagParameters",
    "SagState",
    "WindLoadParams",
    "drag_coefficient",
    "ice_load",
    "initial_sag",
    "sag_chain",
    "tension_at_temperature",
    "wind_load",
]
