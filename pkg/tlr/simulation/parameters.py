"""Named scalar parameters of a SimulationConfig that studies can vary."""

import logging
from enum import Enum
from typing import Any, Mapping, TypeVar

from pydantic import BaseModel

from tlr.environment.domain import EventWindow, ExtremeWind, IceLayer, Wildfire
from tlr.exceptions import ModelValidationError
from tlr.simulation.domain import SimulationConfig

logger = logging.getLogger(__name__)

M = TypeVar("M", bound=BaseModel)


class ParameterName(str, Enum):
    G_C = "g_c"
    AGING = "a"
    GAMMA = "gamma"
    A_SIGMA = "A_sigma"
    THETA_B = "theta_b"
    W_B = "w_b"
    I_B = "I_b"
    I_A = "I_A"
    W_MAX = "w_max"
    T_FIRE = "T_fire"
    V_F = "V_f"
    T_ICE = "t_ice"


# Event parameters: payload type and field they set on every matching window
_EVENT_FIELDS: dict[ParameterName, tuple[type[BaseModel], str]] = {
    ParameterName.W_MAX: (ExtremeWind, "w_max"),
    ParameterName.T_FIRE: (Wildfire, "flame_temp"),
    ParameterName.V_F: (Wildfire, "view_factor"),
    ParameterName.T_ICE: (IceLayer, "thickness"),
}


def _updated(model: M, **changes: Any) -> M:
    """Copy with changes, re-running validation."""
    return type(model).model_validate({**model.model_dump(), **changes})


def parse_parameter_name(name: str) -> ParameterName:
    try:
        return ParameterName(name)
    except ValueError as e:
        raise ModelValidationError(
            "unknown parameter",
            key=name,
            expected=[p.value for p in ParameterName],
            got=name,
        ) from e


def _matching_windows(cfg: SimulationConfig, name: ParameterName) -> list[int]:
    payload_type, _ = _EVENT_FIELDS[name]
    indices = [
        i for i, window in enumerate(cfg.scenario.events) if isinstance(window.payload, payload_type)
    ]
    if not indices:
        raise ModelValidationError(
            f"parameter {name.value} needs a {payload_type.__name__} event in the scenario",
            key=name.value,
            details={"scenario_kind": cfg.scenario.kind.value},
        )
    return indices


def parameter_baseline(cfg: SimulationConfig, name: str) -> float:
    """Current value of a named parameter in the config."""
    param = parse_parameter_name(name)
    match param:
        case ParameterName.G_C:
            return cfg.material.fracture_energy
        case ParameterName.AGING:
            return cfg.material.aging_coeff
        case ParameterName.GAMMA:
            return cfg.material.damage_layer_width
        case ParameterName.A_SIGMA:
            return cfg.area.spread_depth_ratio
        case ParameterName.THETA_B:
            return cfg.scenario.temp_base_scale
        case ParameterName.W_B:
            return cfg.scenario.wind_base_scale
        case ParameterName.I_B:
            return cfg.scenario.current.base
        case ParameterName.I_A:
            return cfg.scenario.current.amplitude
    _, field_name = _EVENT_FIELDS[param]
    first = cfg.scenario.events[_matching_windows(cfg, param)[0]]
    return float(getattr(first.payload, field_name))


def apply_parameters(cfg: SimulationConfig, values: Mapping[str, float]) -> SimulationConfig:
    """Return a config with each named parameter set to the given value."""
    material = cfg.material
    area = cfg.area
    scenario = cfg.scenario
    current = scenario.current
    scenario_changes: dict[str, Any] = {}
    events = list(scenario.events)

    for raw_name, value in values.items():
        param = parse_parameter_name(raw_name)
        value = float(value)
        match param:
            case ParameterName.G_C:
                material = _updated(material, fracture_energy=value)
            case ParameterName.AGING:
                material = _updated(material, aging_coeff=value)
            case ParameterName.GAMMA:
                material = _updated(material, damage_layer_width=value)
            case ParameterName.A_SIGMA:
                area = _updated(area, spread_depth_ratio=value)
            case ParameterName.THETA_B:
                scenario_changes["temp_base_scale"] = value
            case ParameterName.W_B:
                scenario_changes["wind_base_scale"] = value
            case ParameterName.I_B:
                current = _updated(current, base=value)
            case ParameterName.I_A:
                current = _updated(current, amplitude=value)
            case _:
                _, field_name = _EVENT_FIELDS[param]
                for i in _matching_windows(cfg, param):
                    window = events[i]
                    events[i] = EventWindow(
                        start=window.start,
                        duration=window.duration,
                        period=window.period,
                        payload=_updated(window.payload, **{field_name: value}),
                    )

    scenario = _updated(
        scenario,
        current=current.model_dump(),
        events=[e.model_dump() for e in events],
        **scenario_changes,
    )
    return cfg.model_copy(update={"material": material, "area": area, "scenario": scenario})
