"""Named random spaces for the collocation studies."""

from pathlib import Path
from typing import Optional, Sequence

import yaml

from tlr.environment.domain import ScenarioKind
from tlr.exceptions import ModelValidationError
from tlr.simulation.domain import SimulationConfig
from tlr.simulation.parameters import parameter_baseline
from tlr.stochastic.domain import RandomParameter, RandomSpace

SPACE_PRESETS: dict[str, tuple[str, ...]] = {
    "xi_m": ("A_sigma", "gamma", "g_c", "a"),
    "xi_c": ("g_c", "a", "theta_b", "w_b", "I_b", "I_A"),
    "xi_f1": ("g_c", "a", "w_b", "I_b"),
    "xi_f2": ("g_c", "a", "w_b", "I_b"),
    "xi_f3": ("g_c", "a", "w_b", "I_b"),
    "xi_1": ("g_c", "a", "w_b", "I_b", "w_max"),
    "xi_2": ("g_c", "a", "w_b", "I_b", "T_fire", "V_f"),
    "xi_3": ("g_c", "a", "w_b", "I_b", "t_ice"),
}


def preset_names(name: str) -> tuple[str, ...]:
    key = name.replace("-", "_").lower()
    # Accept the compact spelling, e.g. "xi3"
    if key not in SPACE_PRESETS and key.startswith("xi") and not key.startswith("xi_"):
        key = "xi_" + key[2:]
    try:
        return SPACE_PRESETS[key]
    except KeyError as e:
        raise ModelValidationError(
            "unknown random space", key="stochastic.space", expected=sorted(SPACE_PRESETS), got=name
        ) from e


def space_around(cfg: SimulationConfig, names: Sequence[str], spread: float = 0.1) -> RandomSpace:
    """Uniform space of +/- spread around each parameter's value in the config."""
    return RandomSpace(
        parameters=tuple(
            RandomParameter.around(name, parameter_baseline(cfg, name), spread) for name in names
        )
    )


def space_preset(cfg: SimulationConfig, name: str, spread: float = 0.1) -> RandomSpace:
    return space_around(cfg, preset_names(name), spread)

DEFAULT_SPACE: dict[ScenarioKind, str] = {
    ScenarioKind.HIGH_WIND: "xi_1",
    ScenarioKind.WILDFIRE: "xi_2",
    ScenarioKind.ICING: "xi_3",
}


def load_space_file(path: str | Path, cfg: SimulationConfig, spread: float = 0.1) -> RandomSpace:
    """Read a random space from YAML.

    Entries are either bare parameter names, placed around the config value, or
    mappings with explicit bounds:

        parameters:
          - g_c
          - {name: w_max, lower: 25.0, upper: 35.0}
    """
    with open(path, encoding="utf-8") as f:
        data = yaml.safe_load(f)
    entries = data.get("parameters") if isinstance(data, dict) else data
    if not isinstance(entries, list):
        raise ModelValidationError(
            "random space file must hold a list of parameters", key="stochastic.space", got=path
        )

    parameters = []
    for entry in entries:
        if isinstance(entry, str):
            parameters.append(RandomParameter.around(entry, parameter_baseline(cfg, entry), spread))
        else:
            parameters.append(RandomParameter.model_validate(entry))
    return RandomSpace(parameters=tuple(parameters))


def resolve_space(cfg: SimulationConfig, name: Optional[str], spread: float = 0.1) -> RandomSpace:
    """Preset name, YAML file, or the scenario's default space when name is None."""
    if name is None:
        name = DEFAULT_SPACE[cfg.scenario.kind]
    if name.endswith((".yaml", ".yml")) or Path(name).is_file():
        return load_space_file(name, cfg, spread)
    return space_preset(cfg, name, spread)
