import ast
import re
from typing import Any, List, Mapping, Optional

import yaml
from omegaconf import DictConfig, ListConfig, OmegaConf

from tlr.exceptions import ModelValidationError

# Typed CLI flags and the config keys they override
FLAG_KEYS: dict[str, str] = {
    "dt": "simulation.dt",
    "horizon": "simulation.horizon",
    "snapshots": "simulation.snapshot_interval",
    "points": "stochastic.points",
    "samples": "stochastic.samples",
    "seed": "stochastic.seed",
    "space": "stochastic.space",
    "jobs": "runner.jobs",
    "out": "runner.out_dir",
}


def parse_override(override: str) -> tuple[str, str]:
    """Split 'section.key=value' into key and raw value."""
    if "=" not in override:
        raise ModelValidationError(
            "invalid override, expected 'key=value' or 'section.key=value'",
            key=override,
        )
    key, value = override.split("=", 1)
    key = key.strip()
    if not key or any(not part for part in key.split(".")):
        raise ModelValidationError("invalid override key", key=override)
    return key, value.strip()


def parse_value(value: str) -> Any:
    """Parse an override value without eval.

    Python literals first (so 1e-6 stays a float), then YAML for bare words,
    booleans, null and flow lists such as [a, b].
    """
    try:
        return ast.literal_eval(value)
    except (ValueError, SyntaxError):
        pass
    try:
        return yaml.safe_load(value)
    except yaml.YAMLError:
        return value


def flag_overrides(flags: Mapping[str, Optional[Any]]) -> List[str]:
    """Turn typed CLI flags into dotted overrides, skipping flags left unset."""
    overrides = []
    for flag, value in flags.items():
        if value is None:
            continue
        if flag not in FLAG_KEYS:
            raise ModelValidationError("unknown flag", key=flag, expected=sorted(FLAG_KEYS))
        overrides.append(f"{FLAG_KEYS[flag]}={value}")
    return overrides


def apply_overrides(
    config: DictConfig | ListConfig, overrides: List[str]
) -> DictConfig | ListConfig:
    """
    Merge dotted overrides into a configuration.

    Comma-separated pairs in one argument are split, except inside brackets.
    Unknown keys are merged as given and rejected later by schema validation.
    """
    if not overrides:
        return config

    flattened: list[str] = []
    for item in overrides:
        parts = re.split(pattern=r",(?![^\[]*\])", string=item)
        flattened.extend([p for p in (part.strip() for part in parts) if p])

    override_conf: dict[str, Any] = {}
    for override in flattened:
        key, raw_value = parse_override(override)
        current = override_conf
        key_parts = key.split(".")
        for part in key_parts[:-1]:
            current = current.setdefault(part, {})
            if not isinstance(current, dict):
                raise ModelValidationError("override conflicts with a scalar key", key=key)
        current[key_parts[-1]] = parse_value(raw_value)

    return OmegaConf.merge(config, OmegaConf.create(override_conf))
