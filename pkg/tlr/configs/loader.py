import logging
from pathlib import Path
from typing import List, Optional, Sequence, Type, TypeVar, cast

import yaml
from dotenv import load_dotenv
from omegaconf import DictConfig, ListConfig, OmegaConf
from omegaconf.errors import OmegaConfBaseException
from pydantic import BaseModel

from tlr.configs.app_config import AppConfig
from tlr.configs.overrides import apply_overrides
from tlr.constants import PACKAGE_NAME, PACKAGE_PATH
from tlr.exceptions import ModelValidationError

logger = logging.getLogger(__name__)

ConfigSource = str | Path


def _packaged_config_dirs() -> list[Path]:
    # Installed package first, then the source tree
    dirs = [Path(PACKAGE_PATH) / "configs", Path(__file__).parent]
    return list(dict.fromkeys(d.resolve() for d in dirs if d.is_dir()))


def available_presets() -> list[str]:
    """Names usable as 'tlr:<name>': default plus the packaged regions."""
    return sorted({p.stem for d in _packaged_config_dirs() for p in d.glob("*.yaml")})


def _packaged_config(alias: str) -> Path:
    """
    Locate a packaged YAML by alias, e.g. 'bethel_ak' for tlr/configs/bethel_ak.yaml.

    Raises:
        ModelValidationError: If no packaged config has that name.
    """
    for directory in _packaged_config_dirs():
        candidate = directory / f"{alias}.yaml"
        if candidate.is_file():
            return candidate
    raise ModelValidationError(
        "unknown packaged config", key="preset", expected=available_presets(), got=alias
    )


def _resolve(source: ConfigSource) -> Path:
    """'tlr:<alias>' names a packaged config; anything else is a filesystem path."""
    raw = str(source).strip()
    prefix = f"{PACKAGE_NAME}:"
    if raw.startswith(prefix):
        alias = raw[len(prefix) :].strip()
        logger.debug(f"Config alias {alias!r} resolved")
        return _packaged_config(alias)
    return Path(raw)


def _read_yaml(source: ConfigSource, role: Optional[str] = None) -> DictConfig | ListConfig:
    """
    Read one YAML layer with OmegaConf; interpolations stay unresolved until validation.

    Raises:
        ModelValidationError: If the file is missing or not valid YAML.
    """
    path = _resolve(source)
    role = role or path.name
    if not path.is_file():
        raise ModelValidationError(f"{role} config file not found", key="config", got=str(path))
    logger.info(f"Loading {role} config from: {path}")
    try:
        return OmegaConf.load(path)
    except (OmegaConfBaseException, yaml.YAMLError, ValueError) as e:
        raise ModelValidationError(
            f"{role} config is not valid YAML", key="config", details={"error": str(e)}
        ) from e


T = TypeVar("T", bound=BaseModel)


def load_config(
    presets: Optional[ConfigSource | Sequence[ConfigSource]] = None,
    config_path: Optional[ConfigSource] = None,
    overrides: Optional[List[str]] = None,
    schema: Type[T] = AppConfig,  # type: ignore
) -> T:
    """
    Build the validated run configuration from layered sources.

    Layers, later wins: the default config (packaged unless config_path is
    given), each preset in order (a region as 'tlr:<region>' or a scenario file
    by path), then dotted overrides such as 'simulation.dt=0.02'. A .env file
    is loaded first so '${oc.env:...}' interpolations can see it.

    Raises:
        ModelValidationError: If any config file is missing, not YAML, or an
            interpolation cannot be resolved.
        pydantic.ValidationError: If the merged config does not match the schema.
    """
    load_dotenv()

    layers = [_read_yaml(config_path or f"{PACKAGE_NAME}:default", role="default")]
    if presets:
        sources = [presets] if isinstance(presets, (str, Path)) else list(presets)
        for source in sources:
            logger.info(f"Merging {source} config")
            layers.append(_read_yaml(source))
    config = OmegaConf.merge(*layers)

    if overrides:
        logger.info(f"Applying command-line overrides: {overrides}")
        config = apply_overrides(config, overrides)

    try:
        resolved = OmegaConf.to_container(config, resolve=True)
    except OmegaConfBaseException as e:
        raise ModelValidationError(
            "config interpolation failed", key="config", details={"error": str(e)}
        ) from e
    return cast(T, schema.model_validate(resolved))
