import logging
from dataclasses import dataclass
from typing import Optional, Sequence

from tlr.simulation.domain import FailureMode, SimulationConfig
from tlr.simulation.parameters import apply_parameters, parse_parameter_name
from tlr.simulation.runner import run_deterministic

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SweepRow:
    value: float
    failure_time: Optional[float]
    mode: Optional[FailureMode]


def sweep_failure_times(
    cfg: SimulationConfig, parameter: str, values: Sequence[float]
) -> list[SweepRow]:
    """Deterministic one-parameter study: failure time and mode per value."""
    name = parse_parameter_name(parameter).value
    rows: list[SweepRow] = []
    for value in values:
        result = run_deterministic(apply_parameters(cfg, {name: value}))
        mode = result.failure.mode if result.failure is not None else None
        rows.append(SweepRow(value=float(value), failure_time=result.failure_time, mode=mode))
        logger.info(
            f"{name}={value:g}: "
            + (f"failed by {mode.value} at {result.failure_time:.2f} yr" if mode else "survived")
        )
    return rows
