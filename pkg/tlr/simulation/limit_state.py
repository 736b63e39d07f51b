from typing import Optional

import numpy as np
import numpy.typing as npt

from tlr.simulation.domain import SimulationConfig, SimulationResult


def limit_state(value_max: float, limit: float) -> float:
    """g = limit - max; negative means the limit is exceeded."""
    return limit - value_max


def failure_indicator(
    result: SimulationResult, cfg: Optional[SimulationConfig] = None
) -> npt.NDArray[np.int8]:
    """Bernoulli indicator h_B padded to the full horizon: 0 before failure, 1 from the failing step on."""
    n_steps = cfg.n_steps if cfg is not None else result.n_steps
    indicator = np.zeros(n_steps, dtype=np.int8)
    if result.failure is not None:
        indicator[result.failure.step :] = 1
    return indicator
