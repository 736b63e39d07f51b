from dataclasses import dataclass

import numpy as np

from tlr.exceptions import ModelValidationError
from tlr.stochastic.domain import FloatArray, RandomSpace


@dataclass(frozen=True)
class MonteCarloEstimate:
    expectation: FloatArray
    std: FloatArray
    p_f: FloatArray


def sample_space(space: RandomSpace, n_samples: int, seed: int) -> FloatArray:
    """(n_samples, dims) i.i.d. uniform draws over the parameter box."""
    if n_samples < 1:
        raise ModelValidationError("need at least one sample", key="samples", got=n_samples)
    rng = np.random.default_rng(seed)
    lower = np.array([p.lower for p in space.parameters])
    upper = np.array([p.upper for p in space.parameters])
    return rng.uniform(lower, upper, size=(n_samples, space.dims))


def monte_carlo_statistics(values: FloatArray, indicators: FloatArray) -> MonteCarloEstimate:
    """Sample mean, unbiased std and failing fraction per time index."""
    n = values.shape[0]
    expectation = values.mean(axis=0)
    std = values.std(axis=0, ddof=1) if n > 1 else np.zeros_like(expectation)
    return MonteCarloEstimate(
        expectation=expectation, std=std, p_f=indicators.mean(axis=0)
    )
