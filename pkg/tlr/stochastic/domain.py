from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Literal

import numpy as np
import numpy.typing as npt
from pydantic import BaseModel, ConfigDict, model_validator

from tlr.simulation.parameters import ParameterName

FloatArray = npt.NDArray[np.float64]

MAX_DIMENSIONS = 6


class RandomParameter(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    name: ParameterName
    lower: float
    upper: float
    distribution: Literal["uniform"] = "uniform"

    @model_validator(mode="after")
    def _ordered_bounds(self) -> RandomParameter:
        if not self.lower < self.upper:
            raise ValueError(
                f"{self.name.value}: lower bound {self.lower} must be below upper bound {self.upper}"
            )
        return self

    @classmethod
    def around(cls, name: ParameterName | str, baseline: float, spread: float = 0.1) -> RandomParameter:
        """Uniform on baseline * (1 -/+ spread)."""
        lo, hi = sorted((baseline * (1.0 - spread), baseline * (1.0 + spread)))
        return cls(name=ParameterName(name), lower=lo, upper=hi)

    def from_unit(self, xi: FloatArray | float) -> FloatArray | float:
        """Affine map from [-1, 1] onto [lower, upper]."""
        return self.lower + (np.asarray(xi) + 1.0) * (self.upper - self.lower) / 2.0


class RandomSpace(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    parameters: tuple[RandomParameter, ...]

    @model_validator(mode="after")
    def _bounded_unique(self) -> RandomSpace:
        if not 1 <= len(self.parameters) <= MAX_DIMENSIONS:
            raise ValueError(
                f"random space needs 1..{MAX_DIMENSIONS} parameters, got {len(self.parameters)}"
            )
        names = [p.name for p in self.parameters]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate parameter names: {[n.value for n in names]}")
        return self

    @property
    def names(self) -> list[str]:
        return [p.name.value for p in self.parameters]

    @property
    def dims(self) -> int:
        return len(self.parameters)


@dataclass(frozen=True)
class CollocationGrid:
    """Tensor-product Gauss-Legendre grid over a random space.

    Nodes are enumerated in row-major order: the last parameter varies fastest.
    """

    space: RandomSpace
    points_per_dim: int
    unit_points: FloatArray
    unit_weights: FloatArray
    # (n^k, k) parameter values and (n^k,) probability weights summing to 1
    nodes: FloatArray
    weights: FloatArray

    @property
    def dims(self) -> int:
        return self.space.dims

    @property
    def size(self) -> int:
        return int(self.weights.size)

    def realization(self, index: int) -> dict[str, float]:
        return {name: float(v) for name, v in zip(self.space.names, self.nodes[index])}


class QoIKind(str, Enum):
    THETA_MAX_SERIES = "theta_max_series"
    PHI_MAX_SERIES = "phi_max_series"
    H_B_SERIES = "h_B_series"


@dataclass(frozen=True)
class QoIEnsemble:
    qoi_kind: QoIKind
    # (realizations, times)
    values: FloatArray
    times: FloatArray


@dataclass(frozen=True)
class MomentSeries:
    times: FloatArray
    expectation: FloatArray
    std: FloatArray
