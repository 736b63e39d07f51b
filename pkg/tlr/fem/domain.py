from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Optional

import numpy as np
import numpy.typing as npt

from tlr.constants import STEFAN_BOLTZMANN
from tlr.environment.domain import IceLayer, Wildfire
from tlr.exceptions import ModelValidationError

FloatArray = npt.NDArray[np.float64]


@dataclass(frozen=True)
class Mesh:
    """Uniform 1-D mesh of linear elements; node i sits at x = i * h."""

    length: float = 200.0
    n_elements: int = 1000

    def __post_init__(self) -> None:
        if self.n_elements < 2:
            raise ModelValidationError(
                "mesh needs at least two elements", key="n_elements", got=self.n_elements
            )
        if not self.length > 0:
            raise ModelValidationError("mesh length must be positive", key="length", got=self.length)

    @property
    def n_nodes(self) -> int:
        return self.n_elements + 1

    @property
    def h(self) -> float:
        return self.length / self.n_elements

    @property
    def node_coords(self) -> FloatArray:
        return np.linspace(0.0, self.length, self.n_nodes)

    @property
    def midspan_node(self) -> int:
        return int(np.argmin(np.abs(self.node_coords - self.length / 2.0)))


@dataclass
class FieldState:
    """Nodal fields of one simulation at one time step."""

    u: FloatArray
    # Nodal mechanical strain recovered from the last displacement solve
    strain: FloatArray
    phi: FloatArray
    fatigue: FloatArray
    history: FloatArray
    theta: FloatArray
    voltage: FloatArray

    @classmethod
    def initial(cls, mesh: Mesh, theta0: float) -> FieldState:
        zeros = np.zeros(mesh.n_nodes)
        return cls(
            u=zeros.copy(),
            strain=zeros.copy(),
            phi=zeros.copy(),
            fatigue=zeros.copy(),
            history=zeros.copy(),
            theta=np.full(mesh.n_nodes, theta0),
            voltage=zeros.copy(),
        )

    def copy(self) -> FieldState:
        return replace(
            self,
            u=self.u.copy(),
            strain=self.strain.copy(),
            phi=self.phi.copy(),
            fatigue=self.fatigue.copy(),
            history=self.history.copy(),
            theta=self.theta.copy(),
            voltage=self.voltage.copy(),
        )


class HeatExchangeMode(str, Enum):
    CONVECTIVE = "convective"
    CONVECTIVE_PLUS_FIRE = "convective_plus_fire"
    ICE_COVERED = "ice_covered"


@dataclass(frozen=True)
class HeatExchangeSpec:
    mode: HeatExchangeMode
    # W/(m^2 K)
    h: float
    ambient_temp: float
    fire: Optional[Wildfire] = None
    ice: Optional[IceLayer] = None
    stefan_boltzmann: float = field(default=STEFAN_BOLTZMANN)

    def __post_init__(self) -> None:
        if self.h < 0:
            raise ModelValidationError("heat transfer coefficient must be >= 0", key="h", got=self.h)
        if self.mode is HeatExchangeMode.CONVECTIVE_PLUS_FIRE and self.fire is None:
            raise ModelValidationError("fire mode needs a wildfire payload", key="fire")
        if self.mode is HeatExchangeMode.ICE_COVERED:
            if self.ice is None or self.ice.thickness <= 0:
                raise ModelValidationError(
                    "ice mode needs an outer radius beyond the conductor",
                    key="ice.thickness",
                    expected="> 0",
                    got=None if self.ice is None else self.ice.thickness,
                )
            if self.ice.ice_temp is None:
                raise ModelValidationError("ice temperature unresolved", key="ice.ice_temp")
