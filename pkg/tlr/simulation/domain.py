from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

import numpy as np
from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    PositiveFloat,
    PositiveInt,
    model_validator,
)

from tlr.domain import MaterialProperties
from tlr.environment.domain import ScenarioConfig
from tlr.fem.domain import FieldState, FloatArray
from tlr.loading.domain import AreaProfile
from tlr.mechanics.domain import SagParameters, WindLoadParams


class SagTemperature(str, Enum):
    """Which temperature drives thermal elongation in the sag chain."""

    CONDUCTOR = "conductor"
    AMBIENT = "ambient"


class FailureMode(str, Enum):
    TEMPERATURE = "temperature"
    DAMAGE = "damage"


class SimulationConfig(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    scenario: ScenarioConfig
    material: MaterialProperties = Field(default_factory=MaterialProperties)
    sag: SagParameters
    wind: WindLoadParams = Field(default_factory=WindLoadParams)
    area: AreaProfile
    # years
    dt: PositiveFloat = 0.01
    horizon: PositiveFloat = 50.0
    theta_limit: PositiveFloat = 373.0
    phi_limit: float = Field(default=0.8, gt=0.0, le=1.0)
    n_elements: int = Field(default=1000, ge=2)
    snapshot_interval: Optional[PositiveFloat] = 5.0
    sag_temperature: SagTemperature = SagTemperature.CONDUCTOR
    fixed_point: bool = False
    fixed_point_max_iter: PositiveInt = 5
    fixed_point_tol: PositiveFloat = 1e-6

    @model_validator(mode="after")
    def _consistent_time_axis(self) -> SimulationConfig:
        steps = self.horizon / self.dt
        if abs(steps - round(steps)) > 1e-9 * max(1.0, steps):
            raise ValueError(
                f"horizon {self.horizon} is not an integer multiple of dt {self.dt}"
            )
        for window in self.scenario.events:
            if window.start > self.horizon:
                raise ValueError(
                    f"event window starting at {window.start} lies beyond the horizon {self.horizon}"
                )
        return self

    @property
    def n_steps(self) -> int:
        return int(round(self.horizon / self.dt))

    @property
    def times(self) -> FloatArray:
        return np.arange(self.n_steps) * self.dt


@dataclass(frozen=True)
class FailureRecord:
    time: float
    step: int
    mode: FailureMode


@dataclass(frozen=True)
class ErrorRecord:
    time: float
    step: int
    error_type: str
    message: str


@dataclass(frozen=True)
class FieldSnapshot:
    time: float
    state: FieldState


@dataclass
class SimulationResult:
    """Per-step maxima over the mesh, truncated at the failing step (inclusive)."""

    times: FloatArray
    theta_max: FloatArray
    phi_max: FloatArray
    v_drop: FloatArray
    tension: FloatArray
    phi_midspan: FloatArray
    n_steps: int
    failure: Optional[FailureRecord] = None
    error: Optional[ErrorRecord] = None
    snapshots: list[FieldSnapshot] = field(default_factory=list)

    @property
    def failed(self) -> bool:
        return self.failure is not None

    @property
    def failure_time(self) -> Optional[float]:
        return None if self.failure is None else self.failure.time
