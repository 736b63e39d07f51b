import math
from dataclasses import dataclass

from pydantic import BaseModel, ConfigDict, Field, PositiveFloat, model_validator


class SagParameters(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    # m
    span: PositiveFloat = 200.0
    # N
    pretension: PositiveFloat = 30e3
    # N/m
    unit_weight: PositiveFloat
    # 1/K
    thermal_expansion: PositiveFloat = 2.3e-5
    reference_temp: PositiveFloat = 298.15
    ultimate_strength: PositiveFloat = 150e3

    @model_validator(mode="after")
    def _pretension_below_capacity(self) -> "SagParameters":
        if self.pretension >= self.ultimate_strength:
            raise ValueError(
                f"pretension {self.pretension} N must stay below the ultimate "
                f"strength {self.ultimate_strength} N"
            )
        return self


class WindLoadParams(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    air_density: PositiveFloat = 1.225
    attack_angle: float = math.pi / 2.0
    span_factor: float = Field(default=0.6, gt=0.0, le=1.0)
    # m
    diameter: PositiveFloat = 0.04
    kinematic_viscosity: PositiveFloat = 15e-6


@dataclass(frozen=True)
class SagState:
    """Every intermediate of the sag chain for one load case."""

    initial_sag: float
    initial_length: float
    length: float
    sag: float
    total_weight: float
    tension: float
