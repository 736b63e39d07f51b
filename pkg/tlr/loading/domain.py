import math
from enum import Enum

from pydantic import (
    BaseModel,
    ConfigDict,
    NonNegativeFloat,
    PositiveFloat,
    field_validator,
    model_validator,
)

from tlr.constants import MONTHS_PER_YEAR

# Below this ratio the Gaussian notch removes the whole cross-section
MIN_SPREAD_DEPTH_RATIO = 1.0 / math.sqrt(2.0 * math.pi)


class QuantityKind(str, Enum):
    WIND = "wind"
    TEMPERATURE = "temperature"


class MonthlySeries(BaseModel):
    """Twelve monthly averages; wind in ft/s as published, temperature in K."""

    model_config = ConfigDict(frozen=True)

    values: tuple[float, ...]
    quantity_kind: QuantityKind

    @field_validator("values", mode="after")
    def _twelve_finite_positive(cls, values: tuple[float, ...]) -> tuple[float, ...]:
        if len(values) != MONTHS_PER_YEAR:
            raise ValueError(
                f"expected exactly {MONTHS_PER_YEAR} monthly samples, got {len(values)}"
            )
        for month, value in enumerate(values, start=1):
            if not math.isfinite(value):
                raise ValueError(f"month {month} is not finite: {value}")
            if value <= 0:
                raise ValueError(f"month {month} must be positive, got {value}")
        return values


class FourierLoading(BaseModel):
    model_config = ConfigDict(frozen=True)

    mean: float
    cos_coeffs: tuple[float, ...]
    sin_coeffs: tuple[float, ...]
    period: PositiveFloat = 1.0

    @model_validator(mode="after")
    def _matching_harmonics(self) -> "FourierLoading":
        if len(self.cos_coeffs) != len(self.sin_coeffs):
            raise ValueError(
                f"cos/sin harmonic counts differ: {len(self.cos_coeffs)} != {len(self.sin_coeffs)}"
            )
        return self

    @classmethod
    def constant(cls, value: float, period: float = 1.0) -> "FourierLoading":
        return cls(mean=value, cos_coeffs=(), sin_coeffs=(), period=period)


class CurrentDemand(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    base: NonNegativeFloat = 1500.0
    amplitude: NonNegativeFloat = 100.0


class AreaProfile(BaseModel):
    """Cross-section with a Gaussian notch at midspan standing in for initial damage."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    nominal_area: PositiveFloat
    spread_depth_ratio: float
    span: PositiveFloat = 200.0

    @field_validator("spread_depth_ratio", mode="after")
    def _area_stays_positive(cls, value: float) -> float:
        if not value > MIN_SPREAD_DEPTH_RATIO:
            raise ValueError(
                f"spread_depth_ratio must exceed 1/sqrt(2*pi) = {MIN_SPREAD_DEPTH_RATIO:.6f}, "
                f"got {value}"
            )
        return value
