import math
from enum import Enum
from typing import Annotated, Literal, Optional, Union

from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    NonNegativeFloat,
    PositiveFloat,
    model_validator,
)

from tlr.loading.domain import CurrentDemand, FourierLoading


class ScenarioKind(str, Enum):
    HIGH_WIND = "high_wind"
    WILDFIRE = "wildfire"
    ICING = "icing"


class ExtremeWind(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    kind: Literal["extreme_wind"] = "extreme_wind"
    # m/s
    w_max: PositiveFloat


class Wildfire(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    kind: Literal["wildfire"] = "wildfire"
    flame_temp: PositiveFloat = 1473.15
    view_factor: Annotated[float, Field(ge=0.0, le=1.0)] = 0.0125
    emissivity: Annotated[float, Field(gt=0.0, le=1.0)] = 0.9
    transmissivity: Annotated[float, Field(gt=0.0, le=1.0)] = 0.9
    # Years for the front to close in; the view factor grows linearly from 0 over this time
    approach_time: NonNegativeFloat = 0.0

    def exposure_at(self, elapsed: float) -> "Wildfire":
        """The fire as seen `elapsed` years after its window opened."""
        if self.approach_time == 0.0 or elapsed >= self.approach_time:
            return self
        return self.model_copy(
            update={"view_factor": self.view_factor * elapsed / self.approach_time}
        )


class IceLayer(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    kind: Literal["ice"] = "ice"
    # m
    thickness: NonNegativeFloat
    # None resolves to min(ambient, freezing point) when the window is queried
    ice_temp: Optional[PositiveFloat] = None


EventPayload = Annotated[
    Union[ExtremeWind, Wildfire, IceLayer], Field(discriminator="kind")
]


class EventWindow(BaseModel):
    """A time window, optionally recurring every `period` years, carrying one event."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    start: NonNegativeFloat
    duration: PositiveFloat
    period: Optional[PositiveFloat] = None
    payload: EventPayload

    @model_validator(mode="after")
    def _fits_in_period(self) -> "EventWindow":
        if self.period is not None and self.duration > self.period:
            raise ValueError(
                f"duration {self.duration} exceeds recurrence period {self.period}"
            )
        return self

    def elapsed(self, t: float) -> Optional[float]:
        """Years since the current occurrence opened; None outside the window."""
        if t < self.start:
            return None
        offset = t - self.start
        if self.period is not None:
            offset = math.fmod(offset, self.period)
        return offset if offset < self.duration else None


class ScenarioConfig(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    kind: ScenarioKind
    wind_loading: FourierLoading
    temp_loading: FourierLoading
    current: CurrentDemand = Field(default_factory=CurrentDemand)
    events: tuple[EventWindow, ...] = ()
    wind_base_scale: PositiveFloat = 1.0
    temp_base_scale: PositiveFloat = 1.0

    @model_validator(mode="after")
    def _no_fire_under_ice(self) -> "ScenarioConfig":
        kinds = {window.payload.kind for window in self.events}
        if {"wildfire", "ice"} <= kinds:
            raise ValueError("wildfire and ice events cannot coexist in one scenario")
        return self


class AmbientState(BaseModel):
    model_config = ConfigDict(frozen=True)

    # m/s
    wind_speed: NonNegativeFloat
    # K
    ambient_temp: PositiveFloat
    extreme_wind_active: bool = False
    fire: Optional[Wildfire] = None
    ice: Optional[IceLayer] = None
