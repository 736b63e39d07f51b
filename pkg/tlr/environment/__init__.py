from .domain import (
    AmbientState,
    EventWindow,
    ExtremeWind,
    IceLayer,
    ScenarioConfig,
    ScenarioKind,
    Wildfire,
)
from .presets import Region, Severity, scenario_presets, severity_spread_depth_ratio
from .service import ambient_at

__all__ = [
    "AmbientState",
    "EventWindow",
    "ExtremeWind",
    "IceLayer",
    "Region",
    "ScenarioConfig",
    "ScenarioKind",
    "Severity",
    "Wildfire",
    "ambient_at",
    "scenario_presets",
    "severity_spread_depth_ratio",
]
