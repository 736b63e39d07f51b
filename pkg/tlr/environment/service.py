from tlr.constants import FREEZING_POINT, FT_TO_M
from tlr.environment.domain import (
    AmbientState,
    ExtremeWind,
    IceLayer,
    ScenarioConfig,
    Wildfire,
)
from tlr.loading.fourier import evaluate_loading


def ambient_at(cfg: ScenarioConfig, t: float) -> AmbientState:
    """Weather, fire and ice conditions at time t (years)."""
    wind_fts = cfg.wind_base_scale * float(evaluate_loading(cfg.wind_loading, t))
    wind_speed = max(0.0, wind_fts * FT_TO_M)
    ambient_temp = cfg.temp_base_scale * float(evaluate_loading(cfg.temp_loading, t))

    extreme_wind_active = False
    fire: Wildfire | None = None
    ice: IceLayer | None = None
    for window in cfg.events:
        elapsed = window.elapsed(t)
        if elapsed is None:
            continue
        payload = window.payload
        if isinstance(payload, ExtremeWind):
            extreme_wind_active = True
            wind_speed = max(wind_speed, payload.w_max)
        elif isinstance(payload, Wildfire):
            fire = payload.exposure_at(elapsed)
        elif isinstance(payload, IceLayer):
            if payload.ice_temp is None:
                payload = payload.model_copy(
                    update={"ice_temp": min(ambient_temp, FREEZING_POINT)}
                )
            # Overlapping ice windows keep the thickest layer
            if ice is None or payload.thickness > ice.thickness:
                ice = payload

    return AmbientState(
        wind_speed=wind_speed,
        ambient_temp=ambient_temp,
        extreme_wind_active=extreme_wind_active,
        fire=fire,
        ice=ice,
    )
