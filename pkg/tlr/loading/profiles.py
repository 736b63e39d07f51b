import numpy as np
import numpy.typing as npt

from tlr.loading.domain import AreaProfile, CurrentDemand


def current_demand(
    d: CurrentDemand, t: float | npt.ArrayLike
) -> float | npt.NDArray[np.float64]:
    """I(t) = -I_b - I_a sin(4 pi t). Sign is kept; consumers take the magnitude."""
    t_arr = np.asarray(t, dtype=float)
    current = -d.base - d.amplitude * np.sin(4.0 * np.pi * t_arr)
    if current.ndim == 0:
        return float(current)
    return current


def area_at(
    profile: AreaProfile, x: float | npt.ArrayLike
) -> float | npt.NDArray[np.float64]:
    x_arr = np.asarray(x, dtype=float)
    sigma = profile.spread_depth_ratio
    notch = np.exp(-((x_arr - profile.span / 2.0) ** 2) / (2.0 * sigma**2)) / (
        sigma * np.sqrt(2.0 * np.pi)
    )
    area = profile.nominal_area * (1.0 - notch)
    if area.ndim == 0:
        return float(area)
    return area
