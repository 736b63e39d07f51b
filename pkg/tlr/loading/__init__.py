from .data import load_monthly_series
from .domain import AreaProfile, CurrentDemand, FourierLoading, MonthlySeries, QuantityKind
from .fourier import dft_coefficients, evaluate_loading, synthesize_curves
from .profiles import area_at, current_demand

__all__ = [
    "AreaProfile",
    "CurrentDemand",
    "FourierLoading",
    "MonthlySeries",
    "QuantityKind",
    "area_at",
    "current_demand",
    "dft_coefficients",
    "evaluate_loading",
    "load_monthly_series",
    "synthesize_curves",
]
