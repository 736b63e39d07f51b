import logging

import numpy as np
import numpy.typing as npt
import pandas as pd

from tlr.constants import MONTHS_PER_YEAR
from tlr.loading.domain import FourierLoading, MonthlySeries

logger = logging.getLogger(__name__)


def dft_coefficients(samples: MonthlySeries, period: float = 1.0) -> FourierLoading:
    """Real Fourier coefficients of one year of monthly samples.

    Uses the one-sided DFT X_k = sum_n x_n exp(-2 pi i k n / N): the mean is X_0/N,
    harmonics 1..N/2-1 carry 2 Re(X_k)/N and -2 Im(X_k)/N, and the Nyquist cosine
    is half-weighted so the series passes through every sample.
    """
    x = np.asarray(samples.values, dtype=float)
    n = x.size
    spectrum = np.fft.rfft(x) / n
    spectrum[1:-1] *= 2.0
    if n % 2 != 0:
        spectrum[-1] *= 2.0

    cos_coeffs = spectrum[1:].real
    sin_coeffs = -spectrum[1:].imag
    if n % 2 == 0:
        # sin(pi * n) vanishes at every sample instant
        sin_coeffs[-1] = 0.0

    loading = FourierLoading(
        mean=float(spectrum[0].real),
        cos_coeffs=tuple(float(c) for c in cos_coeffs),
        sin_coeffs=tuple(float(s) for s in sin_coeffs),
        period=period,
    )
    logger.debug(
        f"DFT of {samples.quantity_kind.value} series: mean={loading.mean:.4f}, "
        f"{len(loading.cos_coeffs)} harmonics"
    )
    return loading


def evaluate_loading(
    loading: FourierLoading, t: float | npt.ArrayLike
) -> float | npt.NDArray[np.float64]:
    """f(t) = A0 + sum_n [A_n cos(2 pi n t / T) + B_n sin(2 pi n t / T)]."""
    t_arr = np.asarray(t, dtype=float)
    result = np.full(t_arr.shape, loading.mean, dtype=float)
    phase = 2.0 * np.pi * t_arr / loading.period
    for n, (a_n, b_n) in enumerate(zip(loading.cos_coeffs, loading.sin_coeffs), start=1):
        result = result + a_n * np.cos(n * phase) + b_n * np.sin(n * phase)
    if result.ndim == 0:
        return float(result)
    return result


def sample_instants(period: float = 1.0) -> npt.NDArray[np.float64]:
    """Times at which the monthly samples sit, January at t = 0."""
    return np.arange(MONTHS_PER_YEAR, dtype=float) * period / MONTHS_PER_YEAR


def synthesize_curves(
    samples: MonthlySeries, samples_per_year: int = 100, period: float = 1.0
) -> pd.DataFrame:
    """Discrete samples next to the continuous reconstruction over one period."""
    loading = dft_coefficients(samples, period=period)
    t_dense = np.linspace(0.0, period, samples_per_year + 1)
    t_samples = sample_instants(period)
    t_all = np.union1d(t_dense, t_samples)

    sample_column = np.full(t_all.shape, np.nan)
    for t_n, value in zip(t_samples, samples.values):
        sample_column[np.searchsorted(t_all, t_n)] = value

    return pd.DataFrame(
        {
            "t": t_all,
            "sample": sample_column,
            "reconstruction": evaluate_loading(loading, t_all),
        }
    )
