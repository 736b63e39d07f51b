"""Plot-ready CSV outputs. Formatting is fixed so reruns are byte-identical."""

import logging
from pathlib import Path
from typing import Mapping, Sequence

import numpy as np
import pandas as pd

from tlr.fem.domain import FloatArray
from tlr.loading.domain import FourierLoading
from tlr.simulation.domain import SimulationResult
from tlr.simulation.sweep import SweepRow
from tlr.stochastic.collocation import FieldMoments
from tlr.stochastic.domain import MomentSeries
from tlr.stochastic.montecarlo import MonteCarloEstimate
from tlr.stochastic.service import ConvergenceRow

logger = logging.getLogger(__name__)

FLOAT_FORMAT = "%.10g"


def _write(frame: pd.DataFrame, path: Path) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    frame.to_csv(path, index=False, float_format=FLOAT_FORMAT, lineterminator="\n")
    logger.debug(f"Wrote {len(frame)} rows to {path}")
    return path


def write_series(path: Path, result: SimulationResult) -> Path:
    h_b = np.zeros(result.times.size, dtype=int)
    if result.failure is not None:
        h_b[result.failure.step :] = 1
    frame = pd.DataFrame(
        {
            "t": result.times,
            "theta_max": result.theta_max,
            "phi_max": result.phi_max,
            "v_drop": result.v_drop,
            "tension": result.tension,
            "h_B": h_b,
        }
    )
    return _write(frame, path)


def write_snapshots(directory: Path, result: SimulationResult, x: FloatArray) -> list[Path]:
    paths = []
    for snapshot in result.snapshots:
        state = snapshot.state
        frame = pd.DataFrame(
            {
                "x": x,
                "u": state.u,
                "phi": state.phi,
                "F": state.fatigue,
                "H": state.history,
                "theta": state.theta,
                "V": state.voltage,
            }
        )
        paths.append(_write(frame, directory / f"t_{snapshot.time:07.3f}.csv"))
    return paths


def write_moments(path: Path, moments: Mapping[str, MomentSeries]) -> Path:
    columns: dict[str, FloatArray] = {}
    for qoi, series in moments.items():
        columns.setdefault("t", series.times)
        columns[f"E_{qoi}"] = series.expectation
        columns[f"std_{qoi}"] = series.std
    return _write(pd.DataFrame(columns), path)


def write_sobol(path: Path, times: FloatArray, indices: Mapping[str, FloatArray]) -> Path:
    frame = pd.DataFrame({"t": times, **{f"S_{name}": s for name, s in indices.items()}})
    return _write(frame, path)


def write_pfail(path: Path, times: FloatArray, p_f: FloatArray) -> Path:
    return _write(pd.DataFrame({"t": times, "p_f": p_f}), path)


def write_field_moments(path: Path, fields: Sequence[FieldMoments]) -> Path:
    frames = [
        pd.DataFrame(
            {
                "t": np.repeat(fm.times, fm.x.size),
                "x": np.tile(fm.x, fm.times.size),
                "field": fm.field,
                "E": fm.expectation.ravel(),
                "std": fm.std.ravel(),
            }
        )
        for fm in fields
    ]
    return _write(pd.concat(frames, ignore_index=True), path)


def write_monte_carlo(
    directory: Path, times: FloatArray, estimate: MonteCarloEstimate, qoi: str
) -> list[Path]:
    moments = pd.DataFrame(
        {"t": times, f"E_{qoi}": estimate.expectation, f"std_{qoi}": estimate.std}
    )
    pfail_times = np.arange(estimate.p_f.size) * (times[1] - times[0] if times.size > 1 else 0.0)
    return [
        _write(moments, directory / "mc_moments.csv"),
        write_pfail(directory / "mc_pfail.csv", pfail_times, estimate.p_f),
    ]


def write_convergence(path: Path, rows: Sequence[ConvergenceRow]) -> Path:
    frame = pd.DataFrame(
        {
            "method": [r.method for r in rows],
            "n": [r.size for r in rows],
            "estimate": [r.estimate for r in rows],
            "error": [r.error for r in rows],
        }
    )
    return _write(frame, path)


def write_sweep(path: Path, parameter: str, rows: Sequence[SweepRow]) -> Path:
    frame = pd.DataFrame(
        {
            parameter: [r.value for r in rows],
            "failure_time": [r.failure_time for r in rows],
            "mode": [r.mode.value if r.mode else "" for r in rows],
        }
    )
    return _write(frame, path)


def write_loading_curves(path: Path, curves: Mapping[str, pd.DataFrame]) -> Path:
    """One table with a quantity column, e.g. wind and temperature of a region."""
    columns = ["quantity", "t", "sample", "reconstruction"]
    frame = pd.concat(
        [df.assign(quantity=name)[columns] for name, df in curves.items()],
        ignore_index=True,
    )
    return _write(frame, path)


def write_coefficients(path: Path, loadings: Mapping[str, FourierLoading]) -> Path:
    """Harmonic table per quantity; harmonic 0 carries the mean in the cos column."""
    frames = [
        pd.DataFrame(
            {
                "quantity": name,
                "n": np.arange(len(loading.cos_coeffs) + 1),
                "A_n": [loading.mean, *loading.cos_coeffs],
                "B_n": [0.0, *loading.sin_coeffs],
            }
        )
        for name, loading in loadings.items()
    ]
    return _write(pd.concat(frames, ignore_index=True), path)
