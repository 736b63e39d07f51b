"""Post-processing of simulator outputs evaluated on a collocation grid."""

import logging
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from tlr.environment.domain import ScenarioKind
from tlr.exceptions import ModelValidationError, SolverError
from tlr.simulation.domain import SimulationResult
from tlr.simulation.limit_state import failure_indicator
from tlr.stochastic.domain import (
    CollocationGrid,
    FloatArray,
    MomentSeries,
    QoIEnsemble,
    QoIKind,
)

logger = logging.getLogger(__name__)

UNDEFINED_VARIANCE = 1e-30


def default_qoi(kind: ScenarioKind) -> QoIKind:
    """Failure driver of a scenario: temperature for wildfire, damage otherwise."""
    if kind is ScenarioKind.WILDFIRE:
        return QoIKind.THETA_MAX_SERIES
    return QoIKind.PHI_MAX_SERIES


def build_ensemble(results: Sequence[SimulationResult], qoi: QoIKind) -> QoIEnsemble:
    """Stack per-realization series on a common time axis.

    Temperature and damage series are cut at the earliest failure in the ensemble;
    the failure indicator is padded to the full horizon.
    """
    broken = [i for i, r in enumerate(results) if r.error is not None]
    if broken:
        raise SolverError(
            "simulator failed at some collocation nodes",
            key="ensemble",
            details={"nodes": broken[:20], "count": len(broken)},
        )

    if qoi is QoIKind.H_B_SERIES:
        values = np.stack([failure_indicator(r).astype(float) for r in results])
        n_steps = results[0].n_steps
        times = np.arange(n_steps) * _time_step(results)
        return QoIEnsemble(qoi_kind=qoi, values=values, times=times)

    length = min(r.times.size for r in results)
    attr = "theta_max" if qoi is QoIKind.THETA_MAX_SERIES else "phi_max"
    values = np.stack([getattr(r, attr)[:length] for r in results])
    longest = max(results, key=lambda r: r.times.size)
    return QoIEnsemble(qoi_kind=qoi, values=values, times=longest.times[:length].copy())


def _time_step(results: Sequence[SimulationResult]) -> float:
    for r in results:
        if r.times.size >= 2:
            return float(r.times[1] - r.times[0])
    raise ModelValidationError("cannot infer the time step from the ensemble", key="ensemble")


def _check_complete(values: FloatArray, grid: CollocationGrid) -> None:
    if values.shape[0] != grid.size:
        raise ModelValidationError(
            "ensemble does not cover the grid",
            key="ensemble",
            expected=f"{grid.size} realizations",
            got=values.shape[0],
        )
    missing = np.flatnonzero(~np.all(np.isfinite(values), axis=1))
    if missing.size:
        raise ModelValidationError(
            "ensemble is missing values at some grid nodes",
            key="ensemble",
            details={"missing_nodes": missing.tolist()[:20], "count": int(missing.size)},
        )


def _weighted_moments(values: FloatArray, weights: FloatArray) -> tuple[FloatArray, FloatArray]:
    expectation = weights @ values
    variance = weights @ (values - expectation) ** 2
    return expectation, np.sqrt(np.maximum(variance, 0.0))


def pcm_moments(ensemble: QoIEnsemble, grid: CollocationGrid) -> MomentSeries:
    _check_complete(ensemble.values, grid)
    expectation, std = _weighted_moments(ensemble.values, grid.weights)
    return MomentSeries(times=ensemble.times, expectation=expectation, std=std)


def sobol_first_order(ensemble: QoIEnsemble, grid: CollocationGrid) -> dict[str, FloatArray]:
    """First-order Sobol index series per parameter, from the existing grid values.

    Time indices whose total variance vanishes are reported as NaN.
    """
    _check_complete(ensemble.values, grid)
    k, n = grid.space.dims, grid.points_per_dim
    if k < 2 or n < 2:
        raise ModelValidationError(
            "Sobol indices need at least two dimensions with two points each",
            key="grid",
            got=f"{k} dims x {n} points",
        )

    probability = grid.unit_weights / 2.0
    n_times = ensemble.values.shape[1]
    tensor = ensemble.values.reshape((n,) * k + (n_times,))
    _, total_std = _weighted_moments(ensemble.values, grid.weights)
    total_variance = total_std**2
    defined = total_variance >= UNDEFINED_VARIANCE

    indices: dict[str, FloatArray] = {}
    for j, name in enumerate(grid.space.names):
        conditional = np.moveaxis(tensor, j, 0)
        for _ in range(k - 1):
            conditional = np.tensordot(conditional, probability, axes=([1], [0]))
        mean = probability @ conditional
        partial_variance = probability @ (conditional - mean) ** 2
        ratio = np.divide(
            partial_variance,
            total_variance,
            out=np.full(n_times, np.nan),
            where=defined,
        )
        indices[name] = np.where(defined, np.clip(ratio, 0.0, 1.0), np.nan)
    return indices


def probability_of_failure(h_ensemble: QoIEnsemble, grid: CollocationGrid) -> FloatArray:
    """p_f(t) as the collocation expectation of the failure indicator."""
    _check_complete(h_ensemble.values, grid)
    return np.clip(grid.weights @ h_ensemble.values, 0.0, 1.0)


@dataclass(frozen=True)
class FieldMoments:
    field: str
    times: FloatArray
    x: FloatArray
    # (times, nodes)
    expectation: FloatArray
    std: FloatArray


def _field_at(result: SimulationResult, field: str, t: float) -> FloatArray:
    eligible = [s for s in result.snapshots if s.time <= t + 1e-9]
    if not eligible:
        raise ModelValidationError(
            "no snapshot at or before the requested time", key="snapshots", got=t
        )
    return np.asarray(getattr(eligible[-1].state, field))


def pcm_field_moments(
    results: Sequence[SimulationResult],
    grid: CollocationGrid,
    times: Sequence[float],
    x: FloatArray,
    field: str = "phi",
) -> FieldMoments:
    """Mean and std of a spatial field at each snapshot time.

    A realization that failed earlier contributes its state at failure.
    """
    if field not in {"phi", "theta"}:
        raise ModelValidationError("unsupported field", key="field", expected=["phi", "theta"], got=field)
    if len(results) != grid.size:
        raise ModelValidationError(
            "ensemble does not cover the grid", key="ensemble", expected=grid.size, got=len(results)
        )

    expectation = np.empty((len(times), x.size))
    std = np.empty((len(times), x.size))
    for i, t in enumerate(times):
        stacked = np.stack([_field_at(r, field, t) for r in results])
        expectation[i], std[i] = _weighted_moments(stacked, grid.weights)
    return FieldMoments(field=field, times=np.asarray(times, dtype=float), x=x, expectation=expectation, std=std)


def midspan_phi_at(result: SimulationResult, t: float) -> float:
    """Midspan damage at time t; after failure the value at failure is kept."""
    if result.times.size == 0:
        raise ModelValidationError("empty result series", key="result")
    index = int(np.searchsorted(result.times, t + 1e-9, side="right")) - 1
    return float(result.phi_midspan[max(index, 0)])
