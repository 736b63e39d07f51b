from __future__ import annotations

import asyncio
import logging
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from tlr.simulation.domain import SimulationConfig, SimulationResult
from tlr.simulation.limit_state import failure_indicator
from tlr.simulation.parameters import apply_parameters

from .collocation import build_ensemble, midspan_phi_at
from .convergence import convergence_error
from .domain import CollocationGrid, FloatArray, QoIKind, RandomSpace
from .montecarlo import MonteCarloEstimate, monte_carlo_statistics, sample_space
from .ports import SimulationRunner
from .presets import space_around
from .quadrature import build_grid

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CollocationRun:
    grid: CollocationGrid
    results: list[SimulationResult]


@dataclass(frozen=True)
class MonteCarloRun:
    samples: FloatArray
    times: FloatArray
    estimate: MonteCarloEstimate


@dataclass(frozen=True)
class ConvergenceRow:
    method: str
    size: int
    estimate: float
    error: float


class CollocationService:
    """Schedules simulator runs for collocation and sampling studies.

    The runner is a port; results always come back in submission order, so
    every reduction downstream is independent of worker count.
    """

    def __init__(self, runner: SimulationRunner, batch_size: int = 64) -> None:
        if batch_size < 1:
            raise ValueError("batch_size must be positive")
        self._runner = runner
        self._batch_size = batch_size

    async def evaluate(
        self, cfg: SimulationConfig, realizations: Sequence[Mapping[str, float]]
    ) -> list[SimulationResult]:
        configs = [apply_parameters(cfg, values) for values in realizations]
        results: list[SimulationResult] = []
        for start in range(0, len(configs), self._batch_size):
            batch = configs[start : start + self._batch_size]
            results.extend(await asyncio.gather(*(self._runner.run(c) for c in batch)))
            failed = sum(r.failed for r in results)
            logger.info(f"Evaluated {len(results)}/{len(configs)} realizations ({failed} failed)")
        return results

    async def collocate(
        self,
        cfg: SimulationConfig,
        space: RandomSpace,
        points_per_dim: int,
        keep_snapshots: bool = False,
    ) -> CollocationRun:
        grid = build_grid(space, points_per_dim)
        logger.info(
            f"Collocating over {space.names} with {points_per_dim} points per dimension "
            f"({grid.size} runs)"
        )
        if not keep_snapshots:
            cfg = cfg.model_copy(update={"snapshot_interval": None})
        results = await self.evaluate(cfg, [grid.realization(i) for i in range(grid.size)])
        return CollocationRun(grid=grid, results=results)

    async def monte_carlo_moments(
        self,
        cfg: SimulationConfig,
        space: RandomSpace,
        n_samples: int,
        seed: int,
        qoi: QoIKind,
    ) -> MonteCarloRun:
        samples = sample_space(space, n_samples, seed)
        realizations = [dict(zip(space.names, map(float, row))) for row in samples]
        results = await self.evaluate(
            cfg.model_copy(update={"snapshot_interval": None}), realizations
        )
        ensemble = build_ensemble(results, qoi)
        indicators = np.stack([failure_indicator(r).astype(float) for r in results])
        return MonteCarloRun(
            samples=samples,
            times=ensemble.times,
            estimate=monte_carlo_statistics(ensemble.values, indicators),
        )

    async def convergence_study(
        self,
        cfg: SimulationConfig,
        parameter: str,
        points: Sequence[int],
        mc_samples: Sequence[int],
        at_time: float,
        reference_points: int = 100,
        seed: int = 0,
        spread: float = 0.1,
    ) -> list[ConvergenceRow]:
        """Error of 1-D PCM and Monte Carlo expectations of midspan damage at one time.

        Errors are relative to a high-order collocation reference.
        """
        # Run only as far as the time of interest
        steps = int(round(at_time / cfg.dt)) + 1
        cfg = cfg.model_copy(update={"horizon": steps * cfg.dt, "snapshot_interval": None})
        space = space_around(cfg, [parameter], spread)

        async def pcm_estimate(n: int) -> float:
            run = await self.collocate(cfg, space, n)
            qoi = np.array([midspan_phi_at(r, at_time) for r in run.results])
            return float(run.grid.weights @ qoi)

        reference = await pcm_estimate(reference_points)
        logger.info(f"Reference expectation with {reference_points} points: {reference:.6e}")

        rows: list[ConvergenceRow] = []
        for n in points:
            estimate = await pcm_estimate(n)
            rows.append(ConvergenceRow("pcm", n, estimate, convergence_error(estimate, reference)))

        for n_samples in mc_samples:
            realizations = [
                {parameter: float(v)} for v in sample_space(space, n_samples, seed)[:, 0]
            ]
            results = await self.evaluate(cfg, realizations)
            estimate = float(np.mean([midspan_phi_at(r, at_time) for r in results]))
            rows.append(
                ConvergenceRow("mc", n_samples, estimate, convergence_error(estimate, reference))
            )
        return rows

    def close(self) -> None:
        self._runner.close()
