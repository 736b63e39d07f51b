from __future__ import annotations

import asyncio
from concurrent.futures import ProcessPoolExecutor
from typing import Optional

from tlr.simulation.domain import SimulationConfig, SimulationResult
from tlr.simulation.runner import run_deterministic

from .ports import SimulationRunner


class InlineRunner(SimulationRunner):
    """Run each simulation in the calling process, one at a time."""

    async def run(self, cfg: SimulationConfig) -> SimulationResult:
        return run_deterministic(cfg)

    def close(self) -> None:
        pass


class ProcessPoolRunner(SimulationRunner):
    """Run simulations on a pool of worker processes.

    The pool is created lazily on first use and shut down by close().
    """

    def __init__(self, max_workers: Optional[int] = None) -> None:
        self._max_workers = max_workers
        self._executor: Optional[ProcessPoolExecutor] = None

    async def run(self, cfg: SimulationConfig) -> SimulationResult:
        if self._executor is None:
            self._executor = ProcessPoolExecutor(max_workers=self._max_workers)
        loop = asyncio.get_running_loop()
        return await loop.run_in_executor(self._executor, run_deterministic, cfg)

    def close(self) -> None:
        if self._executor is not None:
            self._executor.shutdown(wait=True)
            self._executor = None
