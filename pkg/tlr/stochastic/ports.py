from __future__ import annotations

from typing import Protocol

from tlr.simulation.domain import SimulationConfig, SimulationResult


class SimulationRunner(Protocol):
    async def run(self, cfg: SimulationConfig) -> SimulationResult: ...

    def close(self) -> None: ...
