"""Builder for the collocation service from application configuration."""

from __future__ import annotations

import logging
import os

from tlr.configs.app_config import AppConfig
from tlr.stochastic.adapters import InlineRunner, ProcessPoolRunner
from tlr.stochastic.ports import SimulationRunner
from tlr.stochastic.service import CollocationService

logger = logging.getLogger(__name__)


def build_collocation_service(config: AppConfig) -> CollocationService:
    """Single-process runner for one job, otherwise a process pool capped at runner.jobs."""
    jobs = config.runner.jobs or os.cpu_count() or 1
    runner: SimulationRunner
    if jobs <= 1:
        runner = InlineRunner()
    else:
        runner = ProcessPoolRunner(max_workers=jobs)
    logger.info(f"Using {type(runner).__name__} with {jobs} worker(s)")
    return CollocationService(runner=runner, batch_size=config.stochastic.batch_size)
