import numpy as np
import pytest

from tests.fakes import make_config
from tlr.simulation.parameters import parameter_baseline
from tlr.stochastic.adapters import InlineRunner, ProcessPoolRunner
from tlr.stochastic.collocation import build_ensemble, pcm_moments
from tlr.stochastic.domain import QoIKind, RandomParameter, RandomSpace
from tlr.stochastic.service import CollocationService


def _space(cfg):
    return RandomSpace(
        parameters=(
            RandomParameter.around("g_c", parameter_baseline(cfg, "g_c")),
            RandomParameter.around("w_b", parameter_baseline(cfg, "w_b")),
        )
    )


async def _moments(runner, cfg):
    service = CollocationService(runner=runner, batch_size=3)
    try:
        run = await service.collocate(cfg, _space(cfg), points_per_dim=2)
    finally:
        runner.close()
    return [
        pcm_moments(build_ensemble(run.results, qoi), run.grid)
        for qoi in (QoIKind.THETA_MAX_SERIES, QoIKind.PHI_MAX_SERIES)
    ]


@pytest.mark.integration
@pytest.mark.parametrize("workers", [2, 3])
async def test_worker_count_leaves_moments_bit_for_bit_unchanged(workers):
    cfg = make_config()

    single = await _moments(ProcessPoolRunner(max_workers=1), cfg)
    pooled = await _moments(ProcessPoolRunner(max_workers=workers), cfg)

    for one, many in zip(single, pooled):
        np.testing.assert_array_equal(one.times, many.times)
        np.testing.assert_array_equal(one.expectation, many.expectation)
        np.testing.assert_array_equal(one.std, many.std)


@pytest.mark.integration
async def test_pool_matches_running_in_process():
    cfg = make_config()

    inline = await _moments(InlineRunner(), cfg)
    pooled = await _moments(ProcessPoolRunner(max_workers=2), cfg)

    for one, many in zip(inline, pooled):
        np.testing.assert_array_equal(one.expectation, many.expectation)


@pytest.mark.unit
def test_closing_an_unused_pool_is_harmless():
    runner = ProcessPoolRunner(max_workers=2)

    runner.close()
    runner.close()
