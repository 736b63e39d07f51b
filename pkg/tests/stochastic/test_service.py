import numpy as np
import pytest

from tests.fakes import FakeRunner, make_config, make_result
from tlr.simulation.parameters import parameter_baseline
from tlr.stochastic.domain import QoIKind, RandomParameter, RandomSpace
from tlr.stochastic.service import CollocationService

SPACE = RandomSpace(
    parameters=(
        RandomParameter(name="g_c", lower=9e3, upper=11e3),
        RandomParameter(name="w_b", lower=0.5, upper=1.5),
    )
)


def _linear_response(cfg):
    # Flat series equal to g_c / 1000 + w_b
    return make_result(parameter_baseline(cfg, "g_c") / 1e3 + parameter_baseline(cfg, "w_b"))


@pytest.mark.unit
@pytest.mark.parametrize("batch_size", [1, 4, 64])
async def test_collocation_results_follow_grid_order(batch_size):
    runner = FakeRunner(_linear_response)
    service = CollocationService(runner=runner, batch_size=batch_size)

    run = await service.collocate(make_config(), SPACE, points_per_dim=3)

    assert len(run.results) == run.grid.size == 9
    expected = run.grid.nodes[:, 0] / 1e3 + run.grid.nodes[:, 1]
    np.testing.assert_allclose([r.theta_max[0] for r in run.results], expected)


@pytest.mark.unit
async def test_collocation_drops_snapshots_unless_asked():
    runner = FakeRunner(_linear_response)
    service = CollocationService(runner=runner)

    await service.collocate(make_config(), SPACE, 2)
    await service.collocate(make_config(), SPACE, 2, keep_snapshots=True)

    assert all(c.snapshot_interval is None for c in runner.configs[:4])
    assert all(c.snapshot_interval == 0.5 for c in runner.configs[4:])


@pytest.mark.unit
async def test_evaluate_applies_each_realization():
    runner = FakeRunner(_linear_response)
    service = CollocationService(runner=runner)

    results = await service.evaluate(make_config(), [{"g_c": 1e3}, {"g_c": 2e3, "w_b": 2.0}])

    assert [r.theta_max[0] for r in results] == pytest.approx([2.0, 4.0])


@pytest.mark.unit
async def test_monte_carlo_moments_are_seeded():
    service = CollocationService(runner=FakeRunner(_linear_response))

    first = await service.monte_carlo_moments(make_config(), SPACE, 200, seed=3, qoi=QoIKind.THETA_MAX_SERIES)
    second = await service.monte_carlo_moments(make_config(), SPACE, 200, seed=3, qoi=QoIKind.THETA_MAX_SERIES)

    np.testing.assert_array_equal(first.samples, second.samples)
    np.testing.assert_array_equal(first.estimate.expectation, second.estimate.expectation)
    # E = 10 + 1
    np.testing.assert_allclose(first.estimate.expectation, 11.0, rtol=0.02)
    np.testing.assert_array_equal(first.estimate.p_f, 0.0)


@pytest.mark.unit
async def test_monte_carlo_failing_fraction():
    def response(cfg):
        return make_result(1.0, fail_step=2 if parameter_baseline(cfg, "w_b") > 1.0 else None)

    service = CollocationService(runner=FakeRunner(response))

    run = await service.monte_carlo_moments(make_config(), SPACE, 400, seed=0, qoi=QoIKind.H_B_SERIES)

    assert run.estimate.p_f[0] == 0.0
    assert run.estimate.p_f[-1] == pytest.approx(np.mean(run.samples[:, 1] > 1.0))


@pytest.mark.unit
async def test_convergence_study_of_a_linear_response():
    runner = FakeRunner(_linear_response)
    service = CollocationService(runner=runner)

    rows = await service.convergence_study(
        make_config(), "g_c", points=[2, 3], mc_samples=[50], at_time=0.5, reference_points=5
    )

    assert [(r.method, r.size) for r in rows] == [("pcm", 2), ("pcm", 3), ("mc", 50)]
    # Quadrature is exact for a linear response; sampling is not
    assert rows[0].error == pytest.approx(0.0, abs=1e-12)
    assert rows[1].estimate == pytest.approx(11.0)
    assert 0.0 < rows[2].error < 0.05
    assert all(c.horizon == pytest.approx(0.6) for c in runner.configs)


@pytest.mark.unit
def test_service_closes_its_runner():
    runner = FakeRunner(_linear_response)

    CollocationService(runner=runner).close()

    assert runner.closed


@pytest.mark.unit
def test_batch_size_must_be_positive():
    with pytest.raises(ValueError):
        CollocationService(runner=FakeRunner(_linear_response), batch_size=0)
