import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tests.fakes import make_result
from tlr.environment.domain import ScenarioKind
from tlr.exceptions import ModelValidationError, SolverError
from tlr.fem.domain import FieldState, Mesh
from tlr.simulation.domain import FieldSnapshot
from tlr.stochastic.collocation import (
    build_ensemble,
    default_qoi,
    midspan_phi_at,
    pcm_field_moments,
    pcm_moments,
    probability_of_failure,
    sobol_first_order,
)
from tlr.stochastic.convergence import convergence_error
from tlr.stochastic.domain import QoIKind, RandomParameter, RandomSpace
from tlr.stochastic.montecarlo import monte_carlo_statistics, sample_space
from tlr.stochastic.quadrature import build_grid


SPACE = RandomSpace(
    parameters=(
        RandomParameter(name="g_c", lower=-1.0, upper=1.0),
        RandomParameter(name="w_b", lower=-1.0, upper=1.0),
    )
)


def _results_for(grid, qoi):
    return [make_result(qoi(*grid.nodes[i])) for i in range(grid.size)]


@pytest.mark.unit
@pytest.mark.parametrize(
    "kind,expected",
    [
        (ScenarioKind.WILDFIRE, QoIKind.THETA_MAX_SERIES),
        (ScenarioKind.HIGH_WIND, QoIKind.PHI_MAX_SERIES),
        (ScenarioKind.ICING, QoIKind.PHI_MAX_SERIES),
    ],
)
def test_default_qoi_follows_the_failure_driver(kind, expected):
    assert default_qoi(kind) is expected


@pytest.mark.unit
def test_pcm_moments_of_a_linear_response():
    grid = build_grid(SPACE, 3)
    ensemble = build_ensemble(_results_for(grid, lambda x, y: 5.0 + x + 2.0 * y), QoIKind.THETA_MAX_SERIES)

    moments = pcm_moments(ensemble, grid)

    np.testing.assert_allclose(moments.expectation, 5.0)
    np.testing.assert_allclose(moments.std, np.sqrt(1.0 / 3.0 + 4.0 / 3.0))
    assert moments.times.size == 10


@pytest.mark.unit
def test_sobol_indices_of_an_additive_response():
    grid = build_grid(SPACE, 4)
    ensemble = build_ensemble(_results_for(grid, lambda x, y: x + 2.0 * y), QoIKind.PHI_MAX_SERIES)

    indices = sobol_first_order(ensemble, grid)

    np.testing.assert_allclose(indices["g_c"], 0.2)
    np.testing.assert_allclose(indices["w_b"], 0.8)


@pytest.mark.unit
def test_pure_interaction_has_no_first_order_effect():
    grid = build_grid(SPACE, 4)
    ensemble = build_ensemble(_results_for(grid, lambda x, y: x * y), QoIKind.PHI_MAX_SERIES)

    indices = sobol_first_order(ensemble, grid)

    np.testing.assert_allclose(indices["g_c"], 0.0, atol=1e-12)
    np.testing.assert_allclose(indices["w_b"], 0.0, atol=1e-12)


@pytest.mark.unit
def test_sobol_is_undefined_without_variance():
    grid = build_grid(SPACE, 3)
    ensemble = build_ensemble(_results_for(grid, lambda x, y: 1.0), QoIKind.PHI_MAX_SERIES)

    indices = sobol_first_order(ensemble, grid)

    assert np.all(np.isnan(indices["g_c"]))


@pytest.mark.unit
def test_sobol_needs_two_dimensions():
    space = RandomSpace(parameters=(RandomParameter(name="g_c", lower=0.0, upper=1.0),))
    grid = build_grid(space, 3)
    ensemble = build_ensemble(_results_for(grid, lambda x: x), QoIKind.PHI_MAX_SERIES)

    with pytest.raises(ModelValidationError):
        sobol_first_order(ensemble, grid)


@pytest.mark.unit
def test_sobol_indices_of_a_product_on_the_unit_square():
    space = RandomSpace(
        parameters=(
            RandomParameter(name="g_c", lower=0.0, upper=1.0),
            RandomParameter(name="w_b", lower=0.0, upper=1.0),
        )
    )
    grid = build_grid(space, 3)
    ensemble = build_ensemble(_results_for(grid, lambda x, y: x * y), QoIKind.PHI_MAX_SERIES)

    indices = sobol_first_order(ensemble, grid)

    # Var(xy) = 7/144, Var(E[xy | x]) = 3/144
    np.testing.assert_allclose(indices["g_c"], 3.0 / 7.0, rtol=1e-10)
    np.testing.assert_allclose(indices["w_b"], 3.0 / 7.0, rtol=1e-10)


@pytest.mark.unit
@given(
    scale=st.one_of(
        st.floats(min_value=0.1, max_value=50.0),
        st.floats(min_value=-50.0, max_value=-0.1),
    ),
    shift=st.floats(min_value=-100.0, max_value=100.0),
)
@settings(max_examples=30, deadline=None)
def test_sobol_indices_ignore_scale_and_shift_of_the_response(scale, shift):
    grid = build_grid(SPACE, 4)

    def response(x, y):
        return np.exp(x) + 0.5 * y + x * y

    def indices_of(qoi):
        return sobol_first_order(
            build_ensemble(_results_for(grid, qoi), QoIKind.PHI_MAX_SERIES), grid
        )

    base = indices_of(response)
    moved = indices_of(lambda x, y: scale * response(x, y) + shift)

    for name in SPACE.names:
        np.testing.assert_allclose(moved[name], base[name], rtol=1e-9)


@pytest.mark.unit
def test_collocation_mean_agrees_with_sampling_within_its_standard_error():
    def response(x, y):
        return np.exp(0.5 * x) + np.sin(y) + 0.3 * x * y

    grid = build_grid(SPACE, 6)
    collocated = pcm_moments(
        build_ensemble(_results_for(grid, response), QoIKind.THETA_MAX_SERIES), grid
    )
    samples = sample_space(SPACE, 10_000, seed=11)
    values = response(samples[:, 0], samples[:, 1])[:, None]

    sampled = monte_carlo_statistics(values, np.zeros_like(values))

    bound = 3.0 * sampled.std[0] / np.sqrt(values.shape[0])
    assert abs(collocated.expectation[0] - sampled.expectation[0]) <= bound


@pytest.mark.unit
def test_probability_of_failure_counts_weighted_failures():
    grid = build_grid(SPACE, 4)
    results = [
        make_result(0.5, fail_step=3 if grid.nodes[i, 0] > 0 else None) for i in range(grid.size)
    ]

    p_f = probability_of_failure(build_ensemble(results, QoIKind.H_B_SERIES), grid)

    assert p_f.shape == (10,)
    np.testing.assert_allclose(p_f[:3], 0.0)
    np.testing.assert_allclose(p_f[3:], 0.5)
    assert np.all(np.diff(p_f) >= 0)


@pytest.mark.unit
def test_series_are_cut_at_the_earliest_failure():
    results = [make_result(1.0), make_result(2.0, fail_step=4), make_result(3.0, fail_step=6)]

    ensemble = build_ensemble(results, QoIKind.THETA_MAX_SERIES)
    indicator = build_ensemble(results, QoIKind.H_B_SERIES)

    assert ensemble.values.shape == (3, 5)
    np.testing.assert_allclose(ensemble.times, np.arange(5) * 0.1)
    assert indicator.values.shape == (3, 10)
    np.testing.assert_array_equal(indicator.values[1], [0] * 4 + [1] * 6)


@pytest.mark.unit
def test_errored_realizations_are_reported_by_node():
    results = [make_result(1.0), make_result(1.0, error_step=2), make_result(1.0)]

    with pytest.raises(SolverError) as exc_info:
        build_ensemble(results, QoIKind.PHI_MAX_SERIES)

    assert exc_info.value.details["nodes"] == [1]


@pytest.mark.unit
def test_incomplete_ensemble_is_rejected():
    grid = build_grid(SPACE, 3)
    ensemble = build_ensemble([make_result(1.0)] * (grid.size - 1), QoIKind.PHI_MAX_SERIES)

    with pytest.raises(ModelValidationError):
        pcm_moments(ensemble, grid)


@pytest.mark.unit
def test_field_moments_use_the_state_at_or_before_each_time():
    mesh = Mesh(length=10.0, n_elements=4)
    space = RandomSpace(parameters=(RandomParameter(name="g_c", lower=0.0, upper=1.0),))
    grid = build_grid(space, 2)
    results = []
    for level in (0.2, 0.4):
        state = FieldState.initial(mesh, 290.0)
        state.phi = np.full(mesh.n_nodes, level)
        result = make_result(level)
        result.snapshots = [FieldSnapshot(time=0.0, state=state)]
        results.append(result)

    moments = pcm_field_moments(results, grid, [0.0, 0.5], mesh.node_coords, field="phi")

    assert moments.expectation.shape == (2, 5)
    np.testing.assert_allclose(moments.expectation, 0.3)
    np.testing.assert_allclose(moments.std, 0.1)


@pytest.mark.unit
def test_midspan_damage_is_held_after_failure():
    result = make_result(0.7, fail_step=3)

    assert midspan_phi_at(result, 0.2) == pytest.approx(0.7)
    assert midspan_phi_at(result, 5.0) == pytest.approx(0.7)


@pytest.mark.unit
def test_monte_carlo_sampling_is_seeded_and_bounded():
    first = sample_space(SPACE, 500, seed=7)
    second = sample_space(SPACE, 500, seed=7)

    np.testing.assert_array_equal(first, second)
    assert first.shape == (500, 2)
    assert np.all((first >= -1.0) & (first <= 1.0))
    assert not np.array_equal(first, sample_space(SPACE, 500, seed=8))


@pytest.mark.unit
def test_monte_carlo_statistics():
    values = np.array([[1.0, 2.0], [3.0, 4.0], [5.0, 9.0]])
    indicators = np.array([[0, 1], [0, 0], [1, 1]], dtype=float)

    estimate = monte_carlo_statistics(values, indicators)

    np.testing.assert_allclose(estimate.expectation, [3.0, 5.0])
    np.testing.assert_allclose(estimate.std, [2.0, np.std([2.0, 4.0, 9.0], ddof=1)])
    np.testing.assert_allclose(estimate.p_f, [1.0 / 3.0, 2.0 / 3.0])


@pytest.mark.unit
def test_single_sample_has_zero_spread():
    estimate = monte_carlo_statistics(np.array([[1.0, 2.0]]), np.zeros((1, 2)))

    np.testing.assert_array_equal(estimate.std, [0.0, 0.0])


@pytest.mark.unit
@pytest.mark.parametrize(
    "candidate,reference,expected",
    [
        ([1.0, 2.0], [1.0, 2.0], 0.0),
        ([1.1], [1.0], 0.1),
        (2.0, 1.0, 1.0),
        ([3.0, 4.0], [0.0, 5.0], np.sqrt(10.0) / 5.0),
    ],
)
def test_convergence_error(candidate, reference, expected):
    assert convergence_error(candidate, reference) == pytest.approx(expected)


@pytest.mark.unit
@pytest.mark.parametrize("candidate,reference", [([1.0], [0.0]), ([1.0, 2.0], [1.0])])
def test_convergence_error_rejects_degenerate_reference(candidate, reference):
    with pytest.raises(ModelValidationError):
        convergence_error(candidate, reference)
