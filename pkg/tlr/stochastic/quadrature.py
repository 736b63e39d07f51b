import itertools

import numpy as np
from numpy.polynomial.legendre import leggauss

from tlr.exceptions import ModelValidationError
from tlr.stochastic.domain import CollocationGrid, FloatArray, RandomSpace

MAX_POINTS = 100


def gauss_legendre_rule(n: int) -> tuple[FloatArray, FloatArray]:
    """Gauss-Legendre points and weights on [-1, 1]; exact to degree 2n - 1."""
    if not 1 <= n <= MAX_POINTS:
        raise ModelValidationError(
            "number of quadrature points out of range",
            key="points",
            expected=f"1 <= n <= {MAX_POINTS}",
            got=n,
        )
    points, weights = leggauss(n)
    return points, weights


def build_grid(space: RandomSpace, points_per_dim: int) -> CollocationGrid:
    unit_points, unit_weights = gauss_legendre_rule(points_per_dim)
    # Uniform density times the affine Jacobian leaves w/2 per dimension
    probability = unit_weights / 2.0

    index_tuples = list(itertools.product(range(points_per_dim), repeat=space.dims))
    idx = np.array(index_tuples, dtype=int).reshape(-1, space.dims)
    nodes = np.column_stack(
        [p.from_unit(unit_points[idx[:, j]]) for j, p in enumerate(space.parameters)]
    )
    weights = np.prod(probability[idx], axis=1)
    return CollocationGrid(
        space=space,
        points_per_dim=points_per_dim,
        unit_points=unit_points,
        unit_weights=unit_weights,
        nodes=nodes,
        weights=weights,
    )
