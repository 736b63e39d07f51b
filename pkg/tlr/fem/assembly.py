"""Two-point Gauss assembly of tridiagonal systems for linear 1-D elements.

Every global operator here is symmetric tridiagonal and stored as (diag, off).
Element contributions are added in a fixed vectorised order so repeated solves
are bit-reproducible.
"""

import logging
from typing import Optional

import numpy as np
from scipy.linalg import LinAlgError, eigvals_banded, solveh_banded

from tlr.exceptions import SolverError
from tlr.fem.domain import FloatArray, Mesh
from tlr.loading.domain import AreaProfile
from tlr.loading.profiles import area_at

logger = logging.getLogger(__name__)

GAUSS_XI = np.array([-1.0, 1.0]) / np.sqrt(3.0)
# Shape functions at the two Gauss points: SHAPE[g, a] = N_a(xi_g)
SHAPE = np.column_stack([(1.0 - GAUSS_XI) / 2.0, (1.0 + GAUSS_XI) / 2.0])


def gauss_coordinates(mesh: Mesh) -> FloatArray:
    """Physical Gauss point coordinates, shape (n_elements, 2)."""
    x = mesh.node_coords
    return x[:-1, None] * SHAPE[None, :, 0] + x[1:, None] * SHAPE[None, :, 1]


def at_gauss(nodal: FloatArray) -> FloatArray:
    """Interpolate a nodal field to Gauss points, shape (n_elements, 2)."""
    return nodal[:-1, None] * SHAPE[None, :, 0] + nodal[1:, None] * SHAPE[None, :, 1]


def element_gradient(mesh: Mesh, nodal: FloatArray) -> FloatArray:
    return np.diff(nodal) / mesh.h


def area_at_gauss(mesh: Mesh, area: AreaProfile) -> FloatArray:
    return np.asarray(area_at(area, gauss_coordinates(mesh)))


def area_at_nodes(mesh: Mesh, area: AreaProfile) -> FloatArray:
    return np.asarray(area_at(area, mesh.node_coords))


def nodal_weights(mesh: Mesh) -> FloatArray:
    """Trapezoidal quadrature weights: h inside, h/2 at both ends."""
    weights = np.full(mesh.n_nodes, mesh.h)
    weights[[0, -1]] = mesh.h / 2.0
    return weights


def diameter_from_area(area: FloatArray) -> FloatArray:
    return np.sqrt(4.0 * area / np.pi)


def _scatter(first: FloatArray, second: FloatArray) -> FloatArray:
    return np.concatenate([first, [0.0]]) + np.concatenate([[0.0], second])


def assemble_stiffness(mesh: Mesh, coeff: FloatArray) -> tuple[FloatArray, FloatArray]:
    """int c B^T B dx with c given at Gauss points."""
    k_e = coeff.sum(axis=1) / (2.0 * mesh.h)
    return _scatter(k_e, k_e), -k_e


def assemble_mass(mesh: Mesh, coeff: FloatArray) -> tuple[FloatArray, FloatArray]:
    """int c N^T N dx with c given at Gauss points."""
    half_h = mesh.h / 2.0
    m00 = half_h * (coeff * SHAPE[None, :, 0] ** 2).sum(axis=1)
    m11 = half_h * (coeff * SHAPE[None, :, 1] ** 2).sum(axis=1)
    m01 = half_h * (coeff * SHAPE[None, :, 0] * SHAPE[None, :, 1]).sum(axis=1)
    return _scatter(m00, m11), m01


def assemble_load(mesh: Mesh, source: FloatArray) -> FloatArray:
    """int f N dx with f given at Gauss points."""
    half_h = mesh.h / 2.0
    f0 = half_h * (source * SHAPE[None, :, 0]).sum(axis=1)
    f1 = half_h * (source * SHAPE[None, :, 1]).sum(axis=1)
    return _scatter(f0, f1)


def assemble_gradient_load(mesh: Mesh, source: FloatArray) -> FloatArray:
    """int f B dx with f given at Gauss points."""
    f_e = source.sum(axis=1) / 2.0
    return _scatter(-f_e, f_e)


def _condition_estimate(band: FloatArray) -> Optional[float]:
    try:
        eig = np.abs(eigvals_banded(band, lower=False))
    except (LinAlgError, ValueError):
        return None
    smallest = eig.min()
    return float("inf") if smallest == 0 else float(eig.max() / smallest)


def solve_spd(
    diag: FloatArray,
    off: FloatArray,
    rhs: FloatArray,
    field: str,
    fix_first: bool = False,
) -> FloatArray:
    """Solve a symmetric positive definite tridiagonal system.

    With fix_first the first unknown is held at zero and eliminated.
    """
    if fix_first:
        diag, off, rhs = diag[1:], off[1:], rhs[1:]

    band = np.zeros((2, diag.size))
    band[0, 1:] = off
    band[1, :] = diag
    try:
        solution = solveh_banded(band, rhs, check_finite=True)
    except (LinAlgError, ValueError) as e:
        raise SolverError(
            f"{field} system is singular or indefinite",
            key=field,
            details={"field": field, "condition_estimate": _condition_estimate(band), "error": str(e)},
        ) from e

    if not np.all(np.isfinite(solution)):
        raise SolverError(
            f"{field} solve produced non-finite values",
            key=field,
            details={"field": field, "condition_estimate": _condition_estimate(band)},
        )

    if fix_first:
        solution = np.concatenate([[0.0], solution])
    return solution
