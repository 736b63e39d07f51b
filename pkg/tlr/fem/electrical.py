from typing import Optional

import numpy as np
import numpy.typing as npt

from tlr.domain import MaterialProperties
from tlr.environment.domain import IceLayer
from tlr.exceptions import PhysicalDomainError
from tlr.fem.assembly import (
    area_at_gauss,
    assemble_stiffness,
    at_gauss,
    diameter_from_area,
    element_gradient,
    solve_spd,
)
from tlr.fem.domain import FieldState, FloatArray, Mesh
from tlr.loading.domain import AreaProfile


def degraded_conductivity(
    phi: float | npt.ArrayLike,
    theta: float | npt.ArrayLike,
    props: MaterialProperties,
    ice: Optional[IceLayer] = None,
    area: Optional[float | npt.ArrayLike] = None,
) -> float | FloatArray:
    """(1 - phi)^2 sigma_E0 / (1 + alpha (theta - theta0)), in S/m.

    With an ice layer and the conductor area, the ice shell conducts in parallel
    and its conductance is folded into the conductor cross-section.
    """
    phi_arr = np.asarray(phi, dtype=float)
    theta_arr = np.asarray(theta, dtype=float)
    scaling = 1.0 + props.resistivity_temp_coeff * (theta_arr - props.reference_temp)
    if np.any(scaling <= 0):
        raise PhysicalDomainError(
            "temperature below the range of the linear resistivity law",
            key="theta",
            expected=f"> {props.reference_temp - 1.0 / props.resistivity_temp_coeff:.2f} K",
            got=float(np.min(theta_arr)),
        )
    sigma = (1.0 - phi_arr) ** 2 * props.electrical_conductivity_ref / scaling

    if ice is not None and area is not None and ice.thickness > 0:
        area_arr = np.asarray(area, dtype=float)
        sigma = sigma + _ice_conductance(ice, props, area_arr) / area_arr

    if sigma.ndim == 0:
        return float(sigma)
    return sigma


def _ice_conductance(ice: IceLayer, props: MaterialProperties, area: FloatArray) -> FloatArray:
    diameter = diameter_from_area(area)
    ice_area = np.pi * ice.thickness * (diameter + ice.thickness)
    return ice_area / props.ice.resistivity


def conductance_coefficient(
    mesh: Mesh,
    props: MaterialProperties,
    state: FieldState,
    area: AreaProfile,
    ice: Optional[IceLayer] = None,
) -> FloatArray:
    """sigma_E A at Gauss points, i.e. the line conductance per unit length."""
    area_gp = area_at_gauss(mesh, area)
    sigma = degraded_conductivity(at_gauss(state.phi), at_gauss(state.theta), props, ice, area_gp)
    return np.asarray(sigma) * area_gp


def solve_voltage(
    mesh: Mesh,
    props: MaterialProperties,
    state: FieldState,
    area: AreaProfile,
    current: float,
    ice: Optional[IceLayer] = None,
) -> FloatArray:
    """Voltage with V(0) = 0 and current |I| entering at x = L."""
    coeff = conductance_coefficient(mesh, props, state, area, ice)
    diag, off = assemble_stiffness(mesh, coeff)
    rhs = np.zeros(mesh.n_nodes)
    rhs[-1] = abs(current)
    return solve_spd(diag, off, rhs, field="voltage", fix_first=True)


def element_flux(
    mesh: Mesh,
    props: MaterialProperties,
    state: FieldState,
    area: AreaProfile,
    ice: Optional[IceLayer] = None,
) -> FloatArray:
    """sigma_E A dV/dx per element, using the Gauss-averaged conductance."""
    coeff = conductance_coefficient(mesh, props, state, area, ice)
    return coeff.mean(axis=1) * element_gradient(mesh, state.voltage)
