import numpy as np

from tlr.domain import MaterialProperties
from tlr.fem.assembly import (
    area_at_gauss,
    area_at_nodes,
    assemble_gradient_load,
    assemble_stiffness,
    at_gauss,
    element_gradient,
    nodal_weights,
    solve_spd,
)
from tlr.fem.domain import FieldState, FloatArray, Mesh
from tlr.loading.domain import AreaProfile


def _axial_stiffness_at_gauss(
    mesh: Mesh, props: MaterialProperties, phi: FloatArray, area: AreaProfile
) -> FloatArray:
    return (1.0 - at_gauss(phi)) ** 2 * props.young_modulus * area_at_gauss(mesh, area)


def solve_displacement(
    mesh: Mesh,
    props: MaterialProperties,
    state: FieldState,
    area: AreaProfile,
    tension: float,
) -> FloatArray:
    """Axial displacement with u(0) = 0 and traction H at x = L; no body force."""
    area_gp = area_at_gauss(mesh, area)
    diag, off = assemble_stiffness(mesh, _axial_stiffness_at_gauss(mesh, props, state.phi, area))

    # Gradient coupling of the damage field; phi' is constant per element
    phi_grad = element_gradient(mesh, state.phi)
    coupling = props.damage_layer_width * props.fracture_energy * area_gp * phi_grad[:, None] ** 2
    rhs = assemble_gradient_load(mesh, coupling)
    rhs[-1] += tension

    return solve_spd(diag, off, rhs, field="displacement", fix_first=True)


def recover_strain(
    mesh: Mesh, props: MaterialProperties, state: FieldState, area: AreaProfile
) -> FloatArray:
    """
    Nodal strain from the axial force carried by the discrete solution.

    The element force k_e (u_{e+1} - u_e) is constant along an unloaded bar, so
    averaging it onto the nodes and dividing by the local section stiffness
    (1 - phi)^2 Y A(x_i) gives the strain at the node itself rather than a
    mean over the neighbouring elements. Must be called with the damage field
    the displacement was solved with. Nodes with no stiffness left fall back
    to the averaged element gradient.
    """
    gradient = element_gradient(mesh, state.u)
    force = _axial_stiffness_at_gauss(mesh, props, state.phi, area).mean(axis=1) * gradient

    nodal_force = np.empty(mesh.n_nodes)
    averaged = np.empty(mesh.n_nodes)
    for nodal, element in ((nodal_force, force), (averaged, gradient)):
        nodal[0] = element[0]
        nodal[-1] = element[-1]
        nodal[1:-1] = 0.5 * (element[:-1] + element[1:])

    section = (1.0 - state.phi) ** 2 * props.young_modulus * area_at_nodes(mesh, area)
    return np.divide(nodal_force, section, out=averaged, where=section > 0.0)


def update_history(state: FieldState, props: MaterialProperties) -> FloatArray:
    """Running maximum of Y eps^2 at the nodes."""
    return np.maximum(state.history, props.young_modulus * state.strain**2)


def solve_damage(
    mesh: Mesh, props: MaterialProperties, state: FieldState, area: AreaProfile
) -> FloatArray:
    """Phase-field damage from the history and fatigue fields; zero-flux ends, no healing.

    Diffusion uses the consistent Gauss-point stiffness. The reaction and
    source terms are integrated with nodal quadrature, so each node sees the
    history, fatigue and section of its own position.
    """
    g_c = props.fracture_energy
    gamma = props.damage_layer_width

    k_diag, k_off = assemble_stiffness(mesh, gamma * g_c * area_at_gauss(mesh, area))
    measure = area_at_nodes(mesh, area) * nodal_weights(mesh)
    diag = k_diag + (state.history + g_c / gamma) * measure
    rhs = (state.history + state.fatigue / gamma) * measure

    phi = solve_spd(diag, k_off, rhs, field="damage")
    return np.clip(np.maximum(phi, state.phi), 0.0, 1.0)


def fatigue_rate(props: MaterialProperties, state: FieldState) -> FloatArray:
    """rho a (1 - phi) Y |eps| phi (theta / theta0) / gamma at the nodes, in N/(m yr)."""
    return (
        props.density
        * props.aging_coeff
        * (1.0 - state.phi)
        * props.young_modulus
        * np.abs(state.strain)
        * state.phi
        * (state.theta / props.reference_temp)
        / props.damage_layer_width
    )


def step_fatigue(props: MaterialProperties, state: FieldState, dt: float) -> FloatArray:
    """Forward Euler fatigue update with the area-weighted mass lumped by nodal quadrature.

    With nodal quadrature the section and weight cancel node by node, leaving
    F + dt * rate.
    """
    # Rate is non-negative on [0, 1], so this never lowers F
    return state.fatigue + dt * np.maximum(fatigue_rate(props, state), 0.0)
