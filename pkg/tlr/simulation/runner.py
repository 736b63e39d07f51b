import logging
import math
from typing import Optional

import numpy as np

from tlr.environment.domain import AmbientState
from tlr.environment.service import ambient_at
from tlr.exceptions import PhysicalDomainError, SolverError
from tlr.fem.domain import FieldState, Mesh
from tlr.fem.electrical import solve_voltage
from tlr.fem.mechanics import (
    recover_strain,
    solve_damage,
    solve_displacement,
    step_fatigue,
    update_history,
)
from tlr.fem.thermal import heat_exchange_for, solve_temperature
from tlr.loading.profiles import current_demand
from tlr.mechanics.sag import tension_at_temperature
from tlr.simulation.domain import (
    ErrorRecord,
    FailureMode,
    FailureRecord,
    FieldSnapshot,
    SagTemperature,
    SimulationConfig,
    SimulationResult,
)
from tlr.simulation.limit_state import limit_state

logger = logging.getLogger(__name__)

LOG_INTERVAL_YEARS = 5.0


class CoupledSimulation:
    """Staggered thermo-electro-mechanical time loop for one line.

    Each step solves, in order: tension, displacement, history, damage,
    fatigue, temperature, voltage. Cross-field inputs lag by one step unless
    the fixed-point mode is enabled.
    """

    def __init__(self, cfg: SimulationConfig) -> None:
        self.cfg = cfg
        self.mesh = Mesh(length=cfg.area.span, n_elements=cfg.n_elements)
        self._midspan = self.mesh.midspan_node
        self._snapshot_steps = self._marks(cfg.snapshot_interval)
        self._log_steps = self._marks(LOG_INTERVAL_YEARS)

    def _marks(self, interval: Optional[float]) -> set[int]:
        if interval is None:
            return set()
        stride = interval / self.cfg.dt
        return {
            int(round(k * stride))
            for k in range(int(math.floor(self.cfg.n_steps / stride)) + 1)
            if int(round(k * stride)) < self.cfg.n_steps
        }

    def _tension(self, state: FieldState, ambient: AmbientState) -> float:
        cfg = self.cfg
        if cfg.sag_temperature is SagTemperature.CONDUCTOR:
            temperature = float(state.theta[self._midspan])
        else:
            temperature = ambient.ambient_temp
        return tension_at_temperature(
            cfg.sag,
            cfg.wind,
            temperature - cfg.sag.reference_temp,
            ambient.wind_speed,
            ambient.ice,
            cfg.material.ice.density,
        )

    def _staggered_pass(
        self, start: FieldState, coupling: FieldState, t: float, ambient: AmbientState
    ) -> tuple[FieldState, float]:
        cfg, mesh, material, area = self.cfg, self.mesh, self.cfg.material, self.cfg.area
        work = start.copy()
        work.phi = coupling.phi.copy()
        work.theta = coupling.theta.copy()
        work.voltage = coupling.voltage.copy()

        tension = self._tension(work, ambient)
        work.u = solve_displacement(mesh, material, work, area, tension)
        work.strain = recover_strain(mesh, material, work, area)
        work.history = update_history(work, material)
        work.phi = solve_damage(mesh, material, work, area)
        work.fatigue = step_fatigue(material, work, cfg.dt)
        spec = heat_exchange_for(ambient, material)
        work.theta = solve_temperature(mesh, material, work, spec, area)
        current = float(current_demand(cfg.scenario.current, t))
        work.voltage = solve_voltage(mesh, material, work, area, current, ambient.ice)
        return work, tension

    def _step(self, start: FieldState, t: float) -> tuple[FieldState, float]:
        ambient = ambient_at(self.cfg.scenario, t)
        state, tension = self._staggered_pass(start, start, t, ambient)
        if not self.cfg.fixed_point:
            return state, tension

        for iteration in range(1, self.cfg.fixed_point_max_iter):
            previous = state
            state, tension = self._staggered_pass(start, previous, t, ambient)
            change = max(
                _relative_change(state.theta, previous.theta),
                _relative_change(state.phi, previous.phi),
            )
            if change < self.cfg.fixed_point_tol:
                logger.debug(f"Fixed point at t={t:.2f} converged after {iteration + 1} passes")
                break
        return state, tension

    def _check_failure(self, theta_max: float, phi_max: float) -> Optional[FailureMode]:
        # Temperature takes precedence when both limits are crossed in the same step
        if limit_state(theta_max, self.cfg.theta_limit) < 0:
            return FailureMode.TEMPERATURE
        if limit_state(phi_max, self.cfg.phi_limit) < 0:
            return FailureMode.DAMAGE
        return None

    def run(self) -> SimulationResult:
        cfg = self.cfg
        times = cfg.times
        theta0 = ambient_at(cfg.scenario, 0.0).ambient_temp
        state = FieldState.initial(self.mesh, theta0)

        theta_max = np.empty(cfg.n_steps)
        phi_max = np.empty(cfg.n_steps)
        v_drop = np.empty(cfg.n_steps)
        tension = np.empty(cfg.n_steps)
        phi_mid = np.empty(cfg.n_steps)
        snapshots: list[FieldSnapshot] = []
        failure: Optional[FailureRecord] = None
        error: Optional[ErrorRecord] = None
        completed = 0

        for k, t in enumerate(times):
            t = float(t)
            try:
                state, tension[k] = self._step(state, t)
            except (SolverError, PhysicalDomainError) as e:
                logger.error(f"Simulation aborted at t={t:.2f} yr: {e}")
                error = ErrorRecord(time=t, step=k, error_type=type(e).__name__, message=str(e))
                break

            theta_max[k] = state.theta.max()
            phi_max[k] = state.phi.max()
            v_drop[k] = state.voltage[-1] - state.voltage[0]
            phi_mid[k] = state.phi[self._midspan]
            completed = k + 1

            if k in self._log_steps:
                logger.debug(
                    f"t={t:.2f} yr: theta_max={theta_max[k]:.2f} K, phi_max={phi_max[k]:.4f}, "
                    f"H={tension[k]:.1f} N"
                )

            mode = self._check_failure(theta_max[k], phi_max[k])
            if mode is not None:
                failure = FailureRecord(time=t, step=k, mode=mode)
                snapshots.append(FieldSnapshot(time=t, state=state.copy()))
                logger.info(
                    f"Line failed by {mode.value} at t={t:.2f} yr "
                    f"(theta_max={theta_max[k]:.2f} K, phi_max={phi_max[k]:.4f})"
                )
                break
            if k in self._snapshot_steps:
                snapshots.append(FieldSnapshot(time=t, state=state.copy()))

        return SimulationResult(
            times=times[:completed].copy(),
            theta_max=theta_max[:completed],
            phi_max=phi_max[:completed],
            v_drop=v_drop[:completed],
            tension=tension[:completed],
            phi_midspan=phi_mid[:completed],
            n_steps=cfg.n_steps,
            failure=failure,
            error=error,
            snapshots=snapshots,
        )


def _relative_change(new: np.ndarray, old: np.ndarray) -> float:
    scale = max(float(np.linalg.norm(new)), 1e-300)
    return float(np.linalg.norm(new - old)) / scale


def run_deterministic(cfg: SimulationConfig) -> SimulationResult:
    return CoupledSimulation(cfg).run()
