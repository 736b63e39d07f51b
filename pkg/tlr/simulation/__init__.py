from .domain import (
    ErrorRecord,
    FailureMode,
    FailureRecord,
    FieldSnapshot,
    SagTemperature,
    SimulationConfig,
    SimulationResult,
)
from .limit_state import failure_indicator, limit_state
from .parameters import ParameterName, apply_parameters, parameter_baseline
from .runner import CoupledSimulation, run_deterministic
from .sweep import SweepRow, sweep_failure_times

__all__ = [
    "CoupledSimulation",
    "ErrorRecord",
    "FailureMode",
    "FailureRecord",
    "FieldSnapshot",
    "ParameterName",
    "SagTemperature",
    "SimulationConfig",
    "SimulationResult",
    "SweepRow",
    "apply_parameters",
    "failure_indicator",
    "limit_state",
    "parameter_baseline",
    "run_deterministic",
    "sweep_failure_times",
]
