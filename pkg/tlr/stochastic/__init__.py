from .collocation import (
    FieldMoments,
    build_ensemble,
    default_qoi,
    midspan_phi_at,
    pcm_field_moments,
    pcm_moments,
    probability_of_failure,
    sobol_first_order,
)
from .convergence import convergence_error
from .domain import (
    CollocationGrid,
    MomentSeries,
    QoIEnsemble,
    QoIKind,
    RandomParameter,
    RandomSpace,
)
from .montecarlo import MonteCarloEstimate, monte_carlo_statistics, sample_space
from .presets import (
    DEFAULT_SPACE,
    SPACE_PRESETS,
    load_space_file,
    resolve_space,
    space_around,
    space_preset,
)
from .quadrature import build_grid, gauss_legendre_rule
from .service import CollocationRun, CollocationService, ConvergenceRow, MonteCarloRun

__all__ = [
    "DEFAULT_SPACE",
    "SPACE_PRESETS",
    "CollocationGrid",
    "CollocationRun",
    "CollocationService",
    "ConvergenceRow",
    "FieldMoments",
    "MomentSeries",
    "MonteCarloEstimate",
    "MonteCarloRun",
    "QoIEnsemble",
    "QoIKind",
    "RandomParameter",
    "RandomSpace",
    "build_ensemble",
    "build_grid",
    "convergence_error",
    "default_qoi",
    "gauss_legendre_rule",
    "midspan_phi_at",
    "monte_carlo_statistics",
    "pcm_field_moments",
    "pcm_moments",
    "probability_of_failure",
    "sample_space",
    "sobol_first_order",
    "load_space_file",
    "resolve_space",
    "space_around",
    "space_preset",
]
