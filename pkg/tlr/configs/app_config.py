import math
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, NonNegativeFloat, PositiveFloat, PositiveInt

from tlr.domain import MaterialProperties
from tlr.environment.domain import EventWindow, ScenarioKind
from tlr.environment.presets import Region, Severity
from tlr.loading.domain import CurrentDemand
from tlr.simulation.domain import SagTemperature
from tlr.stochastic.domain import QoIKind


class _Section(BaseModel):
    model_config = ConfigDict(extra="forbid")


class AreaConfig(_Section):
    # Explicit value wins over severity, severity over the region default
    spread_depth_ratio: Optional[float] = None
    severity: Optional[Severity] = None
    span: PositiveFloat = 200.0


class CableConfig(_Section):
    ultimate_strength: PositiveFloat = 150e3
    pretension_ratio: float = Field(default=0.2, gt=0.0, lt=1.0)
    thermal_expansion: PositiveFloat = 2.3e-5
    span_factor: float = Field(default=0.6, gt=0.0, le=1.0)
    attack_angle: float = math.pi / 2.0
    # N/m; derived from density and nominal area when unset
    unit_weight: Optional[PositiveFloat] = None


class ScenarioSection(_Section):
    region: Region = Region.AMARILLO_TX
    kind: Optional[ScenarioKind] = None
    # Inline monthly rows (wind in ft/s, temperature in K) or two-column files
    wind_series: Optional[list[float]] = None
    temperature_series: Optional[list[float]] = None
    wind_file: Optional[str] = None
    temperature_file: Optional[str] = None
    wind_base_scale: PositiveFloat = 1.0
    temp_base_scale: PositiveFloat = 1.0
    current: CurrentDemand = Field(default_factory=CurrentDemand)


class SimulationSection(_Section):
    dt: PositiveFloat = 0.01
    horizon: PositiveFloat = 50.0
    theta_limit: PositiveFloat = 373.0
    phi_limit: float = Field(default=0.8, gt=0.0, le=1.0)
    n_elements: int = Field(default=1000, ge=2)
    snapshot_interval: Optional[PositiveFloat] = 5.0
    sag_temperature: SagTemperature = SagTemperature.CONDUCTOR
    fixed_point: bool = False
    fixed_point_max_iter: PositiveInt = 5
    fixed_point_tol: PositiveFloat = 1e-6


class StochasticConfig(_Section):
    # Preset name (xi_m, xi_c, xi_f1..3, xi_1..3) or YAML file; None picks the region's set
    space: Optional[str] = None
    points: int = Field(default=5, ge=1, le=100)
    spread: float = Field(default=0.1, gt=0.0, lt=1.0)
    qoi: Optional[QoIKind] = None
    samples: PositiveInt = 10000
    seed: int = 0
    batch_size: PositiveInt = 64
    field_moments: bool = True
    convergence_parameter: str = "g_c"
    convergence_points: list[PositiveInt] = Field(default_factory=lambda: [2, 3, 4, 5, 7, 10])
    convergence_samples: list[PositiveInt] = Field(default_factory=lambda: [100, 1000, 10000])
    reference_points: int = Field(default=100, ge=1, le=100)
    convergence_time: PositiveFloat = 25.0
    sweep_parameter: str = "A_sigma"
    # None sweeps the mild/moderate/severe damage levels
    sweep_values: Optional[list[float]] = None


class RunnerConfig(_Section):
    # None uses every available core
    jobs: Optional[PositiveInt] = 1
    out_dir: str = "runs"
    time_limit: NonNegativeFloat = 14400


class AppConfig(_Section):
    material: MaterialProperties = Field(default_factory=MaterialProperties)
    area: AreaConfig = Field(default_factory=AreaConfig)
    cable: CableConfig = Field(default_factory=CableConfig)
    scenario: ScenarioSection = Field(default_factory=ScenarioSection)
    # None keeps the region's default event schedule
    events: Optional[list[EventWindow]] = None
    simulation: SimulationSection = Field(default_factory=SimulationSection)
    stochastic: StochasticConfig = Field(default_factory=StochasticConfig)
    runner: RunnerConfig = Field(default_factory=RunnerConfig)
