import math

from pydantic import BaseModel, ConfigDict, Field, PositiveFloat

from tlr.constants import SECONDS_PER_YEAR


class AirProperties(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    density: PositiveFloat = 1.225
    kinematic_viscosity: PositiveFloat = 15e-6
    thermal_conductivity: PositiveFloat = 0.0295
    prandtl: PositiveFloat = 0.71
    # Used when the wind drops to zero and the forced-convection correlation breaks down
    natural_convection_floor: PositiveFloat = 2.0


class IceProperties(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    density: PositiveFloat = 917.0
    resistivity: PositiveFloat = 1e9
    thermal_conductivity: PositiveFloat = 2.39
    latent_heat: PositiveFloat = 3.36e5
    melt_duration: PositiveFloat = SECONDS_PER_YEAR / 12.0


class MaterialProperties(BaseModel):
    """Conductor, air and ice constants for an all-aluminium conductor."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    young_modulus: PositiveFloat = 69e9
    damage_layer_width: PositiveFloat = 0.02
    fracture_energy: PositiveFloat = 10e3
    density: PositiveFloat = 2700.0
    aging_coeff: PositiveFloat = 1e-10
    thermal_conductivity: PositiveFloat = 237.0
    electrical_conductivity_ref: PositiveFloat = 3.77e7
    resistivity_temp_coeff: PositiveFloat = 3.9e-3
    reference_temp: PositiveFloat = 298.15
    diameter: PositiveFloat = 0.04
    air: AirProperties = Field(default_factory=AirProperties)
    ice: IceProperties = Field(default_factory=IceProperties)

    @property
    def nominal_area(self) -> float:
        return math.pi * self.diameter**2 / 4.0
