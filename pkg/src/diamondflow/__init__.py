"""Geometric modular flow and local temperature for wedges and causal diamonds."""

from ._kernels import active_backend, available_backends, set_backend
from .errors import (
    DegenerateDenominator,
    DiamondflowError,
    LightlikeInput,
    NonpositiveAcceleration,
    OutOfRange,
    OutOfRegion,
    SpecMismatch,
    StepOutOfRegion,
)
from .flow import (
    Trajectory,
    diamond_flow,
    generator,
    integrate_flow_rk4,
    proper_acceleration,
    proper_time_rate,
    sample_trajectory,
    wedge_flow,
)
from .geometry import (
    DiamondSpec,
    NullRadialCoords,
    SpacetimePoint,
    WedgeSpec,
    diamond_to_wedge,
    from_null,
    in_diamond,
    in_wedge,
    minkowski_square,
    ray_inversion,
    to_null,
    wedge_to_diamond,
)
from .limits import (
    DeviationReport,
    RegimeMap,
    deviation_scan,
    minkowski_limit_traj,
    regime_map,
    wedge_limit_traj,
)
from .thermo import (
    FourMomentum,
    TemperatureSample,
    acceleration_at,
    agreement_window,
    beta_field,
    diamond_temperature,
    radius_along_flow,
    relative_entropy,
    temperature_ratio,
    wedge_temperature,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "active_backend",
    "available_backends",
    "set_backend",
    "DiamondflowError",
    "LightlikeInput",
    "OutOfRegion",
    "OutOfRange",
    "DegenerateDenominator",
    "StepOutOfRegion",
    "NonpositiveAcceleration",
    "SpecMismatch",
    "SpacetimePoint",
    "NullRadialCoords",
    "WedgeSpec",
    "DiamondSpec",
    "minkowski_square",
    "to_null",
    "from_null",
    "in_wedge",
    "in_diamond",
    "ray_inversion",
    "wedge_to_diamond",
    "diamond_to_wedge",
    "Trajectory",
    "wedge_flow",
    "diamond_flow",
    "generator",
    "proper_time_rate",
    "integrate_flow_rk4",
    "sample_trajectory",
    "proper_acceleration",
    "TemperatureSample",
    "FourMomentum",
    "beta_field",
    "wedge_temperature",
    "diamond_temperature",
    "acceleration_at",
    "temperature_ratio",
    "radius_along_flow",
    "agreement_window",
    "relative_entropy",
    "DeviationReport",
    "RegimeMap",
    "minkowski_limit_traj",
    "wedge_limit_traj",
    "deviation_scan",
    "regime_map",
]
