"""Inverse-temperature field and local temperature for causal diamonds.

The flow tangent at a diamond point, written in centered null
coordinates u_pm, has components beta_pm = (L^2 - u_pm^2)/(2L).  Its
Minkowski norm ||beta|| = sqrt(beta+ beta-) sets the local directional
temperature T = 1/(2 pi ||beta||), which diverges toward the boundary
and equals 1/(pi L) at the center.  The wedge assigns T = a/(2 pi) to
the boost orbit with proper acceleration a; temperature_ratio compares
the two assignments and equals r/L with r the centered radius.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import NonpositiveAcceleration, OutOfRange, OutOfRegion
from .geometry import (
    DiamondSpec,
    NullRadialCoords,
    centered_null_pair,
    require_interior_null,
)

__all__ = [
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
]

_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class TemperatureSample:
    """Thermal data at one diamond point."""

    point: NullRadialCoords
    beta_null: tuple[float, float]
    beta_norm: float
    temperature: float
    acceleration: float


@dataclass(frozen=True)
class FourMomentum:
    """Energy-momentum vector (p0, p1, p2, p3), signature (+,-,-,-)."""

    p0: float
    p1: float
    p2: float = 0.0
    p3: float = 0.0

    def __post_init__(self):
        for name in ("p0", "p1", "p2", "p3"):
            v = float(getattr(self, name))
            if not math.isfinite(v):
                raise ValueError(f"non-finite component {name}={v!r}")
            object.__setattr__(self, name, v)


def _closure_pair(z: NullRadialCoords, d: DiamondSpec) -> tuple[float, float, tuple[float, float, float]]:
    # beta is polynomial, so it extends to the closed diamond; only the
    # quantities that divide by it need the interior margin.
    up, um, axis = centered_null_pair(z, d)
    L = d.size_L
    if abs(up) > L or abs(um) > L:
        raise OutOfRegion(f"point with |u+|={abs(up)!r}, |u-|={abs(um)!r} is outside the closed diamond")
    return up, um, axis


def beta_field(z: NullRadialCoords, d: DiamondSpec) -> tuple[float, float]:
    """Null components (beta+, beta-) = ((L^2 - u_pm^2)/(2L)) of the flow tangent.

    Defined on the closed diamond; vanishes on the corresponding null face.
    """
    up, um, _ = _closure_pair(z, d)
    L = d.size_L
    return (L * L - up * up) / (2.0 * L), (L * L - um * um) / (2.0 * L)


def wedge_temperature(acceleration: float) -> float:
    """Temperature a/(2 pi) seen on a wedge boost orbit with proper acceleration a."""
    if not (acceleration > 0.0) or not math.isfinite(acceleration):
        raise NonpositiveAcceleration(f"need a finite acceleration > 0, got {acceleration!r}")
    return acceleration / _TWO_PI


def diamond_temperature(z: NullRadialCoords, d: DiamondSpec) -> TemperatureSample:
    """Full thermal sample at a strictly interior diamond point."""
    up, um, _ = centered_null_pair(z, d)
    require_interior_null(up, um, d)
    L = d.size_L
    beta_p = (L * L - up * up) / (2.0 * L)
    beta_m = (L * L - um * um) / (2.0 * L)
    bnorm = math.sqrt(beta_p * beta_m)
    radius = 0.5 * abs(up - um)
    return TemperatureSample(
        point=z,
        beta_null=(beta_p, beta_m),
        beta_norm=bnorm,
        temperature=1.0 / (_TWO_PI * bnorm),
        acceleration=radius / (L * bnorm),
    )


def acceleration_at(z: NullRadialCoords, d: DiamondSpec) -> float:
    """Proper acceleration 2r / sqrt((L^2-u+^2)(L^2-u-^2)) of the orbit through z.

    r is the centered radius; the central orbit (r = 0) is a geodesic
    and returns 0.  Constant along each flow orbit.
    """
    up, um, _ = centered_null_pair(z, d)
    require_interior_null(up, um, d)
    radius = 0.5 * abs(up - um)
    if radius == 0.0:
        return 0.0
    L = d.size_L
    return 2.0 * radius / math.sqrt((L * L - up * up) * (L * L - um * um))


def temperature_ratio(z: NullRadialCoords, d: DiamondSpec) -> float:
    """Wedge-to-diamond temperature ratio at z; equals r/L algebraically."""
    up, um, _ = centered_null_pair(z, d)
    require_interior_null(up, um, d)
    return 0.5 * abs(up - um) / d.size_L


def radius_along_flow(r0: float, t: float, L: float) -> float:
    """Centered radius of the orbit through (r0, -r0) after parameter t.

    r(t) = r0 / ((1 - r0^2/L^2) sinh^2(t/2) + 1); even in t, fixed at
    both r0 = 0 and r0 = L.
    """
    if not L > 0.0:
        raise OutOfRange(f"L must be positive, got {L!r}")
    if not 0.0 <= r0 <= L:
        raise OutOfRange(f"r0 must lie in [0, L], got {r0!r}")
    sh = math.sinh(0.5 * t)
    v = r0 / L
    return r0 / ((1.0 - v * v) * sh * sh + 1.0)


def agreement_window(delta_r: float, L: float, tol: float) -> float:
    """Modular-parameter window 2 asinh(sqrt(tol L / delta_r)).

    For a start at distance delta_r from the diamond's agreement corner,
    the wedge approximation tracks the exact orbit to relative accuracy
    ~tol for |t| up to this value.
    """
    if not L > 0.0:
        raise OutOfRange(f"L must be positive, got {L!r}")
    if not 0.0 < delta_r < L:
        raise OutOfRange(f"delta_r must lie in (0, L), got {delta_r!r}")
    if not tol > 0.0:
        raise OutOfRange(f"tol must be positive, got {tol!r}")
    return 2.0 * math.asinh(math.sqrt(tol * L / delta_r))


def relative_entropy(p: FourMomentum, z: NullRadialCoords, d: DiamondSpec) -> float:
    """Relative-entropy pairing 2 pi P.beta for a localized excitation.

    P.beta = p0 beta^0 - vec p . vec beta with the tangent beta of the
    diamond flow at z; linear in p, zero when beta vanishes.
    """
    up, um, axis = _closure_pair(z, d)
    L = d.size_L
    beta_p = (L * L - up * up) / (2.0 * L)
    beta_m = (L * L - um * um) / (2.0 * L)
    bt = 0.5 * (beta_p + beta_m)
    bs = 0.5 * (beta_p - beta_m)
    spatial = bs * (p.p1 * axis[0] + p.p2 * axis[1] + p.p3 * axis[2])
    return _TWO_PI * (p.p0 * bt - spatial)
