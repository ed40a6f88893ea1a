import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from _helpers import interior_pairs, interior_points
from diamondflow.errors import NonpositiveAcceleration, OutOfRange, OutOfRegion
from diamondflow.flow import diamond_flow, proper_acceleration
from diamondflow.geometry import (
    DiamondSpec,
    NullRadialCoords,
    null_from_centered,
)
from diamondflow.thermo import (
    FourMomentum,
    acceleration_at,
    agreement_window,
    beta_field,
    diamond_temperature,
    radius_along_flow,
    relative_entropy,
    temperature_ratio,
    wedge_temperature,
)

UNIT = DiamondSpec(1.0, 0.0)
TWO_PI = 2.0 * math.pi


# ------------------------------------------------------------------ beta field

def test_beta_center():
    assert beta_field(NullRadialCoords(0.0, 0.0), UNIT) == (0.5, 0.5)


def test_beta_boundary_zero():
    bp, bm = beta_field(NullRadialCoords(1.0, 0.0), UNIT)
    assert bp == 0.0
    assert bm == 0.5


def test_beta_scaled_example():
    d = DiamondSpec(2.0, 0.0)
    bp, bm = beta_field(NullRadialCoords(1.0, -1.0), d)
    assert bp == 0.75
    assert bm == 0.75


def test_beta_outside_rejected():
    with pytest.raises(OutOfRegion):
        beta_field(NullRadialCoords(1.5, 0.0), UNIT)


def test_beta_translated():
    # beta evaluates in centered coordinates u_pm = z_pm -+ L1.
    d = DiamondSpec(1.0, 2.0)
    bp, bm = beta_field(NullRadialCoords(2.0, -2.0, (1.0, 0.0, 0.0)), d)
    assert bp == 0.5
    assert bm == 0.5


# ----------------------------------------------------------- wedge temperature

def test_wedge_temperature_values():
    assert wedge_temperature(TWO_PI) == 1.0
    assert abs(wedge_temperature(1.0) - 0.15915494309189535) < 1e-16
    assert wedge_temperature(0.5) == 0.5 / TWO_PI


def test_wedge_temperature_rejects():
    with pytest.raises(NonpositiveAcceleration):
        wedge_temperature(0.0)
    with pytest.raises(NonpositiveAcceleration):
        wedge_temperature(-1.0)
    with pytest.raises(NonpositiveAcceleration):
        wedge_temperature(math.inf)


# --------------------------------------------------------- diamond temperature

def test_temperature_center():
    sample = diamond_temperature(NullRadialCoords(0.0, 0.0), UNIT)
    assert abs(sample.temperature - 1.0 / math.pi) < 1e-15
    assert sample.acceleration == 0.0
    assert sample.beta_null == (0.5, 0.5)
    assert sample.beta_norm == 0.5


def test_temperature_center_scaling():
    for L in (1.0, 10.0, 1e3):
        d = DiamondSpec(L, 0.0)
        sample = diamond_temperature(NullRadialCoords(0.0, 0.0), d)
        want = 1.0 / (math.pi * L)
        assert abs(sample.temperature - want) < 1e-12 * want


def test_temperature_boundary_divergence_rate():
    # T ~ eps^(-1/2) toward the null face
    vals = []
    for eps in (1e-2, 1e-4, 1e-6):
        z = NullRadialCoords(1.0 - eps, 0.0)
        vals.append(diamond_temperature(z, UNIT).temperature * math.sqrt(eps))
    assert abs(vals[0] - vals[1]) / vals[1] < 0.02
    assert abs(vals[1] - vals[2]) / vals[2] < 0.001


def test_temperature_definitional_chain():
    rng = np.random.default_rng(31)
    for z in interior_points(rng, 200, UNIT, cap=0.95):
        s = diamond_temperature(z, UNIT)
        assert s.beta_norm == pytest.approx(math.sqrt(s.beta_null[0] * s.beta_null[1]), rel=1e-12)
        assert s.temperature == pytest.approx(1.0 / (TWO_PI * s.beta_norm), rel=1e-12)
        assert s.acceleration == pytest.approx(acceleration_at(z, UNIT), rel=1e-12, abs=1e-300)


def test_temperature_closed_form():
    # T = L / (pi sqrt((L^2-u+^2)(L^2-u-^2)))
    rng = np.random.default_rng(33)
    L, L1 = 1.7, 0.6
    d = DiamondSpec(L, L1)
    for up, um in interior_pairs(rng, 100, L):
        z = null_from_centered(up, um, (1.0, 0.0, 0.0), d)
        T = diamond_temperature(z, d).temperature
        want = L / (math.pi * math.sqrt((L * L - up * up) * (L * L - um * um)))
        assert abs(T - want) < 1e-12 * want


def test_tangency_with_flow():
    # (beta+, beta-) is the t=0 derivative of the flow in null coordinates.
    rng = np.random.default_rng(37)
    h = 1e-5
    for z in interior_points(rng, 200, UNIT):
        bp, bm = beta_field(z, UNIT)
        fwd = diamond_flow(z, h, UNIT)
        bwd = diamond_flow(z, -h, UNIT)
        dp = (fwd.z_plus - bwd.z_plus) / (2 * h)
        dm = (fwd.z_minus - bwd.z_minus) / (2 * h)
        assert abs(dp - bp) < 1e-6 * max(1.0, abs(bp))
        assert abs(dm - bm) < 1e-6 * max(1.0, abs(bm))


# ---------------------------------------------------------------- acceleration

def test_acceleration_example():
    assert abs(acceleration_at(NullRadialCoords(0.6, -0.6), UNIT) - 1.875) < 1e-15


def test_acceleration_center_zero():
    assert acceleration_at(NullRadialCoords(0.0, 0.0), UNIT) == 0.0


def test_acceleration_translated_coincidence():
    # For L1 = sqrt(L^2 + w^2) the orbit through (0, w) matches the wedge
    # hyperbola with proper acceleration 1/w.
    for w in (0.5, 1.0, 3.0):
        d = DiamondSpec(1.0, math.sqrt(1.0 + w * w))
        a = acceleration_at(NullRadialCoords(w, -w), d)
        assert abs(a - 1.0 / w) < 1e-12 / w


def test_acceleration_constant_along_orbit():
    z = NullRadialCoords(0.6, -0.6)
    want = 1.875
    for t in np.linspace(-3, 3, 13):
        zt = diamond_flow(z, t, UNIT)
        assert abs(acceleration_at(zt, UNIT) - want) < 1e-12


def test_numerical_acceleration_agrees():
    rng = np.random.default_rng(41)
    checked = 0
    while checked < 100:
        (up, um), = interior_pairs(rng, 1, 1.0)
        if 0.5 * (up - um) < 0.05:
            continue
        z = null_from_centered(up, um, (1.0, 0.0, 0.0), UNIT)
        a_formula = acceleration_at(z, UNIT)
        a_numeric = proper_acceleration(z, UNIT)
        assert abs(a_numeric - a_formula) < 1e-3 * a_formula
        checked += 1


def test_translation_covariance():
    rng = np.random.default_rng(43)
    L = 1.4
    centered = DiamondSpec(L, 0.0)
    for L1 in (0.9, -1.7, 4.0):
        d = DiamondSpec(L, L1)
        for up, um in interior_pairs(rng, 50, L):
            zc = null_from_centered(up, um, (1.0, 0.0, 0.0), centered)
            zs = null_from_centered(up, um, (1.0, 0.0, 0.0), d)
            a0 = acceleration_at(zc, centered)
            a1 = acceleration_at(zs, d)
            assert abs(a1 - a0) <= 1e-12 * max(1.0, a0)
            t0 = diamond_temperature(zc, centered).temperature
            t1 = diamond_temperature(zs, d).temperature
            assert abs(t1 - t0) <= 1e-12 * t0


# ----------------------------------------------------------------------- ratio

def test_ratio_basic():
    for r in (0.1, 0.5, 0.9):
        z = NullRadialCoords(r, -r)
        assert temperature_ratio(z, UNIT) == r


def test_ratio_corner_limit():
    eps = 1e-9
    z = NullRadialCoords(1.0 - eps, -(1.0 - eps))
    assert temperature_ratio(z, UNIT) == pytest.approx(1.0, abs=2 * eps)


def test_ratio_identity():
    rng = np.random.default_rng(47)
    specs = [UNIT, DiamondSpec(2.5, 0.0), DiamondSpec(1.0, 1.0), DiamondSpec(0.7, -3.0)]
    count = 0
    while count < 1000:
        d = specs[count % len(specs)]
        (up, um), = interior_pairs(rng, 1, d.size_L)
        if up == um:
            continue
        z = null_from_centered(up, um, (1.0, 0.0, 0.0), d)
        quotient = wedge_temperature(acceleration_at(z, d)) / diamond_temperature(z, d).temperature
        ratio = temperature_ratio(z, d)
        assert abs(quotient - ratio) < 1e-12
        count += 1


# ------------------------------------------------------------ radius along flow

def test_radius_along_flow_basics():
    assert radius_along_flow(0.3, 0.0, 1.0) == 0.3
    assert radius_along_flow(1.0, 5.0, 1.0) == 1.0
    assert radius_along_flow(0.0, 2.0, 1.0) == 0.0
    assert abs(radius_along_flow(0.5, 1.0, 1.0) - 0.41540) < 1e-5


def test_radius_along_flow_matches_flow():
    rng = np.random.default_rng(53)
    for _ in range(50):
        r0 = rng.uniform(0.0, 0.95)
        t = rng.uniform(-4, 4)
        z = NullRadialCoords(r0, -r0)
        zt = diamond_flow(z, t, UNIT)
        want = 0.5 * (zt.z_plus - zt.z_minus)
        assert abs(radius_along_flow(r0, t, 1.0) - want) < 1e-12


def test_radius_along_flow_validation():
    with pytest.raises(OutOfRange):
        radius_along_flow(-0.1, 0.0, 1.0)
    with pytest.raises(OutOfRange):
        radius_along_flow(1.1, 0.0, 1.0)
    with pytest.raises(OutOfRange):
        radius_along_flow(0.5, 0.0, 0.0)


@given(st.floats(min_value=0.0, max_value=1.0), st.floats(min_value=-20, max_value=20))
def test_radius_along_flow_bounded_and_even(r0, t):
    r = radius_along_flow(r0, t, 1.0)
    assert 0.0 <= r <= r0 + 1e-15
    assert r == radius_along_flow(r0, -t, 1.0)


# ------------------------------------------------------------ agreement window

def test_agreement_window_values():
    assert abs(agreement_window(0.01, 1.0, 0.01) - 2 * math.asinh(1.0)) < 1e-14
    assert abs(agreement_window(1e-4, 1.0, 0.01) - 2 * math.asinh(10.0)) < 1e-14
    assert abs(agreement_window(1e-4, 1.0, 0.01) - 5.9964) < 1e-4


def test_agreement_window_validation():
    with pytest.raises(OutOfRange):
        agreement_window(0.0, 1.0, 0.01)
    with pytest.raises(OutOfRange):
        agreement_window(2.0, 1.0, 0.01)
    with pytest.raises(OutOfRange):
        agreement_window(0.5, 1.0, 0.0)


@given(st.floats(min_value=1e-8, max_value=0.5), st.floats(min_value=1e-8, max_value=0.5))
def test_agreement_window_monotone(d1, d2):
    lo, hi = sorted((d1, d2))
    if lo == hi:
        return
    assert agreement_window(lo, 1.0, 0.01) > agreement_window(hi, 1.0, 0.01)


# ------------------------------------------------------------ relative entropy

def test_relative_entropy_center():
    E = 2.5
    val = relative_entropy(FourMomentum(E, 0, 0, 0), NullRadialCoords(0.0, 0.0), UNIT)
    assert abs(val - math.pi * E) < 1e-14
    # equals E / T at the center
    T = diamond_temperature(NullRadialCoords(0.0, 0.0), UNIT).temperature
    assert abs(val - E / T) < 1e-12


def test_relative_entropy_zero_momentum():
    assert relative_entropy(FourMomentum(0, 0, 0, 0), NullRadialCoords(0.3, -0.1), UNIT) == 0.0


def test_relative_entropy_energy_form():
    rng = np.random.default_rng(59)
    E = 1.25
    for z in interior_points(rng, 50, UNIT):
        bp, bm = beta_field(z, UNIT)
        want = TWO_PI * E * 0.5 * (bp + bm)
        got = relative_entropy(FourMomentum(E, 0, 0, 0), z, UNIT)
        assert abs(got - want) < 1e-12 * max(1.0, abs(want))


def test_relative_entropy_symmetric_equals_energy_over_T():
    E = 0.75
    for r in (0.0, 0.2, 0.6):
        z = NullRadialCoords(r, -r)
        got = relative_entropy(FourMomentum(E, 0, 0, 0), z, UNIT)
        T = diamond_temperature(z, UNIT).temperature
        assert abs(got - E / T) < 1e-12 / T


def test_relative_entropy_momentum_pairing():
    # The radial component pairs against (beta+ - beta-)/2 with a minus sign.
    z = NullRadialCoords(0.8, -0.2)
    bp, bm = beta_field(z, UNIT)
    got = relative_entropy(FourMomentum(0.0, 2.0, 0, 0), z, UNIT)
    want = -TWO_PI * 2.0 * 0.5 * (bp - bm)
    assert abs(got - want) < 1e-14
