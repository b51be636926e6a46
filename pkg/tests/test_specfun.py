import cmath
import math

import mpmath as mp
import numpy as np
import pytest
import scipy.special as sc
from hypothesis import given
from hypothesis import strategies as st

from pii_totals import matrix2 as m2
from pii_totals.errors import DomainError, SingularInputError, TruncationError
from pii_totals.specfun import (
    SeriesPolicy,
    airy_ai,
    airy_ai_prime,
    bessel_pair,
    gamma_complex,
    v1,
    v1_prime,
    v2,
    v2_prime,
)

# frozen from mpmath at 30 digits
AI_0 = 0.355028053887817239260063186004
AI_12 = 1.3931846888753608390490345032e-13
AIP_12 = -4.8547365549853084629936539977e-13
GAMMA_3_4I = 0.0052255384713692141947315103561 - 0.17254707929430018771913090143j
# 2^{a-1/2} Gamma(a+1/2) e^{i pi (a-1/2)/2} z^{1/2} J_{a-1/2}(e^{-i pi/2} z) at z = 1, a = 0.3
V1_BESSEL_ORACLE = 1.33485799795158351109958680166


def test_gamma_classical():
    assert gamma_complex(1) == pytest.approx(1, rel=1e-14)
    assert gamma_complex(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-14)
    assert abs(gamma_complex(3 + 4j) / GAMMA_3_4I - 1) < 1e-13


@given(st.floats(-19.5, 19.5), st.floats(-19.5, 19.5))
def test_gamma_against_scipy(x, y):
    z = complex(x, y)
    if abs(y) < 1e-3 and x < 0.5 and abs(x - round(x)) < 1e-3:
        return
    ref = sc.gamma(z)
    if not np.isfinite(ref) or ref == 0:
        return
    assert abs(gamma_complex(z) / ref - 1) <= 1e-12


@given(st.floats(-8, 8), st.floats(0.05, 8))
def test_gamma_reflection(x, y):
    z = complex(x, y)
    val = gamma_complex(z) * gamma_complex(1 - z) * cmath.sin(math.pi * z) / math.pi
    assert abs(val - 1) <= 1e-11


@given(st.floats(-10, 10), st.floats(-10, 10))
def test_gamma_recurrence(x, y):
    z = complex(x, y)
    if abs(y) < 1e-2 and x < 1:
        return
    assert abs(gamma_complex(z + 1) / (z * gamma_complex(z)) - 1) <= 1e-12


def test_gamma_pole():
    with pytest.raises(SingularInputError):
        gamma_complex(-3)
    with pytest.raises(SingularInputError):
        gamma_complex(0)


def test_airy_values():
    assert airy_ai(0) == pytest.approx(AI_0, rel=1e-14)
    assert airy_ai(12) == pytest.approx(AI_12, rel=1e-13)
    assert airy_ai_prime(12) == pytest.approx(AIP_12, rel=1e-13)


@pytest.mark.parametrize("x", np.linspace(-2, 60, 125))
def test_airy_against_scipy(x):
    ai, aip, _, _ = sc.airy(x)
    assert airy_ai(x) == pytest.approx(ai, rel=1e-11, abs=1e-300)
    assert airy_ai_prime(x) == pytest.approx(aip, rel=1e-11, abs=1e-300)


def test_airy_overlap_region():
    from pii_totals.specfun import _airy_asymptotic, _airy_maclaurin

    for x in np.linspace(6, 10, 17):
        a1, p1 = _airy_maclaurin(x)
        a2, p2 = _airy_asymptotic(x)
        assert a1 == pytest.approx(a2, rel=1e-11)
        assert p1 == pytest.approx(p2, rel=1e-11)


def _second_difference(f, x, h):
    return (f(x + h) - 2 * f(x) + f(x - h)) / h**2


@pytest.mark.parametrize("x", [1.0, 5.0, 12.0])
def test_airy_ode(x):
    # two Richardson levels on central differences remove the h^2 and h^4 errors
    h = 0.04
    d = [_second_difference(airy_ai, x, h / 2**j) for j in range(3)]
    r1 = [(4 * b - a) / 3 for a, b in zip(d[:-1], d[1:])]
    d2 = (16 * r1[1] - r1[0]) / 15
    assert abs(d2 - x * airy_ai(x)) <= 1e-10


def test_airy_leading_asymptotic():
    lead = math.exp(-2 / 3 * 10**1.5) / (2 * math.sqrt(math.pi) * 10**0.25)
    assert abs(airy_ai(10) / lead - 1) < 1e-2


def test_airy_monotone_positive():
    xs = np.linspace(0, 60, 601)
    vals = np.array([airy_ai(x) for x in xs])
    assert np.all(vals > 0)
    assert np.all(np.diff(vals) < 0)


def test_airy_domain():
    with pytest.raises(DomainError):
        airy_ai(-3)
    with pytest.raises(DomainError):
        airy_ai_prime(61)


@pytest.mark.parametrize("z", [0.5, 1 + 1j, 2j])
def test_alpha_zero_is_cosh_sinh(z):
    assert abs(v1(z, 0) - cmath.cosh(z)) < 1e-14 * (1 + abs(cmath.cosh(z)))
    assert abs(v2(z, 0) - cmath.sinh(z)) < 1e-14 * (1 + abs(cmath.sinh(z)))
    assert abs(v1_prime(z, 0) - cmath.sinh(z)) < 1e-14 * (1 + abs(cmath.sinh(z)))
    assert abs(v2_prime(z, 0) - cmath.cosh(z)) < 1e-14 * (1 + abs(cmath.cosh(z)))


def test_small_z_leading_terms():
    z = 0.1
    assert v1(z, 0.25) / z**0.25 == pytest.approx(1, abs=0.01)
    assert v2(1e-3, 0.25) / (1e-3) ** 0.75 == pytest.approx(1, abs=1e-6)


def test_v1_bessel_representation():
    assert abs(v1(1, 0.3) - V1_BESSEL_ORACLE) < 1e-14


def test_v1_against_mpmath_bessel_complex():
    # independent route through mpmath's J for complex z and complex alpha
    a, z = 0.2j, 1.5 - 0.7j
    with mp.workdps(30):
        nu = a - 0.5
        ref = 2**nu * mp.gamma(a + 0.5) * mp.exp(1j * mp.pi * nu / 2) * mp.sqrt(z) * mp.besselj(nu, mp.exp(-1j * mp.pi / 2) * z)
    assert abs(v1(z, a) - complex(ref)) < 1e-13 * abs(complex(ref))


@pytest.mark.parametrize("alpha", [0, 0.25, -0.3, 0.2j, 0.45])
@pytest.mark.parametrize("z", [0.3, 1, 2 + 1j, -1 + 0.5j, 5j])
def test_wronskian(alpha, z):
    a, ap, b, bp = bessel_pair(z, alpha)
    assert abs(a * bp - b * ap - (1 - 2 * alpha)) <= 1e-10 * (1 + abs(1 - 2 * alpha))


@pytest.mark.parametrize("alpha", [0.25, 0.2j])
def test_derivative_consistency(alpha):
    h = 1e-5
    z = 1.3 + 0.4j
    for f, fp in ((v1, v1_prime), (v2, v2_prime)):
        fd = (f(z + h, alpha) - f(z - h, alpha)) / (2 * h)
        assert abs(fd - fp(z, alpha)) < 1e-8


def test_window_selects_branch():
    z = -1 + 1e-3j
    p = v1(z, 0.25, w=m2.PRINCIPAL)
    q = v1(z, 0.25, w=m2.ArgWindow(math.pi - 1))
    # same point, same window representative -> same value
    assert abs(p - q) < 1e-15
    r = v1(z, 0.25, w=m2.ArgWindow(-3 * math.pi))  # arg shifted by -2 pi
    assert abs(r - p * cmath.exp(-2j * math.pi * 0.25)) < 1e-14


def test_truncation_error():
    with pytest.raises(TruncationError):
        bessel_pair(30, 0.1, pol=SeriesPolicy(max_terms=10))


def test_policy_validation():
    with pytest.raises(ValueError):
        SeriesPolicy(target_rel_error=0)
    with pytest.raises(ValueError):
        SeriesPolicy(max_terms=5)


def test_large_argument_accuracy():
    # cancellation-prone region: purely imaginary z with |z| = 40
    z = 40j
    with mp.workdps(60):
        ref = mp.cos(40)
    assert abs(v1(z, 0) - complex(ref)) < 1e-14
