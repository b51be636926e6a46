import cmath
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from pii_totals import matrix2 as m2
from pii_totals.errors import BranchCutError, RangeError, SingularInputError

from helpers import assert_matrix_close as mclose

finite = st.floats(-3, 3, allow_nan=False)
cplx = st.builds(complex, finite, finite)
mats = st.lists(cplx, min_size=4, max_size=4).map(lambda v: m2.matrix(*v))


def test_identity_product():
    A = m2.matrix(1 + 2j, -3, 0.5j, 4)
    mclose(m2.mat_mul(m2.I2, A), A, 0)


def test_pauli_product():
    mclose(m2.mat_mul(m2.SIGMA1, m2.SIGMA2), 1j * np.asarray(m2.SIGMA3), 0)


def test_integer_product():
    mclose(m2.mat_mul(m2.matrix(1, 2, 3, 4), m2.matrix(5, 6, 7, 8)), m2.matrix(19, 22, 43, 50), 0)


def test_results_are_read_only():
    A = m2.mat_mul(m2.SIGMA1, m2.SIGMA3)
    with pytest.raises(ValueError):
        A[0, 0] = 1


@given(mats, mats)
def test_submultiplicative(a, b):
    assert m2.frobenius(m2.mat_mul(a, b)) <= m2.frobenius(a) * m2.frobenius(b) * (1 + 1e-12) + 1e-300


def test_sigma3_exp_values():
    mclose(m2.sigma3_exp(0), m2.I2, 0)
    mclose(m2.sigma3_exp(1j * math.pi / 4), m2.diag(cmath.exp(1j * math.pi / 4), cmath.exp(-1j * math.pi / 4)), 1e-16)


@given(st.builds(complex, st.floats(-50, 50), st.floats(-50, 50)))
def test_sigma3_exp_unimodular(c):
    assert abs(m2.det(m2.sigma3_exp(c)) - 1) <= 1e-14


def test_sigma3_exp_overflow():
    with pytest.raises(RangeError):
        m2.sigma3_exp(1000)


def test_branched_power_windows():
    a = 0.3 + 0.1j
    assert m2.branched_power(1, a, m2.UPPER) == pytest.approx(1)
    assert m2.branched_power(-1, a, m2.UPPER) == pytest.approx(cmath.exp(1j * math.pi * a), abs=1e-15)
    assert m2.branched_power(-1, a, m2.LOWER) == pytest.approx(cmath.exp(-1j * math.pi * a), abs=1e-15)


def test_branched_power_boundary_rejected():
    with pytest.raises(BranchCutError):
        m2.branched_power(-1, 0.5, m2.PRINCIPAL)
    with pytest.raises(BranchCutError):
        m2.branched_power(-1j, 0.5, m2.UPPER)
    # just inside the tolerance band is still rejected
    with pytest.raises(BranchCutError):
        m2.branched_power(cmath.exp(1j * (math.pi - 1e-13)), 0.5, m2.PRINCIPAL)


def test_branched_power_at_zero():
    assert m2.branched_power(0, 0.5, m2.PRINCIPAL) == 0
    with pytest.raises(SingularInputError):
        m2.branched_power(0, -0.5, m2.PRINCIPAL)
    with pytest.raises(SingularInputError):
        m2.branched_power(0, 0, m2.PRINCIPAL)


@given(st.floats(0.1, 5), st.floats(-3.1, 3.1))
def test_branched_power_continuous_off_cut(r, t):
    z = r * cmath.exp(1j * t)
    dz = 1e-7 * z
    a = 0.37 - 0.2j
    d = abs(m2.branched_power(z + dz, a, m2.PRINCIPAL) - m2.branched_power(z, a, m2.PRINCIPAL))
    assert d <= 1e-5 * (1 + abs(m2.branched_power(z, a, m2.PRINCIPAL)))


def test_sigma3_power():
    mclose(m2.sigma3_power(1, 0.3, m2.PRINCIPAL), m2.I2, 0)
    mclose(m2.sigma3_power(1j, 0.5, m2.PRINCIPAL), m2.diag(cmath.exp(1j * math.pi / 4), cmath.exp(-1j * math.pi / 4)), 1e-15)


@given(st.floats(0.1, 10), st.floats(-1.5, 4.6), cplx)
def test_sigma3_power_inverse_and_det(r, t, a):
    z = r * cmath.exp(1j * t)
    w = m2.UPPER
    try:
        P = m2.sigma3_power(z, a, w)
    except BranchCutError:
        return
    mclose(m2.mat_mul(P, m2.sigma3_power(z, -a, w)), m2.I2, 1e-12 * m2.frobenius(P) ** 2)
    assert abs(m2.det(P) - 1) <= 1e-14 * m2.frobenius(P) ** 2


def test_transport_matrix_ln3():
    mclose(m2.transport_matrix(math.log(3)), m2.matrix(5 / 3, 4j / 3, -4j / 3, 5 / 3), 1e-15)
    mclose(m2.transport_matrix(0), m2.I2, 0)


@given(cplx)
def test_transport_extraction_and_inverse(v):
    T = m2.transport_matrix(v)
    assert abs(T[0, 0] + 1j * T[1, 0] - cmath.exp(v)) <= 1e-13 * (1 + abs(cmath.exp(v)))
    mclose(m2.mat_mul(T, m2.transport_matrix(-v)), m2.I2, 1e-13 * (1 + m2.frobenius(T) ** 2))


def test_transport_overflow():
    with pytest.raises(RangeError):
        m2.transport_matrix(800)


def test_inverse():
    A = m2.matrix(2, 1j, -1, 3)
    mclose(m2.mat_mul(A, m2.inv(A)), m2.I2, 1e-15)
    with pytest.raises(SingularInputError):
        m2.inv(m2.matrix(1, 2, 2, 4))
