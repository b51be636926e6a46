import cmath
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from pii_totals.errors import CoverageError, DomainError, ResolutionError
from pii_totals.monodromy import ASParameters, predicted_exp_total
from pii_totals.pii_ode import PIIProblem, integrate
from pii_totals.totals import (
    Method,
    averaging_points,
    envelope,
    exp_extraction_residual,
    period_averaged_total,
    predicted_value,
    raw_total,
    remainder_slope,
    sweep,
    symmetric_integral,
    tail_fit_total,
)

HALF_LN3 = 0.549306144334054846


@pytest.fixture(scope="module")
def traj_half():
    return integrate(PIIProblem.from_values(0, 0.5), -215.0)


@pytest.fixture(scope="module")
def traj_minus_half():
    return integrate(PIIProblem.from_values(0, -0.5), -215.0)


def test_zero_solution():
    t = integrate(PIIProblem.from_values(0, 0), -50.0)
    assert symmetric_integral(t, 40) == 0


def test_antisymmetry_in_k(traj_half, traj_minus_half):
    for X in (50.0, 120.0):
        assert abs(symmetric_integral(traj_half, X) + symmetric_integral(traj_minus_half, X)) <= 1e-6


def test_raw_at_100(traj_half):
    res = raw_total(PIIProblem.from_values(0, 0.5), 100.0, traj=traj_half)
    assert res.method is Method.RawTruncation
    assert abs(res.raw - HALF_LN3) <= 0.05


def test_coverage(traj_half):
    with pytest.raises(CoverageError):
        symmetric_integral(traj_half, 300.0)


def test_averaging_points_advance_phase():
    Xs = averaging_points(150, 8)
    psi = 2 / 3 * Xs**1.5
    assert Xs[0] == pytest.approx(150)
    assert np.allclose(np.diff(psi), 2 * math.pi / 8)


def test_averaged_homogeneous(traj_half):
    res = period_averaged_total(PIIProblem.from_values(0, 0.5), 100.0, 8, traj=traj_half)
    assert res.method is Method.PeriodAveraged
    assert len(res.samples) == 8
    assert abs(res.averaged - HALF_LN3) <= 1e-3
    assert res.abs_error == pytest.approx(abs(res.averaged - res.predicted))


def test_averaged_real_family_case():
    res = period_averaged_total(PIIProblem.from_values(0.25, 0.35), 100.0, 8)
    assert res.abs_error <= 2e-3


def test_averaged_imaginary_case():
    p = PIIProblem.from_values(0.3j, 0.4j)
    res = period_averaged_total(p, 100.0, 8)
    e = cmath.exp(res.averaged)
    assert abs(e - predicted_exp_total(0.3j, 0.4j)) <= 2e-3
    assert abs(abs(e) - 1) <= 1e-3
    assert abs(res.averaged.real) <= 1e-6


def test_averaging_preconditions():
    p = PIIProblem.from_values(0, 0.5)
    with pytest.raises(ValueError):
        period_averaged_total(p, 30.0)
    with pytest.raises(ValueError):
        period_averaged_total(p, 100.0, 3)


def test_methods_agree(traj_half):
    p = PIIProblem.from_values(0, 0.5)
    a = period_averaged_total(p, 150.0, traj=traj_half)
    b = tail_fit_total(p, 150.0, traj=traj_half)
    assert b.method is Method.TailFit
    assert abs(a.averaged - b.averaged) <= 3e-3


def test_envelope_decreases(traj_half):
    env = [envelope(traj_half, X, HALF_LN3) for X in (50, 100, 150, 200)]
    assert all(b < a for a, b in zip(env, env[1:]))


def test_remainder_slope_homogeneous():
    s = remainder_slope(PIIProblem.from_values(0, 0.5), np.geomspace(40, 400, 7))
    assert -0.9 <= s <= -0.6


def test_remainder_slope_errors():
    p = PIIProblem.from_values(0, 0.5)
    with pytest.raises(ResolutionError):
        remainder_slope(p, [40, 50, 60, 70])
    with pytest.raises(ResolutionError):
        remainder_slope(p, [40, 50, 60, 70, 80])
    with pytest.raises(ResolutionError):
        remainder_slope(PIIProblem.from_values(0, 0), np.geomspace(40, 400, 6))


def test_predicted_value_forms():
    assert predicted_value(ASParameters(0, 0.5)) == pytest.approx(HALF_LN3)
    v = predicted_value(ASParameters(0.3j, 0.4j))
    assert v.real == pytest.approx(0, abs=1e-15)
    assert cmath.exp(v) == pytest.approx(predicted_exp_total(0.3j, 0.4j))
    with pytest.raises(DomainError):
        predicted_value(ASParameters(0, 1))


@given(st.builds(complex, st.floats(-3, 3), st.floats(-3, 3)))
def test_exp_extraction_identity(v):
    assert exp_extraction_residual(v) <= 1e-12 * max(1, abs(cmath.exp(v)))


def test_sweep_rejects_bad_cells():
    with pytest.raises(DomainError):
        sweep([(0, 1)])


def test_sweep_rows():
    rep = sweep([(0, 0.5), (0.25, 0.35)], X_base=100.0, jobs=2)
    assert len(rep.rows) == 2
    assert rep.passed(2e-3)
    assert not rep.passed(1e-12)
    assert [r.alpha for r in rep.rows] == [0, 0.25]
