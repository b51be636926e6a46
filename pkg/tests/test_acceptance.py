"""One test per acceptance criterion. Each prints a PASS/FAIL line with the measured numbers."""

import cmath
import math
import time

import numpy as np
import pytest

from conftest import ACCEPTANCE_LINES
from pii_totals import identities
from pii_totals import parametrix as px
from pii_totals.monodromy import predicted_exp_total, predicted_total_integral
from pii_totals.pii_ode import PIIProblem, SolverConfig, integrate
from pii_totals.totals import period_averaged_total, remainder_slope


def report(n, ok, detail):
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def test_criterion_1_homogeneous_totals():
    t0 = time.perf_counter()
    errs = {}
    for k in (-0.9, -0.5, 0.25, 0.5, 0.9):
        res = period_averaged_total(PIIProblem.from_values(0, k), 150.0, 8)
        errs[k] = abs(res.averaged - 0.5 * math.log((1 + k) / (1 - k)))
    dt = time.perf_counter() - t0
    worst = max(errs.values())
    report(1, worst <= 2e-3 and dt <= 60, f"max |avg - pred| = {worst:.2e} (tol 2e-3), runtime {dt:.1f}s (limit 60s)")


def test_criterion_2_real_family_totals():
    t0 = time.perf_counter()
    cases = [(0.25, 0.35), (-0.25, 0.35), (0.4, 0.5 * math.cos(0.4 * math.pi)), (0.1, -0.6)]
    worst = 0.0
    for a, k in cases:
        res = period_averaged_total(PIIProblem.from_values(a, k), 150.0, 8)
        worst = max(worst, abs(res.averaged - predicted_total_integral(a, k)))
    dt = time.perf_counter() - t0
    report(2, worst <= 2e-3 and dt <= 90, f"max |avg - pred| = {worst:.2e} (tol 2e-3), runtime {dt:.1f}s (limit 90s)")


def test_criterion_3_imaginary_family_totals():
    worst, worst_mod = 0.0, 0.0
    for a, k in [(0.3j, 0.4j), (0.1j, -0.7j), (0, 0.5j)]:
        e = cmath.exp(period_averaged_total(PIIProblem.from_values(a, k), 150.0, 8).averaged)
        worst = max(worst, abs(e - predicted_exp_total(a, k)))
        worst_mod = max(worst_mod, abs(abs(e) - 1))
    report(3, worst <= 2e-3 and worst_mod <= 1e-3, f"max |exp(avg) - pred| = {worst:.2e} (tol 2e-3), max ||exp(avg)| - 1| = {worst_mod:.2e} (tol 1e-3)")


def test_criterion_4_remainder_slope():
    s = remainder_slope(PIIProblem.from_values(0, 0.5), np.geomspace(40, 400, 9))
    report(4, -0.9 <= s <= -0.6, f"envelope slope = {s:.4f} (window [-0.90, -0.60])")


def test_criterion_5_identity_suite():
    t0 = time.perf_counter()
    reps = identities.full_suite("default")
    dt = time.perf_counter() - t0
    bad = [f"{r.name}={r.max_residual:.1e}" for r in reps if not r.passed]
    worst = max(reps, key=lambda r: r.max_residual / r.tolerance)
    detail = f"{len(reps) - len(bad)}/{len(reps)} identities pass, tightest {worst.name} at {worst.max_residual:.1e}/{worst.tolerance:.0e}, runtime {dt:.1f}s (limit 5s)"
    if bad:
        detail += f", failing: {', '.join(bad)}"
    report(5, not bad and dt <= 5, detail)


RealGrid = [(0.25, 0.4 * math.cos(0.25 * math.pi)), (0.25, -0.4 * math.cos(0.25 * math.pi)),
            (-0.25, 0.4 * math.cos(0.25 * math.pi)), (-0.25, -0.4 * math.cos(0.25 * math.pi)),
            (0.4, 0.5 * math.cos(0.4 * math.pi))]


def _ode_residual(traj, alpha, xs):
    worst = 0.0
    for x in xs:
        # central difference of the dense u', one Richardson level
        d1 = lambda h: (traj.derivative(x + h) - traj.derivative(x - h)) / (2 * h)
        upp = (4 * d1(1e-3) - d1(2e-3)) / 3
        u = traj(x)
        worst = max(worst, abs(upp - (x * u + 2 * u**3 - alpha)))
    return worst


def test_criterion_6_solver_self_consistency():
    spread = 0.0
    for a, k in [(0.25, 0.35), (0, 0.5), (0.4, 0.5 * math.cos(0.4 * math.pi))]:
        p = PIIProblem.from_values(a, k)
        u0 = [integrate(p, -1.0, SolverConfig(anchor_L=L))(0.0) for L in (10, 12, 14)]
        spread = max(spread, max(abs(u - u0[1]) for u in u0))
    imag, resid = 0.0, 0.0
    for a, k in RealGrid:
        traj = integrate(PIIProblem.from_values(a, k), -200.0)  # raises on blow-up
        imag = max(imag, traj.max_abs_imag)
        resid = max(resid, _ode_residual(traj, a, np.linspace(-199, 11, 15)))
    ok = spread <= 1e-8 and imag <= 1e-9 and resid <= 1e-6
    report(6, ok, f"u(0) spread over L in {{10,12,14}} = {spread:.1e} (tol 1e-8), max |Im u| = {imag:.1e} (tol 1e-9), ODE residual = {resid:.1e} (tol 1e-6), no blow-up on [-200, L]")


def test_criterion_7_parametrix_asymptotics():
    radii = np.geomspace(10, 40, 7)
    slopes = {}
    for a in (0, 0.25, 0.2j):
        for k in px.SECTORS:
            bis = px.sector_window(k).lo + math.pi
            r = [px.large_z_expansion_residual(k, t * cmath.exp(1j * bis), a) for t in radii]
            slopes[(a, k)] = np.polyfit(np.log(radii), np.log(r), 1)[0]
    bad = {key: s for key, s in slopes.items() if abs(s + 2) > 0.3}
    summary = ", ".join(f"alpha={a} k={k}: {s:.2f}" for (a, k), s in slopes.items())
    report(7, not bad, f"slopes (target -2 +- 0.3): {summary}")
