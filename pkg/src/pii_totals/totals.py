"""Symmetric total integrals ``lim int_{-X}^{X} u`` and their acceleration.

The truncated integral ``F(X)`` carries an oscillating remainder of size
``X^{-3/4}`` with phase close to ``(2/3) X^{3/2}``. Averaging ``F`` over one
period of that phase removes the oscillation to higher order.
"""

from __future__ import annotations

import cmath
import enum
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import matrix2 as m2
from .errors import DomainError, ResolutionError
from .monodromy import ASParameters, Family, predicted_exp_total, predicted_total_integral
from .pii_ode import PIIProblem, SolverConfig, Trajectory, integrate

__all__ = [
    "Method",
    "IntegralResult",
    "SweepRow",
    "SweepReport",
    "symmetric_integral",
    "averaging_points",
    "predicted_value",
    "raw_total",
    "period_averaged_total",
    "tail_fit_total",
    "envelope",
    "remainder_slope",
    "exp_extraction_residual",
    "sweep",
]


class Method(enum.Enum):
    RawTruncation = "RawTruncation"
    PeriodAveraged = "PeriodAveraged"
    TailFit = "TailFit"


@dataclass(frozen=True)
class IntegralResult:
    X: float
    raw: complex
    averaged: complex
    predicted: complex | None
    abs_error: float | None
    method: Method
    samples: tuple = field(default=(), repr=False)

    @property
    def exp_averaged(self) -> complex:
        return cmath.exp(self.averaged)


def symmetric_integral(traj: Trajectory, X: float) -> complex:
    """``int_{-X}^{X} u`` from the trajectory (plus its asymptotic tail past ``L``)."""
    return traj.integral(-float(X), float(X))


def averaging_points(X_base: float, n: int) -> np.ndarray:
    """Truncations where ``(2/3) X^{3/2}`` advances by ``2 pi j / n`` past ``X_base``."""
    j = np.arange(n)
    return (1.5 * (2.0 / 3.0 * X_base**1.5 + 2 * math.pi * j / n)) ** (2.0 / 3.0)


def predicted_value(params: ASParameters) -> complex:
    """Closed-form total; for the imaginary family the principal log of its exponential."""
    if params.family is Family.RealAS:
        return predicted_total_integral(params.alpha, params.k)
    if params.family is Family.ImaginaryAS:
        return cmath.log(predicted_exp_total(params.alpha, params.k))
    raise DomainError(f"no prediction for family {params.family.value}")


def _error(value: complex, predicted: complex, family: Family) -> float:
    if family is Family.ImaginaryAS:
        # the exponential form fixes the total only modulo 2 pi i
        shift = round((value - predicted).imag / (2 * math.pi))
        predicted = predicted + 2j * math.pi * shift
    return abs(value - predicted)


def _trajectory(problem: PIIProblem, X_max: float, cfg: SolverConfig) -> Trajectory:
    return integrate(problem, -X_max - 1.0, cfg)


def raw_total(problem: PIIProblem, X: float, cfg: SolverConfig = SolverConfig(), traj: Trajectory | None = None) -> IntegralResult:
    traj = traj or _trajectory(problem, X, cfg)
    F = symmetric_integral(traj, X)
    pred = predicted_value(problem.params)
    return IntegralResult(X, F, F, pred, _error(F, pred, problem.params.family), Method.RawTruncation, (F,))


def period_averaged_total(
    problem: PIIProblem,
    X_base: float = 150.0,
    n_samples: int = 8,
    cfg: SolverConfig = SolverConfig(),
    traj: Trajectory | None = None,
) -> IntegralResult:
    """Mean of ``F(X_j)`` over one period of the leading phase beyond ``X_base``."""
    if X_base < 40:
        raise ValueError("X_base must be at least 40")
    if n_samples < 4:
        raise ValueError("n_samples must be at least 4")
    Xs = averaging_points(X_base, n_samples)
    traj = traj or _trajectory(problem, float(Xs[-1]), cfg)
    Fs = tuple(symmetric_integral(traj, X) for X in Xs)
    avg = complex(np.mean(Fs))
    pred = predicted_value(problem.params)
    return IntegralResult(float(X_base), Fs[0], avg, pred, _error(avg, pred, problem.params.family), Method.PeriodAveraged, Fs)


def tail_fit_total(
    problem: PIIProblem,
    X_base: float = 150.0,
    n_samples: int = 16,
    periods: int = 2,
    cfg: SolverConfig = SolverConfig(),
    traj: Trajectory | None = None,
) -> IntegralResult:
    """Least-squares fit ``F = T + X^{-3/4}(A sin psi + B cos psi)``, ``psi = (2/3) X^{3/2}``."""
    n = n_samples * periods
    j = np.arange(n)
    Xs = (1.5 * (2.0 / 3.0 * X_base**1.5 + 2 * math.pi * j / n_samples)) ** (2.0 / 3.0)
    traj = traj or _trajectory(problem, float(Xs[-1]), cfg)
    Fs = np.array([symmetric_integral(traj, X) for X in Xs])
    psi = 2.0 / 3.0 * Xs**1.5
    amp = Xs**-0.75
    A = np.column_stack([np.ones(n), amp * np.sin(psi), amp * np.cos(psi)])
    coef, *_ = np.linalg.lstsq(A.astype(complex), Fs, rcond=None)
    T = complex(coef[0])
    pred = predicted_value(problem.params)
    return IntegralResult(float(X_base), complex(Fs[0]), T, pred, _error(T, pred, problem.params.family), Method.TailFit, tuple(Fs))


def envelope(traj: Trajectory, X: float, target: complex, points_per_period: int = 64) -> float:
    """Largest ``|F(Y) - target|`` for ``Y`` over one oscillation period starting at ``X``."""
    period = 2 * math.pi / math.sqrt(X)
    Ys = X + period * np.arange(points_per_period + 1) / points_per_period
    return max(abs(symmetric_integral(traj, Y) - target) for Y in Ys)


def remainder_slope(problem: PIIProblem, X_list, cfg: SolverConfig = SolverConfig()) -> float:
    """Log-log slope of the remainder envelope ``|F(X) - T|`` over ``X_list``."""
    Xs = np.sort(np.asarray(X_list, float))
    if len(Xs) < 5 or Xs[-1] < 10 * Xs[0]:
        raise ResolutionError("need at least 5 truncations spanning a decade")
    if problem.k == 0:
        raise ResolutionError("k = 0 has no oscillating remainder to fit")
    T = predicted_value(problem.params)
    traj = _trajectory(problem, float(Xs[-1]) + 2 * math.pi / math.sqrt(Xs[-1]), cfg)
    env = np.array([envelope(traj, X, T) for X in Xs])
    if np.any(env <= 1e-14):
        raise ResolutionError("remainder is below resolution")
    return float(np.polyfit(np.log(Xs), np.log(env), 1)[0])


def exp_extraction_residual(value: complex) -> float:
    """``|e^v - ([T]_11 + i [T]_21)|`` with ``T = exp(-v sigma2)``."""
    T = m2.transport_matrix(value)
    return abs(cmath.exp(value) - (T[0, 0] + 1j * T[1, 0]))


# --------------------------------------------------------------------------
# sweeps


@dataclass(frozen=True)
class SweepRow:
    alpha: complex
    k: complex
    predicted: complex | None
    averaged: complex | None
    abs_error: float | None
    X: float
    wall_time: float
    error: str | None = None


@dataclass(frozen=True)
class SweepReport:
    rows: tuple[SweepRow, ...]

    def passed(self, tol: float) -> bool:
        return all(r.error is None and r.abs_error is not None and r.abs_error <= tol for r in self.rows)


def _sweep_cell(args) -> SweepRow:
    alpha, k, X_base, n_samples, cfg = args
    t0 = time.perf_counter()
    try:
        res = period_averaged_total(PIIProblem.from_values(alpha, k), X_base, n_samples, cfg)
    except Exception as exc:  # reported per cell
        return SweepRow(alpha, k, None, None, None, X_base, time.perf_counter() - t0, f"{type(exc).__name__}: {exc}")
    return SweepRow(alpha, k, res.predicted, res.averaged, res.abs_error, X_base, time.perf_counter() - t0)


def sweep(cells, X_base: float = 150.0, n_samples: int = 8, cfg: SolverConfig = SolverConfig(), jobs: int = 1) -> SweepReport:
    """Period-averaged totals over ``cells = [(alpha, k), ...]``, ``jobs`` at a time."""
    cells = [(complex(a), complex(k)) for a, k in cells]
    for a, k in cells:
        fam = ASParameters(a, k).family
        if fam not in (Family.RealAS, Family.ImaginaryAS):
            raise DomainError(f"sweep cell ({a}, {k}) classifies as {fam.value}")
    work = [(a, k, X_base, n_samples, cfg) for a, k in cells]
    if jobs <= 1 or len(work) <= 1:
        rows = [_sweep_cell(w) for w in work]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_sweep_cell, work))
    return SweepReport(tuple(rows))
