"""Ablowitz-Segur solutions of ``u'' = x u + 2 u^3 - alpha`` on a real interval.

The solution is fixed at x = +infinity by ``u ~ alpha/x + k Ai(x)``. The computation
has three stages:

1. boundary data at ``x = L`` in extended precision (see ``_anchor``);
2. high-precision Taylor steps from ``L`` down to a handoff point (default 6),
   which keeps the tiny ``k Ai`` component intact while it is still below
   double-precision resolution;
3. an adaptive Dormand-Prince 8(5,3) integration (``scipy.integrate.DOP853``)
   from the handoff point down to ``x_min``. The state is augmented with the
   running integral of ``u``.

The imaginary family ``alpha = i a``, ``k = i k0`` is solved through ``u = i w``,
where ``w'' = x w - 2 w^3 - a`` is real.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import DOP853, OdeSolution

from . import _anchor
from .errors import BlowupError, BudgetError, CoverageError, DomainError, IntegratorError
from .monodromy import ASParameters, Family
from .specfun import airy_ai, airy_ai_prime

__all__ = [
    "PIIProblem",
    "SolverConfig",
    "Trajectory",
    "pii_rhs",
    "background",
    "as_boundary",
    "imaginary_reduction",
    "integrate",
]


@dataclass(frozen=True)
class PIIProblem:
    params: ASParameters

    def __post_init__(self):
        if self.params.family not in (Family.RealAS, Family.ImaginaryAS):
            raise DomainError(f"AS solutions are computed for the real and imaginary families, got {self.params.family.value}")

    @classmethod
    def from_values(cls, alpha: complex, k: complex) -> "PIIProblem":
        return cls(ASParameters(alpha, k))

    @property
    def alpha(self) -> complex:
        return self.params.alpha

    @property
    def k(self) -> complex:
        return self.params.k


@dataclass(frozen=True)
class SolverConfig:
    rel_tol: float = 1e-10
    abs_tol: float = 1e-12
    anchor_L: float = 12.0
    blowup_threshold: float = 1e6
    max_steps: int = 10**7
    handoff_x: float = 6.0
    mp_dps: int = _anchor.DEFAULT_DPS
    # integrate the real family in complex arithmetic so realness is a genuine diagnostic
    complex_arithmetic: bool = True

    def __post_init__(self):
        if self.anchor_L < 8:
            raise ValueError("anchor_L must be at least 8")
        if self.rel_tol <= 0 or self.abs_tol <= 0:
            raise ValueError("tolerances must be positive")
        if self.handoff_x > self.anchor_L:
            raise ValueError("handoff_x must not exceed anchor_L")
        if self.max_steps < 1:
            raise ValueError("max_steps must be positive")


def pii_rhs(x: float, u: complex, up: complex, alpha: complex) -> tuple[complex, complex]:
    """First-order form ``(u', u'') = (up, x u + 2 u^3 - alpha)``."""
    return up, x * u + 2 * u**3 - alpha


def background(alpha: complex, x: float) -> tuple[complex, complex]:
    """Two-term background ``alpha/x + (2 alpha - 2 alpha^3)/x^4`` and its derivative."""
    c = 2 * alpha - 2 * alpha**3
    return alpha / x + c / x**4, -alpha / x**2 - 4 * c / x**5


def imaginary_reduction(alpha: complex, k: complex) -> tuple[float, float]:
    """``(a, k0)`` with ``alpha = i a`` and ``k = i k0`` for the imaginary family."""
    p = ASParameters(alpha, k)
    if p.family is not Family.ImaginaryAS:
        raise DomainError(f"({alpha}, {k}) is not purely imaginary")
    return p.alpha.imag, p.k.imag


def _reduced(params: ASParameters) -> tuple[float, float, int, complex]:
    """``(a, k, sigma, unit)`` so that ``u = unit * w`` and ``w'' = x w + 2 sigma w^3 - a``."""
    if params.family is Family.RealAS:
        return params.alpha.real, params.k.real, 1, 1.0 + 0j
    if params.family is Family.ImaginaryAS:
        a, k0 = params.alpha.imag, params.k.imag
        return a, k0, -1, 1j
    raise DomainError(f"unsupported family {params.family.value}")


def as_boundary(alpha: complex, k: complex, L: float, dps: int = _anchor.DEFAULT_DPS) -> tuple[complex, complex]:
    """``(u(L), u'(L))`` of the AS solution.

    For ``alpha = 0`` this is exactly ``(k Ai(L), k Ai'(L))``. Otherwise the background
    is the median sum of its asymptotic series, and the ``k`` term is the recessive
    mode of the linearization about it.
    """
    if L < 8:
        raise DomainError("the boundary data are formed at L >= 8")
    params = ASParameters(alpha, k)
    a, kk, sigma, unit = _reduced(params)
    if a == 0:
        return unit * kk * airy_ai(L), unit * kk * airy_ai_prime(L)
    u, p = _anchor.anchor_state(a, kk, sigma, L, dps)
    return unit * complex(u), unit * complex(p)


class Trajectory:
    """Dense solution record on ``[x_min, L]``.

    ``x``, ``u``, ``up`` are the accepted sample points in ascending order. ``eval``
    and ``integral`` use the local interpolants: DOP853's dense output below the
    handoff point and the Taylor polynomials above it.
    """

    def __init__(self, *, x_min, L, unit, ode_sol, segment, reduced, dps, x_h, zero=False):
        self.x_min = float(x_min)
        self.L = float(L)
        self._unit = unit
        self._sol = ode_sol
        self._seg = segment
        self._reduced = reduced
        self._dps = dps
        self.x_handoff = float(x_h)
        self._zero = zero
        self._build_samples()

    # --- construction helpers -------------------------------------------------
    def _build_samples(self):
        xs, us, ps = [], [], []
        if self._zero:
            xs = np.linspace(self.x_min, self.L, 2)
            self.x, self.u, self.up = xs, np.zeros(2, complex), np.zeros(2, complex)
            self._seg_cum = None
            return
        if self._sol is not None:
            ts = np.asarray(self._sol.ts)
            ys = self._sol(ts)
            xs.append(ts)
            us.append(ys[0])
            ps.append(ys[1])
        seg = self._seg
        if seg is not None:
            # cumulative integral from the handoff point to each node (signed)
            powers = np.arange(seg.coeffs.shape[1])
            q = np.array([np.sum(c * h ** (powers + 1) / (powers + 1)) for c, h in zip(seg.coeffs, seg.steps)])
            cum = np.zeros(len(seg.nodes) + 1, dtype=complex)
            for j in range(len(seg.nodes) - 1, -1, -1):
                cum[j] = cum[j + 1] - q[j]
            self._seg_cum = cum
            vals = np.array([self._seg_eval(x)[:2] for x in seg.nodes])
            xs.append(seg.nodes)
            us.append(vals[:, 0])
            ps.append(vals[:, 1])
        x = np.concatenate(xs)
        order = np.argsort(x)
        x = x[order]
        keep = np.concatenate([[True], np.diff(x) > 0])
        self.x = x[keep]
        self.u = (self._unit * np.concatenate(us).astype(complex))[order][keep]
        self.up = (self._unit * np.concatenate(ps).astype(complex))[order][keep]

    def _seg_index(self, x):
        seg = self._seg
        # uniform steps descending from L: step j covers [nodes[j] + steps[j], nodes[j]]
        j = int((seg.nodes[0] - x) // -seg.steps[0])
        return min(max(j, 0), len(seg.nodes) - 1)

    def _seg_eval(self, x):
        seg = self._seg
        j = self._seg_index(x)
        s = x - seg.nodes[j]
        c = seg.coeffs[j]
        n = np.arange(len(c))
        u = np.polyval(c[::-1], s)
        p = np.polyval((c[1:] * n[1:])[::-1], s)
        integ = np.sum(c * s ** (n + 1) / (n + 1))
        return u, p, self._seg_cum[j] + integ

    def _raw(self, x):
        """``(w, w', int_{x_h}^x w)`` in the reduced variable."""
        if self._zero:
            return 0j, 0j, 0j
        if x >= self.x_handoff and self._seg is not None:
            return self._seg_eval(x)
        y = self._sol(x)
        return y[0], y[1], y[2]

    # --- public API -----------------------------------------------------------
    def _check(self, x):
        if not (self.x_min - 1e-12 <= x <= self.L + 1e-12):
            raise CoverageError(f"x = {x} is outside the trajectory range [{self.x_min}, {self.L}]")

    def eval(self, x: float) -> tuple[complex, complex]:
        """``(u(x), u'(x))`` from the dense interpolant."""
        x = float(x)
        self._check(x)
        w, wp, _ = self._raw(x)
        return complex(self._unit * w), complex(self._unit * wp)

    def __call__(self, x):
        if np.ndim(x) == 0:
            return self.eval(x)[0]
        return np.array([self.eval(xi)[0] for xi in np.asarray(x, float)])

    def derivative(self, x):
        if np.ndim(x) == 0:
            return self.eval(x)[1]
        return np.array([self.eval(xi)[1] for xi in np.asarray(x, float)])

    def antiderivative(self, x: float) -> complex:
        """``int_{x_h}^{x} u`` for ``x`` in range (``x_h`` is the handoff point)."""
        x = float(x)
        self._check(x)
        return complex(self._unit * self._raw(x)[2])

    def tail(self, X: float) -> complex:
        """``int_L^X u`` for ``X > L``, from the asymptotic form of the solution."""
        if self._zero or X <= self.L:
            return 0j
        a, kk, sigma, _ = self._reduced
        t = _anchor.tail_integral(a, sigma, self.L, X, self._dps) if a != 0 else 0j
        if kk != 0:
            w, wp = _anchor.recessive_mode(a, sigma, self.L, self._dps)
            w, wp = complex(w), complex(wp)
            # int_L^X w with w ~ w(L) exp(-(x - L) sqrt(L)) over the short decay length
            rate = -wp / w
            t += kk * w / rate * (1 - math.exp(-rate.real * (X - self.L)))
        return complex(self._unit * t)

    def integral(self, a: float, b: float) -> complex:
        """``int_a^b u``. Past ``L`` the asymptotic tail is used."""
        if a > b:
            return -self.integral(b, a)
        if a < self.x_min - 1e-12:
            raise CoverageError(f"trajectory starts at {self.x_min}, cannot integrate from {a}")
        if a > self.L:
            return self.tail(b) - self.tail(a)
        top = min(b, self.L)
        val = self.antiderivative(top) - self.antiderivative(a)
        if b > self.L:
            val += self.tail(b)
        return val

    @property
    def max_abs_imag(self) -> float:
        return float(np.max(np.abs(self.u.imag))) if len(self.u) else 0.0


def _ode_segment(a, sigma, y0, x_start, x_min, cfg: SolverConfig, dtype):
    def rhs(x, y):
        u = y[0]
        return np.array([y[1], x * u + 2 * sigma * u**3 - a, u], dtype=dtype)

    y0 = np.asarray(y0, dtype=dtype)
    # abs_tol is read relative to the handoff state: u(x_h) can be ~1e-7 when k is small
    atol = cfg.abs_tol * min(1.0, float(abs(y0[0]) + abs(y0[1])) or 1.0)
    solver = DOP853(rhs, x_start, y0, x_min, rtol=cfg.rel_tol, atol=atol)
    ts, interps = [x_start], []
    steps = 0
    while solver.status == "running":
        msg = solver.step()
        if solver.status == "failed":
            raise IntegratorError(f"DOP853 failed near x = {solver.t:.6g}: {msg}")
        steps += 1
        if abs(solver.y[0]) > cfg.blowup_threshold or not np.all(np.isfinite(solver.y)):
            raise BlowupError(solver.t, complex(solver.y[0]))
        ts.append(solver.t)
        interps.append(solver.dense_output())
        if steps >= cfg.max_steps and solver.status == "running":
            raise BudgetError(f"step budget {cfg.max_steps} exhausted at x = {solver.t:.6g}")
    return OdeSolution(ts, interps)


def integrate(problem: PIIProblem, x_min: float, cfg: SolverConfig = SolverConfig()) -> Trajectory:
    """Integrate from ``cfg.anchor_L`` down to ``x_min``."""
    L = float(cfg.anchor_L)
    if not x_min < L:
        raise ValueError("x_min must lie below the anchor point")
    a, kk, sigma, unit = _reduced(problem.params)
    common = dict(x_min=x_min, L=L, unit=unit, reduced=(a, kk, sigma, unit), dps=cfg.mp_dps)
    if a == 0 and kk == 0:
        return Trajectory(ode_sol=None, segment=None, x_h=L, zero=True, **common)

    u, p = _anchor.anchor_state(a, kk, sigma, L, cfg.mp_dps)
    x_h = max(cfg.handoff_x, x_min)
    seg = _anchor.descend(a, sigma, u, p, L, x_h, dps=cfg.mp_dps)
    if abs(seg.u_end) > cfg.blowup_threshold:
        raise BlowupError(x_h, seg.u_end)

    sol = None
    if x_min < x_h:
        real = problem.params.family is Family.ImaginaryAS or not cfg.complex_arithmetic
        dtype = float if real else complex
        y0 = [seg.u_end, seg.p_end, 0.0]
        if real:
            y0 = [v.real for v in y0]
        sol = _ode_segment(a, sigma, y0, x_h, x_min, cfg, dtype)
    return Trajectory(ode_sol=sol, segment=seg, x_h=x_h, **common)
