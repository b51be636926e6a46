"""High-precision boundary data at x = L for the decaying family.

Works with the real form ``u'' = x u + 2 sigma u^3 - a`` (``sigma = +1`` or ``-1``).

The solution decaying at +infinity is split as ``u = U + k w + O(k^2 w^2)``:

* ``U`` is the slowly decaying background ``U ~ sum_m a_m x^{-1-3m}``. That series
  diverges. Its two lateral Borel sums differ by an exponentially small multiple of
  Ai, so ``U`` is taken as their average (the median sum). Each lateral sum is
  produced by seeding the optimally truncated series far out on the ray
  ``arg x = +-pi/3``, where it is accurate to ~1e-30, and integrating the ODE in
  ``mpmath`` back to the real axis.
* ``w`` is the recessive solution of the linearization about ``U``, normalized so
  that ``w ~ Ai(x)``. It is built from an asymptotic series for ``w'/w``.

Double precision cannot separate ``k Ai(L)`` (about 1e-13 at L = 12) from the
background, which is why everything here runs in ``mpmath``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import mpmath as mp
import numpy as np

DEFAULT_DPS = 34
SEED_RADIUS = 22.0
PATH_STEP = 0.5


def _mpc(z) -> mp.mpc:
    z = complex(z)
    return mp.mpc(z.real, z.imag)


@lru_cache(maxsize=64)
def _background_coeffs(alpha: complex, sigma: int, n: int, dps: int) -> tuple:
    with mp.workdps(dps):
        a = [_mpc(alpha)]
        for m in range(n):
            c3 = mp.mpc(0)
            for i in range(m + 1):
                for j in range(m + 1 - i):
                    c3 += a[i] * a[j] * a[m - i - j]
            a.append((1 + 3 * m) * (2 + 3 * m) * a[m] - 2 * sigma * c3)
        return tuple(a)


def background_coefficients(alpha: complex, sigma: int, n: int = 60, dps: int = DEFAULT_DPS) -> tuple:
    """Coefficients ``a_m`` of ``U ~ sum a_m x^{-1-3m}`` (``a_0 = alpha``)."""
    return _background_coeffs(complex(alpha), int(sigma), int(n), int(dps))


def background_series(coeffs, x) -> tuple[mp.mpc, mp.mpc, int]:
    """Optimally truncated ``(U, U', n_terms)`` at ``x``."""
    x = mp.mpc(x)
    s, sd = mp.mpc(0), mp.mpc(0)
    prev = None
    eps = mp.mpf(10) ** (-mp.mp.dps)
    n = 0
    for m, am in enumerate(coeffs):
        t = am * x ** (-1 - 3 * m)
        if prev is not None and abs(t) > abs(prev):
            break
        s += t
        sd += -(1 + 3 * m) * am * x ** (-2 - 3 * m)
        n = m + 1
        prev = t
        if abs(t) <= eps * abs(s):
            break
    return s, sd, n


def taylor_coefficients(x0, u0, p0, h, alpha, sigma: int, max_order: int = 60) -> list:
    """Taylor coefficients of the solution about ``x0``, truncated adaptively for step ``h``."""
    c = [mp.mpc(u0), mp.mpc(p0)]
    sq, cu = [], []
    habs = abs(h)
    tol = mp.mpf(10) ** (-mp.mp.dps + 2)
    scale = abs(c[0]) + abs(c[1]) * habs + mp.mpf(10) ** (-mp.mp.dps)
    small = 0
    for n in range(max_order - 1):
        sq.append(mp.fsum(c[i] * c[n - i] for i in range(n + 1)))
        cu.append(mp.fsum(sq[i] * c[n - i] for i in range(n + 1)))
        r = x0 * c[n] + 2 * sigma * cu[n]
        if n >= 1:
            r += c[n - 1]
        else:
            r -= alpha
        c.append(r / ((n + 1) * (n + 2)))
        if abs(c[-1]) * habs ** (n + 2) < tol * scale:
            small += 1
            if small == 3:
                break
        else:
            small = 0
    return c


def _poly_eval(c, h):
    u, p = mp.mpc(0), mp.mpc(0)
    for n in range(len(c) - 1, -1, -1):
        u = u * h + c[n]
    for n in range(len(c) - 1, 0, -1):
        p = p * h + n * c[n]
    return u, p


def taylor_step(x0, u0, p0, h, alpha, sigma: int):
    c = taylor_coefficients(x0, u0, p0, h, alpha, sigma)
    u, p = _poly_eval(c, h)
    return u, p, c


def _integrate_path(points, u, p, alpha, sigma):
    for xa, xb in zip(points[:-1], points[1:]):
        u, p, _ = taylor_step(xa, u, p, xb - xa, alpha, sigma)
    return u, p


def lateral_sum(alpha, sigma: int, L: float, side: int, dps: int = DEFAULT_DPS, r0: float = SEED_RADIUS, h: float = PATH_STEP):
    """Lateral sum of the background series evaluated at real ``L``.

    ``side = +1`` integrates down the ray ``arg x = pi/3`` and ``side = -1`` down
    ``arg x = -pi/3``; both finish along the arc ``|x| = L``.
    """
    with mp.workdps(dps):
        coeffs = background_coefficients(alpha, sigma, dps=dps)
        al = _mpc(alpha)
        e = mp.expjpi(side * mp.mpf(1) / 3)
        u, p, _ = background_series(coeffs, r0 * e)
        n = int(math.ceil((r0 - L) / h))
        pts = [(r0 - (r0 - mp.mpf(L)) * j / n) * e for j in range(n + 1)]
        narc = int(math.ceil(L * math.pi / 3 / h))
        pts += [L * mp.expjpi(side * mp.mpf(1) / 3 * (1 - mp.mpf(j) / narc)) for j in range(1, narc + 1)]
        return _integrate_path(pts, u, p, al, sigma)


@lru_cache(maxsize=64)
def _median(alpha: complex, sigma: int, L: float, dps: int):
    with mp.workdps(dps):
        if alpha == 0:
            z = mp.mpc(0)
            return z, z, z
        up = lateral_sum(alpha, sigma, L, +1, dps)
        dn = lateral_sum(alpha, sigma, L, -1, dps)
        return (up[0] + dn[0]) / 2, (up[1] + dn[1]) / 2, (up[0] - dn[0]) / 2


def median_background(alpha, sigma: int, L: float, dps: int = DEFAULT_DPS):
    """``(U, U')`` at ``L`` as the average of the two lateral sums."""
    U, Up, _ = _median(complex(alpha), int(sigma), float(L), int(dps))
    return U, Up


def lateral_half_jump(alpha, sigma: int, L: float, dps: int = DEFAULT_DPS):
    """Half the difference of the two lateral sums at ``L`` (a Stokes-jump diagnostic)."""
    return _median(complex(alpha), int(sigma), float(L), int(dps))[2]


@lru_cache(maxsize=64)
def _recessive(alpha: complex, sigma: int, L: float, dps: int, n: int = 60):
    with mp.workdps(dps):
        a = background_coefficients(alpha, sigma, n, dps)
        V = [mp.mpc(0)] * (2 * n + 4)
        for m in range(n // 2 + 1):
            V[2 * m] = a[m]
        V2 = [mp.fsum(V[i] * V[j - i] for i in range(j + 1)) for j in range(n + 2)]
        R = [mp.mpc(0), mp.mpc(0)] + [6 * sigma * V2[j] for j in range(n)]
        b = [mp.mpc(-1)]
        for m in range(1, n):
            s = R[m] - b[m - 1] * (mp.mpf(1) / 2 - mp.mpf(3) / 2 * (m - 1)) - mp.fsum(b[j] * b[m - j] for j in range(1, m))
            b.append(-s / 2)
        Lm = mp.mpf(L)
        t = Lm ** (-mp.mpf(3) / 2)
        Y = mp.mpc(0)
        lnw = -mp.mpf(2) / 3 * Lm ** (mp.mpf(3) / 2) - mp.log(Lm) / 4 - mp.log(2 * mp.sqrt(mp.pi))
        prev = None
        for m, bm in enumerate(b):
            term = bm * t**m
            if prev is not None and m > 3 and abs(term) > abs(prev):
                break
            Y += term
            if m >= 2:
                lnw += -mp.mpf(2) / 3 * bm * t ** (m - 1) / (m - 1)
            prev = term
        w = mp.exp(lnw)
        return w, mp.sqrt(Lm) * Y * w


def recessive_mode(alpha, sigma: int, L: float, dps: int = DEFAULT_DPS):
    """``(w, w')`` at ``L`` for the recessive linearized solution, ``w ~ Ai``."""
    return _recessive(complex(alpha), int(sigma), float(L), int(dps))


def anchor_state(alpha, k, sigma: int, L: float, dps: int = DEFAULT_DPS):
    """``(u, u')`` at ``L`` in ``mpmath`` precision."""
    with mp.workdps(dps):
        U, Up = median_background(alpha, sigma, L, dps)
        w, wp = recessive_mode(alpha, sigma, L, dps)
        kk = _mpc(k)
        return U + kk * w, Up + kk * wp


@dataclass(frozen=True)
class TaylorSegment:
    """Piecewise Taylor representation of the solution on ``[x_end, L]``.

    Step ``j`` starts at ``nodes[j]`` with signed step ``steps[j] < 0``;
    ``coeffs[j]`` holds the Taylor coefficients (double precision, zero padded).
    """

    nodes: np.ndarray
    steps: np.ndarray
    coeffs: np.ndarray
    u_end: complex
    p_end: complex


def descend(alpha, sigma: int, u, p, L: float, x_end: float, h: float = PATH_STEP, dps: int = DEFAULT_DPS) -> TaylorSegment:
    """Carry the state from ``L`` down to ``x_end`` with high-precision Taylor steps."""
    with mp.workdps(dps):
        n = max(1, int(math.ceil((L - x_end) / h)))
        xs = [mp.mpf(L) - (mp.mpf(L) - mp.mpf(x_end)) * j / n for j in range(n + 1)]
        al = _mpc(alpha)
        u, p = mp.mpc(u), mp.mpc(p)
        rows = []
        for xa, xb in zip(xs[:-1], xs[1:]):
            u, p, c = taylor_step(xa, u, p, xb - xa, al, sigma)
            rows.append([complex(ci) for ci in c])
        width = max(len(r) for r in rows)
        coeffs = np.zeros((n, width), dtype=complex)
        for j, r in enumerate(rows):
            coeffs[j, : len(r)] = r
        nodes = np.array([float(x) for x in xs[:-1]])
        steps = np.array([float(xb - xa) for xa, xb in zip(xs[:-1], xs[1:])])
        return TaylorSegment(nodes, steps, coeffs, complex(u), complex(p))


def tail_integral(alpha, sigma: int, L: float, X: float, dps: int = DEFAULT_DPS) -> complex:
    """``int_L^X U(y) dy`` from the optimally truncated background series."""
    if X <= L:
        raise ValueError("tail integral needs X > L")
    with mp.workdps(dps):
        coeffs = background_coefficients(alpha, sigma, dps=dps)
        Lm, Xm = mp.mpf(L), mp.mpf(X)
        total = coeffs[0] * mp.log(Xm / Lm)
        prev = None
        for m in range(1, len(coeffs)):
            t = coeffs[m] * (Lm ** (-3 * m) - Xm ** (-3 * m)) / (3 * m)
            if prev is not None and abs(t) > abs(prev):
                break
            total += t
            prev = t
        return complex(total)
