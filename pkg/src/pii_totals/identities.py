"""Machine-checkable algebraic identities of the monodromy data and the parametrix.

Each check returns an :class:`IdentityReport` holding the largest residual over
a parameter grid. Names are stable strings used by the CLI and the reports.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import matrix2 as m2
from . import monodromy as md
from . import parametrix as px
from .specfun import bessel_pair


@dataclass(frozen=True)
class IdentityReport:
    name: str
    max_residual: float
    tolerance: float
    passed: bool
    detail: str = ""


# --------------------------------------------------------------------------
# grids

_REAL_FRACS = (0.0, 0.5, -0.5)


def alpha_grid(grid: str = "default") -> list[complex]:
    if grid == "minimal":
        return [0j]
    base = [0, 0.25, -0.25, 0.4, -0.4, 0.2j, 0.5j]
    if grid == "default":
        return [complex(a) for a in base]
    if grid == "dense":
        return [complex(a) for a in base + [0.1, -0.1, 0.35, -0.45, 0.1j, -0.3j, 1j]]
    raise ValueError(f"unknown grid {grid!r}")


def ak_grid(grid: str = "default") -> list[tuple[complex, complex]]:
    """Admissible ``(alpha, k)`` pairs: real or purely imaginary families."""
    fracs = _REAL_FRACS if grid != "dense" else (0.0, 0.25, -0.25, 0.5, -0.5, 0.9, -0.9)
    imag_k = (0.0, 0.4, -0.7) if grid != "dense" else (0.0, 0.4, -0.7, 1.5, -0.1)
    out = []
    for a in alpha_grid(grid):
        if a.imag == 0:
            c = math.cos(math.pi * a.real)
            out += [(a, complex(f * c)) for f in fracs]
        else:
            out += [(a, 1j * k0) for k0 in imag_k]
    if grid == "minimal":
        out += [(0j, 0.5j)]
    return out


# --------------------------------------------------------------------------
# residual helpers


def _connection_relation(a, k):
    s = md.stokes_from_ak(a, k)
    S1, S2, S3 = md.stokes_matrices(s)
    E, M = md.connection_E(a), md.matrix_M(a)
    return m2.frobenius(m2.mat_mul(E, S1, S2, S3) - m2.mat_mul(m2.SIGMA2, m2.inv(M), E, m2.SIGMA2))


def _stokes_constraint(a, k):
    return md.constraint_residual(md.stokes_from_ak(a, k), a)


def _det_E(a):
    return abs(m2.det(md.connection_E(a)) - 1)


def _hatE_S1_DE(a):
    pm = px.parametrix_matrices(a)
    return m2.frobenius(m2.mat_mul(pm.E_hat, pm.S1_hat) - m2.mat_mul(md.matrix_D(a), md.connection_E(a)))


def rotation_points(k: int, n: int = 6, radii=(0.6, 1.7)) -> list[complex]:
    """Points spread over the whole window of sector ``k`` (six angles, two radii)."""
    lo = px.sector_window(k).lo
    return [r * cmath.exp(1j * (lo + (j + 0.5) * 2 * math.pi / n)) for r in radii for j in range(n)]


def _rotation(a):
    return max(px.rotation_residual(k, z, a) for k in (1, 2) for z in rotation_points(k))


def _origin_limit(a):
    return m2.frobenius(px.phi0_limit_extrapolated(a) - px.phi0_regularized_limit(a))


WRONSKIAN_POINTS = (0.3, 1.0, 2 + 1j, -0.7 + 0.4j, 3j)


def _wronskian(a):
    worst = 0.0
    for z in WRONSKIAN_POINTS:
        v1, v1p, v2, v2p = bessel_pair(z, a)
        worst = max(worst, abs(v1 * v2p - v2 * v1p - (1 - 2 * a)) / (1 + abs(1 - 2 * a)))
    return worst


def _det_phi_sector(a):
    return max(abs(m2.det(px.phi_sector(k, z, a)) - 1) for k in (1, 2, 3) for z in (0.5, 1 + 1j, -2 + 0.5j))


def _K_closed(a, k):
    return m2.frobenius(md.matrix_K_definition(a, k) - md.matrix_K_closed(a, k))


def _S_plus(a, k):
    s = md.stokes_from_ak(a, k)
    lhs = px.parametrix_matrices(a).S2_hat
    return m2.frobenius(lhs - m2.mat_mul(m2.matrix(1, 0, s.s1, 1), m2.matrix(1, 0, s.s3, 1)))


def _S_minus_inv(a, k):
    s = md.stokes_from_ak(a, k)
    lhs = px.parametrix_matrices(a).S1_hat
    return m2.frobenius(lhs - m2.mat_mul(m2.matrix(1, -s.s1, 0, 1), m2.matrix(1, -s.s3, 0, 1)))


def _W_identity(a, k):
    s = md.stokes_from_ak(a, k)
    g = 1 - s.s1 * s.s3
    lhs = m2.mat_mul(m2.diag(g**0.5, g**-0.5), m2.matrix(1, -s.s3 / g, 0, 1), m2.matrix(1, 0, -s.s1, 1))
    return m2.frobenius(lhs - g**-0.5 * np.asarray(m2.matrix(1, -s.s3, -s.s1, 1)))


def _exp_total_from_h(a, k):
    _, _, hm = md.matrix_H_and_limit(a, k)
    return abs(2 * hm - md.predicted_exp_total(a, k))


def _H_closed(a, k):
    H, hp, hm = md.matrix_H_and_limit(a, k)
    return max(
        m2.frobenius(H - md.H_closed(hp, hm)),
        m2.frobenius(m2.mat_mul(H, md.H_inverse(hp, hm)) - m2.I2),
    )


def _nu_imaginary(a, k):
    return abs(md.nu_constant(a, k).real)


N_JUMP_POINTS = (-0.3, 0.0, 0.2)
N_JUMP_EPS = (1e-3, 1e-4, 1e-5)


def n_jump_data(a, k, z0: float):
    """Errors of the jump ``N(z0 + i eps) N(z0 - i eps)^{-1}`` against ``S_D`` for each eps,
    and the relative residual of the Richardson-extrapolated jump."""
    SD = np.asarray(md.S_D(a, k))
    J = [np.asarray(m2.mat_mul(md.model_N(z0 + 1j * e, a, k), m2.inv(md.model_N(z0 - 1j * e, a, k)))) for e in N_JUMP_EPS]
    errs = [m2.frobenius(j - SD) for j in J]
    # the error is a power series in eps: two Richardson levels remove eps and eps^2
    r1 = [(10 * b - a) / 9 for a, b in zip(J[:-1], J[1:])]
    rich = (100 * r1[1] - r1[0]) / 99
    return errs, m2.frobenius(rich - SD) / m2.frobenius(SD)


def _n_jump(a, k):
    worst, bad_slope = 0.0, []
    for z0 in N_JUMP_POINTS:
        errs, rich = n_jump_data(a, k, z0)
        worst = max(worst, rich)
        if min(errs) > 1e-13:
            slope = np.polyfit(np.log(N_JUMP_EPS), np.log(errs), 1)[0]
            if abs(slope - 1) > 0.1:
                bad_slope.append((z0, slope))
    return worst, bad_slope


# --------------------------------------------------------------------------
# suites


def _report(name, values, tol, override, detail=""):
    tol = override if override is not None else tol
    r = float(max(values)) if values else 0.0
    return IdentityReport(name, r, tol, bool(r <= tol), detail)


def parametrix_suite(grid: str = "default", tol: float | None = None) -> list[IdentityReport]:
    alphas = alpha_grid(grid)
    aks = ak_grid(grid)
    return [
        _report("rotation_symmetry", [_rotation(a) for a in alphas], 1e-10, tol),
        _report("hatE_S1_equals_DE", [_hatE_S1_DE(a) for a in alphas], 1e-12, tol),
        _report("origin_limit", [_origin_limit(a) for a in alphas], 1e-8, tol),
        _report("wronskian", [_wronskian(a) for a in alphas], 1e-10, tol),
        _report("det_phi_sector", [_det_phi_sector(a) for a in alphas], 1e-10, tol),
        _report("S_plus_factorization", [_S_plus(a, k) for a, k in aks], 1e-13, tol),
        _report("S_minus_inverse_factorization", [_S_minus_inv(a, k) for a, k in aks], 1e-13, tol),
    ]


def full_suite(grid: str = "default", tol: float | None = None) -> list[IdentityReport]:
    alphas = alpha_grid(grid)
    aks = ak_grid(grid)
    reports = [
        _report("stokes_constraint", [_stokes_constraint(a, k) for a, k in aks], 1e-14, tol),
        _report("connection_relation", [_connection_relation(a, k) for a, k in aks], 1e-12, tol),
        _report("det_E", [_det_E(a) for a in alphas], 1e-13, tol),
    ]
    reports += parametrix_suite(grid, tol)
    reports += [
        _report("K_diagonal_closed_form", [_K_closed(a, k) for a, k in aks], 1e-12, tol),
        _report("W_identity", [_W_identity(a, k) for a, k in aks], 1e-13, tol),
        _report("exp_total_from_h", [_exp_total_from_h(a, k) for a, k in aks], 1e-13, tol),
        _report("H_closed_form", [_H_closed(a, k) for a, k in aks], 1e-13, tol),
        _report("nu_imaginary", [_nu_imaginary(a, k) for a, k in aks], 1e-15, tol),
    ]
    jumps = [_n_jump(a, k) for a, k in aks]
    bad = [b for _, bs in jumps for b in bs]
    rep = _report("N_jump", [j[0] for j in jumps], 1e-8, tol, detail=f"slope outliers: {bad}" if bad else "")
    if bad:
        rep = IdentityReport(rep.name, rep.max_residual, rep.tolerance, False, rep.detail)
    reports.append(rep)
    return reports


SUITES: dict[str, Callable[..., list[IdentityReport]]] = {
    "full": full_suite,
    "parametrix": parametrix_suite,
}
