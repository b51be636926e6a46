"""Bessel-type parametrix near the origin.

The building block is

    Phi0(z) = B(z) [[v1, v2], [v1', v2']],
    B(z) = 1/2 e^{-i pi/4 sigma3} [[1, 1], [-1, 1]] [[1, 0], [-alpha/z, 1]],

and the sector functions are right multiples of it:
``Phi1 = Phi0 E_hat``, ``Phi2 = Phi1 S1_hat``, ``Phi3 = Phi2 S2_hat``.
Sector ``k`` uses the argument window ``(pi(k - 3/2), pi(k + 1/2))``.
A point on the universal cover is represented by the pair ``(z, window)``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from . import matrix2 as m2
from .errors import SectorError, SingularInputError
from .matrix2 import ArgWindow
from .specfun import DEFAULT_POLICY, SeriesPolicy, bessel_pair, gamma_complex

__all__ = [
    "ParametrixMatrices",
    "sector_window",
    "B_matrix",
    "E_hat",
    "parametrix_matrices",
    "phi0",
    "phi0_regularized_limit",
    "phi0_limit_extrapolated",
    "phi_sector",
    "rotation_residual",
    "large_z_expansion_residual",
]

SECTORS = (1, 2, 3)

_LEFT = m2.mat_mul(m2.sigma3_exp(-1j * math.pi / 4), m2.matrix(1, 1, -1, 1))


def sector_window(k: int) -> ArgWindow:
    """Argument window ``(pi(k - 3/2), pi(k + 1/2))`` of sector ``k``."""
    if k not in SECTORS:
        raise SectorError(f"sector index must be 1, 2 or 3, got {k!r}")
    return ArgWindow(math.pi * (k - 1.5))


@dataclass(frozen=True)
class ParametrixMatrices:
    E_hat: np.ndarray
    S1_hat: np.ndarray
    S2_hat: np.ndarray


def B_matrix(z: complex, alpha: complex) -> np.ndarray:
    z = complex(z)
    if z == 0:
        raise SingularInputError("B(z) is singular at z = 0")
    return m2.mat_mul(0.5 * _LEFT, m2.matrix(1, 0, -alpha / z, 1))


def E_hat(alpha: complex) -> np.ndarray:
    alpha = complex(alpha)
    c = cmath.cos(math.pi * alpha)
    if abs(c) < 1e-12:
        raise SingularInputError("E_hat is singular where cos(pi alpha) = 0")
    scale = math.sqrt(math.pi) / (2 * c)
    d = m2.diag(
        2 ** (1 - alpha) / gamma_complex(0.5 + alpha),
        2**alpha / gamma_complex(1.5 - alpha),
    )
    tail = m2.matrix(cmath.exp(-1j * math.pi * alpha), 1j, 1j * cmath.exp(1j * math.pi * alpha), 1)
    return m2.mat_mul(scale * d, m2.sigma3_exp(1j * math.pi / 4), tail)


def parametrix_matrices(alpha: complex) -> ParametrixMatrices:
    s = 2 * cmath.sin(math.pi * complex(alpha))
    return ParametrixMatrices(
        E_hat=E_hat(alpha),
        S1_hat=m2.matrix(1, s, 0, 1),
        S2_hat=m2.matrix(1, 0, -s, 1),
    )


def phi0(z: complex, alpha: complex, w: ArgWindow = m2.PRINCIPAL, pol: SeriesPolicy = DEFAULT_POLICY) -> np.ndarray:
    v1, v1p, v2, v2p = bessel_pair(z, alpha, w, pol)
    return m2.mat_mul(B_matrix(z, alpha), m2.matrix(v1, v2, v1p, v2p))


def phi0_regularized_limit(alpha: complex) -> np.ndarray:
    """Closed form of ``lim_{z->0} Phi0(z) z^{-alpha sigma3}``."""
    return m2.mat_mul(0.5 * _LEFT, m2.diag(1, 1 - 2 * complex(alpha)))


def phi0_limit_extrapolated(alpha: complex, exponents=(2, 3, 4, 5)) -> np.ndarray:
    """Numerical limit of ``Phi0(z) z^{-alpha sigma3}`` along ``z = 10^-m``.

    The error is a power series in ``z``, so repeated Richardson elimination with
    ratio 10 removes one order per level.
    """
    table = []
    for m in exponents:
        z = 10.0 ** (-m)
        table.append(np.asarray(m2.mat_mul(phi0(z, alpha), m2.sigma3_power(z, -alpha, m2.PRINCIPAL))))
    order = 1
    while len(table) > 1:
        f = 10.0**order
        table = [(f * b - a) / (f - 1) for a, b in zip(table[:-1], table[1:])]
        order += 1
    return m2.matrix(*table[0].ravel())


def phi_sector(k: int, z: complex, alpha: complex, pol: SeriesPolicy = DEFAULT_POLICY) -> np.ndarray:
    """``Phi^k(z)`` with ``arg z`` read in the window of sector ``k``."""
    w = sector_window(k)
    pm = parametrix_matrices(alpha)
    out = m2.mat_mul(phi0(z, alpha, w, pol), pm.E_hat)
    if k >= 2:
        out = m2.mat_mul(out, pm.S1_hat)
    if k == 3:
        out = m2.mat_mul(out, pm.S2_hat)
    return out


def rotation_residual(k: int, z: complex, alpha: complex) -> float:
    """``|| sigma2 Phi^{k+1}(e^{i pi} z) sigma2 - Phi^k(z) ||_F`` for ``k`` in {1, 2}."""
    if k not in (1, 2):
        raise SectorError("the rotation identity links sectors 1->2 and 2->3")
    lhs = m2.mat_mul(m2.SIGMA2, phi_sector(k + 1, -complex(z), alpha), m2.SIGMA2)
    return m2.frobenius(lhs - phi_sector(k, z, alpha))


def large_z_expansion_residual(k: int, z: complex, alpha: complex, include_diagonal: bool = False) -> float:
    """Frobenius residual of ``Phi^k(z) e^{-z sigma3}`` against ``I - i alpha/(2z) sigma1``.

    With ``include_diagonal=True`` the ``-alpha^2/(2z) sigma3`` term of the first
    correction is also subtracted, leaving a genuine ``O(z^-2)`` remainder.
    Both exponentials grow like ``e^{|Re z|}``, so keep ``|z| <= 40`` and stay
    near the sector bisector when ``|z|`` is large.
    """
    z, alpha = complex(z), complex(alpha)
    if abs(z) < 10:
        raise ValueError("the large-z expansion is checked for |z| >= 10")
    p = m2.mat_mul(phi_sector(k, z, alpha), m2.sigma3_exp(-z))
    model = np.asarray(m2.I2) - 1j * alpha / (2 * z) * np.asarray(m2.SIGMA1)
    if include_diagonal:
        model = model - alpha**2 / (2 * z) * np.asarray(m2.SIGMA3)
    return m2.frobenius(p - model)
