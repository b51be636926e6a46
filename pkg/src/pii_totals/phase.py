"""Phase functions and steepest-descent geometry.

    theta(l, x)   = i (4/3 l^3 + x l)
    theta_t(z)    = i (4/3 z^3 - z)          stationary points z = +-1/2
    z_map(l, x)   = -theta(l, x)             local conformal map near l = 0
    eta(z)        = i theta_t(z) = z - 4 z^3 / 3
    zeta(z)       = 4 sqrt(3)/3 e^{3 pi i/4} (z - 1/2) (z + 1)^{1/2}
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

from .errors import BranchCutError, ConvergenceError, DomainError

__all__ = [
    "PhaseContext",
    "theta",
    "theta_tilde",
    "z_map",
    "z_map_derivative",
    "z_map_inverse",
    "eta",
    "eta_prime",
    "zeta",
    "descent_curves",
]

Z_PLUS = 0.5
Z_MINUS = -0.5


@dataclass(frozen=True)
class PhaseContext:
    """Scales attached to a real ``x``.

    ``r`` is the radius of the small disc around the origin. It only has to satisfy
    ``0 < r < R``; nothing here depends on its value, so it stays optional.
    """

    x: float
    r: float | None = None
    t: float | None = field(init=False)
    R: float | None = field(init=False)
    lambda_pm: tuple[complex, complex] | None = field(init=False)
    z_pm: tuple[float, float] = (Z_MINUS, Z_PLUS)

    def __post_init__(self):
        x = float(self.x)
        if x == 0:
            raise DomainError("scaled phase quantities need x != 0")
        object.__setattr__(self, "t", (-x) ** 1.5 if x < 0 else None)
        if x > 0:
            s = math.sqrt(x)
            object.__setattr__(self, "R", s / 4)
            object.__setattr__(self, "lambda_pm", (0.5j * s, -0.5j * s))
        else:
            object.__setattr__(self, "R", None)
            object.__setattr__(self, "lambda_pm", None)
        if self.r is not None and self.R is not None and not 0 < self.r < self.R:
            raise DomainError("the disc radius must satisfy 0 < r < R")


def theta(lam: complex, x: float) -> complex:
    return 1j * (4 / 3 * lam**3 + x * lam)


def theta_tilde(z: complex) -> complex:
    return 1j * (4 / 3 * z**3 - z)


def z_map(lam: complex, x: float) -> complex:
    return -1j * (4 * lam**3 / 3 + x * lam)


def z_map_derivative(lam: complex, x: float) -> complex:
    return -1j * (4 * lam**2 + x)


def z_map_inverse(z: complex, x: float, tol: float = 1e-13, max_iter: int = 50) -> complex:
    """Solve ``z_map(l, x) = z`` for ``l`` in the disc ``|l| < R = sqrt(x)/4``.

    Newton iteration from the linear seed ``l = z / (-i x)``.
    """
    if x <= 0:
        raise DomainError("the local map is used for x > 0")
    R = math.sqrt(x) / 4
    z = complex(z)
    lam = z / (-1j * x)
    scale = max(1.0, abs(z))
    for _ in range(max_iter):
        f = z_map(lam, x) - z
        if abs(f) <= tol * scale:
            break
        lam -= f / z_map_derivative(lam, x)
        if abs(lam) >= R:
            raise DomainError(f"target {z} is outside the image of |lambda| < {R:.6g}")
    else:
        raise ConvergenceError("Newton iteration for the inverse map did not converge")
    if abs(lam) >= R:
        raise DomainError(f"target {z} is outside the image of |lambda| < {R:.6g}")
    return lam


def eta(z: complex) -> complex:
    return z - 4 * z**3 / 3


def eta_prime(z: complex) -> complex:
    return 1 - 4 * z**2


_ZETA_PREF = 4 * math.sqrt(3) / 3 * cmath.exp(0.75j * math.pi)


def zeta(z: complex) -> complex:
    """Local coordinate at ``z = 1/2``; ``zeta(z)^2 = 4 (theta_t(1/2) - theta_t(z))``.

    The square root of ``z + 1`` is principal, with its cut along ``(-inf, -1]``.
    """
    z = complex(z)
    w = z + 1
    if abs(w.imag) <= 1e-12 and w.real <= 0:
        raise BranchCutError("zeta has a branch cut on (-inf, -1]")
    return _ZETA_PREF * (z - 0.5) * cmath.sqrt(w)


def descent_curves(t: float, x: float) -> tuple[complex, complex, complex, complex]:
    """Points ``gamma_+(t), gamma_-(t), h_+(t), h_-(t)`` on the descent curves."""
    if x <= 0:
        raise DomainError("gamma curves are defined for x > 0")
    g = math.sqrt(t * t / 3 + x / 4)
    h = math.sqrt(t * t / 3 + 0.25)
    return complex(t, g), complex(t, -g), complex(h, t), complex(-h, t)
