"""2x2 complex linear algebra with explicit argument windows.

Matrices are plain ``numpy`` arrays of shape ``(2, 2)`` and dtype ``complex128``.
Every function returns a fresh read-only array, so results behave as values.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import BranchCutError, RangeError, SingularInputError

__all__ = [
    "ArgWindow",
    "PRINCIPAL",
    "UPPER",
    "LOWER",
    "I2",
    "SIGMA1",
    "SIGMA2",
    "SIGMA3",
    "matrix",
    "diag",
    "mat_mul",
    "det",
    "inv",
    "frobenius",
    "sigma3_exp",
    "arg_in",
    "branched_power",
    "sigma3_power",
    "transport_matrix",
]

BRANCH_TOL = 1e-12
# exp() of anything beyond this overflows a double
_MAX_EXP = math.log(np.finfo(float).max)


def _frozen(a) -> np.ndarray:
    out = np.array(a, dtype=complex).reshape(2, 2)
    out.setflags(write=False)
    return out


def matrix(a11, a12, a21, a22) -> np.ndarray:
    """Build a read-only 2x2 complex matrix from its entries (row major)."""
    return _frozen([[a11, a12], [a21, a22]])


def diag(d1, d2) -> np.ndarray:
    return matrix(d1, 0, 0, d2)


I2 = diag(1, 1)
SIGMA1 = matrix(0, 1, 1, 0)
SIGMA2 = matrix(0, -1j, 1j, 0)
SIGMA3 = diag(1, -1)


def mat_mul(*factors: np.ndarray) -> np.ndarray:
    """Ordered product of any number of 2x2 matrices."""
    out = np.asarray(factors[0], dtype=complex)
    for f in factors[1:]:
        out = out @ np.asarray(f, dtype=complex)
    return _frozen(out)


def det(a: np.ndarray) -> complex:
    return complex(a[0, 0] * a[1, 1] - a[0, 1] * a[1, 0])


def inv(a: np.ndarray) -> np.ndarray:
    """Inverse through the adjugate formula."""
    d = det(a)
    if d == 0:
        raise SingularInputError("matrix is singular")
    return matrix(a[1, 1] / d, -a[0, 1] / d, -a[1, 0] / d, a[0, 0] / d)


def frobenius(a: np.ndarray) -> float:
    return float(np.sqrt(np.sum(np.abs(np.asarray(a)) ** 2)))


def _checked_exp(c: complex) -> complex:
    if abs(c.real) > _MAX_EXP:
        raise RangeError(f"exp overflow: |Re c| = {abs(c.real):.4g}")
    return cmath.exp(c)


def sigma3_exp(c: complex) -> np.ndarray:
    """``exp(c * sigma3) = diag(e^c, e^-c)``."""
    c = complex(c)
    return diag(_checked_exp(c), _checked_exp(-c))


@dataclass(frozen=True)
class ArgWindow:
    """Half-open argument range ``(lo, lo + 2*pi)`` used to pick a branch."""

    lo: float

    @property
    def hi(self) -> float:
        return self.lo + 2 * math.pi

    def shifted(self, turns: float) -> "ArgWindow":
        """Window rotated by ``turns * pi``."""
        return ArgWindow(self.lo + turns * math.pi)


PRINCIPAL = ArgWindow(-math.pi)
UPPER = ArgWindow(-math.pi / 2)
LOWER = ArgWindow(-3 * math.pi / 2)


def arg_in(z: complex, w: ArgWindow) -> float:
    """Representative of ``arg z`` inside the open window ``w``.

    Raises ``BranchCutError`` when the argument sits within ``1e-12`` rad of
    the window boundary.
    """
    z = complex(z)
    if z == 0:
        raise SingularInputError("argument of zero is undefined")
    a = cmath.phase(z)
    a += 2 * math.pi * math.floor((w.lo - a) / (2 * math.pi) + 1)
    # now a in (lo, lo + 2pi]; wrap the top edge down
    if a > w.hi:
        a -= 2 * math.pi
    if a - w.lo < BRANCH_TOL or w.hi - a < BRANCH_TOL:
        raise BranchCutError(f"arg z = {a:.15g} lies on the boundary of window ({w.lo:.6g}, {w.hi:.6g})")
    return a


def branched_power(z: complex, a: complex, w: ArgWindow) -> complex:
    """``z**a`` with ``arg z`` taken in window ``w``."""
    z, a = complex(z), complex(a)
    if z == 0:
        if a.real > 0:
            return 0j
        raise SingularInputError("0**a with Re a <= 0")
    log_z = complex(math.log(abs(z)), arg_in(z, w))
    return _checked_exp(a * log_z)


def sigma3_power(z: complex, a: complex, w: ArgWindow) -> np.ndarray:
    """``z**(a sigma3) = diag(z**a, z**-a)`` on a single branch."""
    p = branched_power(z, a, w)
    if p == 0:
        raise SingularInputError("z**(a sigma3) is singular at z = 0")
    return diag(p, branched_power(z, -a, w))


def transport_matrix(v: complex) -> np.ndarray:
    """``exp(-v sigma2) = [[cosh v, i sinh v], [-i sinh v, cosh v]]``."""
    v = complex(v)
    if abs(v.real) > _MAX_EXP:
        raise RangeError(f"cosh/sinh overflow: |Re v| = {abs(v.real):.4g}")
    c, s = cmath.cosh(v), cmath.sinh(v)
    return matrix(c, 1j * s, -1j * s, c)
