"""Stokes data of the Ablowitz-Segur family and the explicit connection matrices.

Conventions
-----------
Stokes multipliers ``s1 = -sin(pi a) - i k``, ``s2 = 0``, ``s3 = -sin(pi a) + i k``;
``S_k`` is lower triangular for odd ``k`` and upper triangular for even ``k``.
All square roots and logarithms of ``1 - s1 s3 = cos^2(pi a) - k^2`` are principal.
"""

from __future__ import annotations

import cmath
import enum
import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from . import matrix2 as m2
from .errors import (
    BranchAdvisory,
    BranchCutError,
    DivergentFormulaError,
    DomainError,
    SingularInputError,
)
from .parametrix import parametrix_matrices
from .specfun import gamma_complex

__all__ = [
    "Family",
    "ASParameters",
    "StokesTriple",
    "ConnectionMatrices",
    "ModelData",
    "HM_TOL",
    "classify_family",
    "stokes_from_ak",
    "stokes_matrices",
    "constraint_residual",
    "connection_E",
    "matrix_M",
    "matrix_D",
    "matrix_K_definition",
    "matrix_K_closed",
    "nu_constant",
    "model_N",
    "S_D",
    "connection_matrices",
    "model_data",
    "predicted_total_integral",
    "predicted_exp_total",
    "matrix_H_and_limit",
    "H_closed",
    "H_inverse",
]

HM_TOL = 1e-12
_REAL_TOL = 1e-15


class Family(enum.Enum):
    RealAS = "RealAS"
    ImaginaryAS = "ImaginaryAS"
    HMBoundary = "HMBoundary"
    Other = "Other"


def _is_real(c: complex) -> bool:
    return abs(c.imag) <= _REAL_TOL


def _is_imag(c: complex) -> bool:
    return abs(c.real) <= _REAL_TOL


def classify_family(alpha: complex, k: complex) -> Family:
    """Classify ``(alpha, k)``; the boundary test runs before the real family test."""
    alpha, k = complex(alpha), complex(k)
    real_alpha = _is_real(alpha) and -0.5 < alpha.real < 0.5
    if real_alpha and _is_real(k):
        c = math.cos(math.pi * alpha.real)
        gap = abs(k.real) - c
        if abs(gap) <= HM_TOL:
            return Family.HMBoundary
        if gap < 0:
            return Family.RealAS
    if _is_imag(alpha) and _is_imag(k):
        return Family.ImaginaryAS
    return Family.Other


@dataclass(frozen=True)
class ASParameters:
    alpha: complex
    k: complex
    family: Family = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "alpha", complex(self.alpha))
        object.__setattr__(self, "k", complex(self.k))
        object.__setattr__(self, "family", classify_family(self.alpha, self.k))


@dataclass(frozen=True)
class StokesTriple:
    s1: complex
    s2: complex
    s3: complex


def stokes_from_ak(alpha: complex, k: complex) -> StokesTriple:
    s = cmath.sin(math.pi * complex(alpha))
    k = complex(k)
    return StokesTriple(-s - 1j * k, 0j, -s + 1j * k)


def stokes_matrices(s: StokesTriple) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    return (
        m2.matrix(1, 0, s.s1, 1),
        m2.matrix(1, s.s2, 0, 1),
        m2.matrix(1, 0, s.s3, 1),
    )


def constraint_residual(s: StokesTriple, alpha: complex) -> float:
    return abs(s.s1 - s.s2 + s.s3 + s.s1 * s.s2 * s.s3 + 2 * cmath.sin(math.pi * complex(alpha)))


def _cos_pi(alpha: complex) -> complex:
    c = cmath.cos(math.pi * complex(alpha))
    if abs(c) <= 1e-12:
        raise SingularInputError("connection matrices are singular where cos(pi alpha) = 0")
    return c


def connection_E(alpha: complex) -> np.ndarray:
    """Unimodular connection matrix with the normalization ``p = 1``."""
    alpha = complex(alpha)
    c = _cos_pi(alpha)
    q = -1 / (2j * c)
    return m2.mat_mul(
        m2.diag(1, q),
        m2.matrix(1, 1j * cmath.exp(-1j * math.pi * alpha), 1, -1j * cmath.exp(1j * math.pi * alpha)),
    )


def matrix_M(alpha: complex) -> np.ndarray:
    return m2.mat_mul(-1j * np.asarray(m2.sigma3_exp(1j * math.pi * (complex(alpha) - 0.5))), m2.SIGMA2)


def matrix_D(alpha: complex) -> np.ndarray:
    alpha = complex(alpha)
    c = _cos_pi(alpha)
    pref = math.sqrt(math.pi) * cmath.exp(1j * math.pi / 4) / c
    d11 = 2 ** (-alpha) * cmath.exp(-1j * math.pi * alpha) / gamma_complex(0.5 + alpha)
    d22 = -1j * 2**alpha * c * cmath.exp(1j * math.pi * alpha) / gamma_complex(1.5 - alpha)
    return m2.diag(pref * d11, pref * d22)


def _one_minus_s1s3(alpha: complex, k: complex) -> complex:
    s = stokes_from_ak(alpha, k)
    return 1 - s.s1 * s.s3


def _principal_base(alpha: complex, k: complex) -> complex:
    """``1 - s1 s3`` checked against the principal branch cut."""
    fam = classify_family(alpha, k)
    if fam is Family.HMBoundary:
        raise DivergentFormulaError("1 - s1 s3 vanishes on the Hastings-McLeod boundary")
    g = _one_minus_s1s3(alpha, k)
    if g.real <= 0 and abs(g.imag) <= 1e-15 * max(1.0, abs(g)):
        raise BranchCutError(f"1 - s1 s3 = {g} lies on the principal branch cut")
    if fam is Family.Other:
        warnings.warn(
            f"(alpha, k) = ({alpha}, {k}) is outside both AS families; principal branch used",
            BranchAdvisory,
            stacklevel=3,
        )
    return g


def matrix_K_definition(alpha: complex, k: complex) -> np.ndarray:
    """``(1 - s1 s3)^{-1/2} E S2_hat [[1, -s3], [-s1, 1]] E^{-1}`` built factor by factor."""
    g = _principal_base(alpha, k)
    s = stokes_from_ak(alpha, k)
    E = connection_E(alpha)
    S2_hat = parametrix_matrices(alpha).S2_hat
    mid = m2.matrix(1, -s.s3, -s.s1, 1)
    return m2.mat_mul(g**-0.5 * np.asarray(E), S2_hat, mid, m2.inv(E))


def matrix_K_closed(alpha: complex, k: complex) -> np.ndarray:
    """Diagonal closed form ``(1 - s1 s3)^{-1/2} diag(c - k, c + k) e^{-i pi alpha sigma3}``."""
    g = _principal_base(alpha, k)
    alpha, k = complex(alpha), complex(k)
    c = cmath.cos(math.pi * alpha)
    e = cmath.exp(-1j * math.pi * alpha)
    return m2.diag(g**-0.5 * (c - k) * e, g**-0.5 * (c + k) / e)


def nu_constant(alpha: complex, k: complex) -> complex:
    """``nu = -(2 pi i)^{-1} ln(1 - s1 s3)`` on the principal branch."""
    return -cmath.log(_principal_base(alpha, k)) / (2j * math.pi)


def S_D(alpha: complex, k: complex) -> np.ndarray:
    g = _principal_base(alpha, k)
    return m2.diag(g, 1 / g)


def model_N(z: complex, alpha: complex, k: complex) -> np.ndarray:
    """``((z + 1/2)/(z - 1/2))^{nu sigma3}`` with each logarithm principal.

    The cut is the segment ``[-1/2, 1/2]``; points on it are rejected.
    """
    z = complex(z)
    if abs(z.imag) <= 1e-15 and -0.5 <= z.real <= 0.5:
        raise BranchCutError("N(z) is evaluated off the segment [-1/2, 1/2]")
    nu = nu_constant(alpha, k)
    lg = cmath.log(z + 0.5) - cmath.log(z - 0.5)
    return m2.sigma3_exp(nu * lg)


@dataclass(frozen=True)
class ConnectionMatrices:
    E: np.ndarray
    M: np.ndarray
    D: np.ndarray
    K: np.ndarray


@dataclass(frozen=True)
class ModelData:
    nu: complex
    S_D: np.ndarray
    z_minus: float = -0.5
    z_plus: float = 0.5


def connection_matrices(alpha: complex, k: complex) -> ConnectionMatrices:
    return ConnectionMatrices(
        E=connection_E(alpha),
        M=matrix_M(alpha),
        D=matrix_D(alpha),
        K=matrix_K_closed(alpha, k),
    )


def model_data(alpha: complex, k: complex) -> ModelData:
    return ModelData(nu=nu_constant(alpha, k), S_D=S_D(alpha, k))


def _require_solvable(alpha: complex, k: complex) -> Family:
    fam = classify_family(alpha, k)
    if fam is Family.HMBoundary:
        raise DivergentFormulaError("the total integral diverges on the Hastings-McLeod boundary")
    return fam


def predicted_total_integral(alpha: complex, k: complex) -> complex:
    """``1/2 ln((cos pi a + k)/(cos pi a - k))``.

    Defined for the real family and for the homogeneous case ``alpha = 0``
    (where ``k`` may also be imaginary).
    """
    alpha, k = complex(alpha), complex(k)
    fam = _require_solvable(alpha, k)
    if not (fam is Family.RealAS or (alpha == 0 and fam is Family.ImaginaryAS)):
        raise DomainError(f"the log form of the total integral needs the real family or alpha = 0, got {fam.value}")
    c = cmath.cos(math.pi * alpha)
    val = 0.5 * cmath.log((c + k) / (c - k))
    return complex(val.real, 0.0) if fam is Family.RealAS else val


def predicted_exp_total(alpha: complex, k: complex) -> complex:
    """``(cos pi a + k) / (cos^2 pi a - k^2)^{1/2}``, the exponential of the total integral."""
    fam = _require_solvable(alpha, k)
    if fam not in (Family.RealAS, Family.ImaginaryAS):
        raise DomainError(f"exp-total formula is stated for the AS families, got {fam.value}")
    c = cmath.cos(math.pi * complex(alpha))
    return (c + complex(k)) / cmath.sqrt(_one_minus_s1s3(alpha, k))


def matrix_H_and_limit(alpha: complex, k: complex) -> tuple[np.ndarray, complex, complex]:
    """Return ``(H, h_plus, h_minus)``.

    ``H`` is assembled from its defining product
    ``1/2 e^{-i pi/4 s3} [[1,1],[-1,1]] K e^{i pi a s3} [[1,-1],[1,1]] e^{i pi/4 s3}``
    so that comparing it with the closed form in ``h_plus, h_minus`` is a real check.
    """
    g = _principal_base(alpha, k)
    c = cmath.cos(math.pi * complex(alpha))
    hp = g**-0.5 * (c - complex(k)) / 2
    hm = g**-0.5 * (c + complex(k)) / 2
    H = m2.mat_mul(
        0.5 * np.asarray(m2.sigma3_exp(-1j * math.pi / 4)),
        m2.matrix(1, 1, -1, 1),
        matrix_K_closed(alpha, k),
        m2.sigma3_exp(1j * math.pi * complex(alpha)),
        m2.matrix(1, -1, 1, 1),
        m2.sigma3_exp(1j * math.pi / 4),
    )
    return H, hp, hm


def H_closed(hp: complex, hm: complex) -> np.ndarray:
    return m2.matrix(hp + hm, 1j * (hp - hm), 1j * (hm - hp), hp + hm)


def H_inverse(hp: complex, hm: complex) -> np.ndarray:
    """Inverse of ``H`` written in ``h_plus, h_minus`` (uses ``4 h_plus h_minus = 1``)."""
    return m2.matrix(hp + hm, 1j * (hm - hp), 1j * (hp - hm), hp + hm)
