"""Scalar special functions: complex Gamma, real Airy Ai/Ai', and the Bessel-type pair v1, v2.

The Airy and Bessel series are summed with ``mpmath`` at a working precision that
grows with the argument.  Both series suffer cancellation that would otherwise
destroy double-precision accuracy, e.g. about ``exp(2*(2/3)x**1.5)`` for the Airy
Maclaurin series at ``x = 8``.  All public results are returned as Python floats
or complex numbers.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import mpmath as mp

from .errors import DomainError, SingularInputError, TruncationError
from .matrix2 import PRINCIPAL, ArgWindow, branched_power

__all__ = [
    "SeriesPolicy",
    "gamma_complex",
    "airy_ai",
    "airy_ai_prime",
    "bessel_pair",
    "v1",
    "v1_prime",
    "v2",
    "v2_prime",
]


@dataclass(frozen=True)
class SeriesPolicy:
    target_rel_error: float = 1e-13
    max_terms: int = 200

    def __post_init__(self):
        if not self.target_rel_error > 0:
            raise ValueError("target_rel_error must be positive")
        if self.max_terms < 10:
            raise ValueError("max_terms must be at least 10")


DEFAULT_POLICY = SeriesPolicy()

# --------------------------------------------------------------------------
# Gamma

_LANCZOS_G = 7
_LANCZOS_COEF = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def gamma_complex(z: complex) -> complex:
    """Gamma function via the Lanczos approximation (g = 7, 9 terms).

    Uses the reflection formula for ``Re z < 1/2``. Raises
    ``SingularInputError`` within ``1e-10`` of a pole.
    """
    z = complex(z)
    if z.real <= 0.5:
        n = round(z.real)
        if n <= 0 and abs(z - n) < 1e-10:
            raise SingularInputError(f"Gamma has a pole at {n}")
    if z.real < 0.5:
        return cmath.pi / (cmath.sin(cmath.pi * z) * gamma_complex(1 - z))
    z -= 1
    x = _LANCZOS_COEF[0]
    for i, c in enumerate(_LANCZOS_COEF[1:], start=1):
        x += c / (z + i)
    t = z + _LANCZOS_G + 0.5
    return math.sqrt(2 * math.pi) * t ** (z + 0.5) * cmath.exp(-t) * x


# --------------------------------------------------------------------------
# Airy

AIRY_RANGE = (-2.0, 60.0)
_AIRY_SWITCH = 8.0


def _airy_maclaurin(x: float) -> tuple[float, float]:
    xi = 2.0 / 3.0 * max(x, 0.0) ** 1.5
    dps = 25 + int(2 * xi / math.log(10))
    with mp.workdps(dps):
        X = mp.mpf(x)
        c1 = mp.mpf(3) ** (-mp.mpf(2) / 3) / mp.gamma(mp.mpf(2) / 3)
        c2 = mp.mpf(3) ** (-mp.mpf(1) / 3) / mp.gamma(mp.mpf(1) / 3)
        x3 = X**3
        # f = sum a_k x^{3k}, g = sum b_k x^{3k+1}
        a, b = mp.mpf(1), mp.mpf(1)
        f, g = mp.mpf(0), mp.mpf(0)
        fp, gp = mp.mpf(0), mp.mpf(0)
        k = 0
        eps = mp.mpf(10) ** (-dps + 2)
        while True:
            tf = a * x3**k if k else a
            tg = b * X ** (3 * k + 1)
            f += tf
            g += tg
            if k:
                fp += 3 * k * a * X ** (3 * k - 1)
            gp += (3 * k + 1) * b * X ** (3 * k)
            if k > 2 and abs(tf) + abs(tg) < eps * (abs(f) + abs(g)):
                break
            a = a / ((3 * k + 2) * (3 * k + 3))
            b = b / ((3 * k + 3) * (3 * k + 4))
            k += 1
            if k > 400:  # pragma: no cover - cannot happen on the admitted range
                raise TruncationError("Airy Maclaurin series did not converge")
        ai = c1 * f - c2 * g
        aip = c1 * fp - c2 * gp
        return float(ai), float(aip)


def _airy_asymptotic(x: float) -> tuple[float, float]:
    # Ai ~ e^{-xi} / (2 sqrt(pi) x^{1/4}) sum (-1)^k u_k xi^{-k}
    # Ai' ~ -x^{1/4} e^{-xi} / (2 sqrt(pi)) sum (-1)^k v_k xi^{-k}
    xi = 2.0 / 3.0 * x**1.5
    su, sv = 1.0, 1.0
    u = 1.0
    prev = math.inf
    for k in range(1, 60):
        u *= (6 * k - 5) * (6 * k - 3) * (6 * k - 1) / ((2 * k - 1) * 216 * k)
        v = -(6 * k + 1) / (6 * k - 1) * u
        term = u / xi**k
        if term > prev or term < 1e-18:
            break
        sign = -1.0 if k % 2 else 1.0
        su += sign * term
        sv += sign * v / xi**k
        prev = term
    pref = math.exp(-xi) / (2 * math.sqrt(math.pi))
    return pref * x**-0.25 * su, -pref * x**0.25 * sv


def _airy(x: float) -> tuple[float, float]:
    x = float(x)
    if not AIRY_RANGE[0] <= x <= AIRY_RANGE[1]:
        raise DomainError(f"Airy evaluation supports x in {AIRY_RANGE}, got {x}")
    if x <= _AIRY_SWITCH:
        return _airy_maclaurin(x)
    return _airy_asymptotic(x)


def airy_ai(x: float) -> float:
    """Airy function Ai(x) for real ``x`` in ``[-2, 60]``."""
    return _airy(x)[0]


def airy_ai_prime(x: float) -> float:
    """Derivative Ai'(x) for real ``x`` in ``[-2, 60]``."""
    return _airy(x)[1]


# --------------------------------------------------------------------------
# Bessel-type pair


def _entire_series(z: complex, b: complex, pol: SeriesPolicy, p: complex) -> tuple[complex, complex]:
    """Sum ``S = sum c_k z^{2k}`` and ``T = sum (p + 2k) c_k z^{2k}``.

    The coefficients satisfy ``c_0 = 1`` and ``c_{k+1}/c_k = 1 / (4 (k+1) (b+k))``.
    """
    extra = abs(z) / math.log(10)
    dps = max(20, int(17 + extra + 3 - math.log10(pol.target_rel_error)))
    with mp.workdps(dps):
        zz = mp.mpc(z) ** 2 / 4
        bb = mp.mpc(b)
        pp = mp.mpc(p)
        term = mp.mpc(1)
        s, t = mp.mpc(0), mp.mpc(0)
        small = 0
        for k in range(pol.max_terms):
            s += term
            t += (pp + 2 * k) * term
            if abs(term) <= pol.target_rel_error * 1e-3 * abs(s):
                small += 1
                if small == 2:
                    return complex(s), complex(t)
            else:
                small = 0
            term = term * zz / ((k + 1) * (bb + k))
    raise TruncationError(f"Bessel series did not converge in {pol.max_terms} terms at |z| = {abs(z):.4g}")


def bessel_pair(
    z: complex,
    alpha: complex,
    w: ArgWindow = PRINCIPAL,
    pol: SeriesPolicy = DEFAULT_POLICY,
) -> tuple[complex, complex, complex, complex]:
    """Return ``(v1, v1', v2, v2')`` at ``z`` with ``z**alpha`` taken on window ``w``.

    ``v1 = z**alpha * sum (z^2/4)^k Gamma(alpha+1/2) / (k! Gamma(alpha+1/2+k))``
    and ``v2`` is the same with ``alpha`` replaced by ``1 - alpha``.
    """
    z, alpha = complex(z), complex(alpha)
    if z == 0:
        raise SingularInputError("the Bessel pair is evaluated away from z = 0")
    out = []
    for p in (alpha, 1 - alpha):
        s, t = _entire_series(z, p + 0.5, pol, p)
        zp = branched_power(z, p, w)
        out += [zp * s, zp * t / z]
    return out[0], out[1], out[2], out[3]


def v1(z, alpha, pol: SeriesPolicy = DEFAULT_POLICY, w: ArgWindow = PRINCIPAL) -> complex:
    return bessel_pair(z, alpha, w, pol)[0]


def v1_prime(z, alpha, pol: SeriesPolicy = DEFAULT_POLICY, w: ArgWindow = PRINCIPAL) -> complex:
    return bessel_pair(z, alpha, w, pol)[1]


def v2(z, alpha, pol: SeriesPolicy = DEFAULT_POLICY, w: ArgWindow = PRINCIPAL) -> complex:
    return bessel_pair(z, alpha, w, pol)[2]


def v2_prime(z, alpha, pol: SeriesPolicy = DEFAULT_POLICY, w: ArgWindow = PRINCIPAL) -> complex:
    return bessel_pair(z, alpha, w, pol)[3]
