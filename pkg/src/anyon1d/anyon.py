"""Bound states of the attractive -alpha/x potential with an extra
inverse-square term fixed by the statistics parameter nu.

On the half line x > 0 the potential is

    V(x) = -alpha/x - hbar^2 nu (1 - nu) / (2 m x^2),   nu in {1/4, 3/4},

and the bound spectrum is epsilon_n = -m alpha^2 / (2 hbar^2 (n + nu)^2).
Eigenfunctions are hydrogen-like: with y = beta x and
beta = 2 m alpha / (hbar^2 (n + nu)),

    Phi_n(x) = C_n y^nu e^(-y/2) F(-n, 2 nu, y),

normalized so the integral of Phi_n^2 over (0, inf) in x equals 1.
The parity-extended variant lives on the full y line with a fixed
phase twist between the half lines.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .core import NU_VALUES, PhysicalParams
from .specfun import kummer_series, log_gamma, log_kummer_polynomial

# Above this y the direct evaluation could overflow y**n before the
# Gaussian-like tail pulls the product down, so log space takes over.
_DIRECT_Y_MAX = 700.0
_LOG_UNDERFLOW = -745.0

_INV_SQRT2 = 1.0 / math.sqrt(2.0)


def _check_nu(nu: float) -> None:
    if nu not in NU_VALUES:
        raise ValueError(f"nu must be 1/4 or 3/4, got {nu!r}")


def _check_n(n) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ValueError(f"radial index n must be a nonnegative integer, got {n!r}")


def potential(x: float, nu: float, p: PhysicalParams) -> float:
    """V(x) = -alpha/x - hbar^2 nu(1-nu)/(2 m x^2) for x > 0.

    Note nu(1-nu) = 3/16 for both allowed nu: the two towers live in the
    same potential and differ only through the boundary behavior at 0.
    """
    _check_nu(nu)
    alpha = p.require_alpha()
    if not x > 0:
        raise ValueError(f"x must be positive, got {x}")
    return -alpha / x - p.hbar ** 2 * nu * (1.0 - nu) / (2.0 * p.mass * x * x)


def energy(n: int, nu: float, p: PhysicalParams) -> float:
    """epsilon_n = -m alpha^2 / (2 hbar^2 (n + nu)^2)."""
    _check_nu(nu)
    _check_n(n)
    alpha = p.require_alpha()
    lam = n + nu
    return -p.mass * alpha * alpha / (2.0 * p.hbar ** 2 * lam * lam)


def beta(n: int, nu: float, p: PhysicalParams) -> float:
    """Inverse length scale of state (n, nu): beta = 2 m alpha / (hbar^2 (n+nu))."""
    _check_nu(nu)
    _check_n(n)
    return 2.0 * p.mass * p.require_alpha() / (p.hbar ** 2 * (n + nu))


def log_normalization(n: int, nu: float, p: PhysicalParams) -> float:
    """log of C_n = (sqrt(m alpha)/hbar) (n+nu)^-1 Gamma(2 nu)^-1
    sqrt(Gamma(n + 2 nu)/n!)."""
    _check_nu(nu)
    _check_n(n)
    alpha = p.require_alpha()
    return (0.5 * math.log(p.mass * alpha) - math.log(p.hbar)
            - math.log(n + nu) - log_gamma(2.0 * nu)
            + 0.5 * (log_gamma(n + 2.0 * nu) - log_gamma(n + 1.0)))


def normalization_constant(n: int, nu: float, p: PhysicalParams) -> float:
    return math.exp(log_normalization(n, nu, p))


def _radial(log_c: float, n: int, nu: float, y: float) -> float:
    """exp(log_c) y^nu e^(-y/2) F(-n, 2 nu, y) for y > 0, safe at huge y.

    Far beyond the last polynomial oscillation the value drops below the
    smallest subnormal and exactly 0.0 is returned; that underflow is
    part of the contract, not an error.
    """
    two_nu = 2.0 * nu
    if y <= _DIRECT_Y_MAX:
        return math.exp(log_c) * y ** nu * math.exp(-0.5 * y) * kummer_series(-float(n), two_nu, y)
    log_f, sign = log_kummer_polynomial(n, two_nu, y)
    exponent = log_c + nu * math.log(y) - 0.5 * y + log_f
    if exponent < _LOG_UNDERFLOW or sign == 0.0:
        return 0.0
    return sign * math.exp(exponent)


def wavefunction(n: int, nu: float, p: PhysicalParams, x):
    """Normalized bound-state wavefunction Phi_n at x > 0 (scalar or array)."""
    log_c = log_normalization(n, nu, p)  # validates n, nu, alpha
    b = beta(n, nu, p)
    if isinstance(x, np.ndarray):
        flat = x.astype(float).ravel()
        if flat.size and not np.all(flat > 0):
            raise ValueError("x must be positive everywhere on the grid")
        out = np.fromiter((_radial(log_c, n, nu, b * xi) for xi in flat),
                          dtype=float, count=flat.size)
        return out.reshape(x.shape)
    if not x > 0:
        raise ValueError(f"x must be positive, got {x}")
    return _radial(log_c, n, nu, b * x)


def extended_wavefunction(n: int, nu: float, p: PhysicalParams, y: float) -> complex:
    """Parity-extended eigenfunction on the full y line (y = beta x).

    Built from the half-line shape phi(|y|) with a constant phase on the
    negative side and an overall 1/sqrt(2):

        Phi(y) = phi(y)/sqrt(2)                 for y > 0,
        Phi(y) = e^(i pi nu) phi(-y)/sqrt(2)    for y < 0,

    where phi is normalized to unit L2 norm in the y variable, so the
    full-line norm is again 1.  The ratio Phi(-y)/Phi(y) is exactly the
    phase e^(i pi nu).  y = 0 is the singular point of the potential
    and is rejected.
    """
    if isinstance(y, complex):
        raise ValueError("y must be a real number")
    if y == 0:
        raise ValueError("y = 0 is the singular point; the extension is defined for y != 0")
    # unit norm in y instead of x: divide out the sqrt(beta) Jacobian
    log_c = log_normalization(n, nu, p) - 0.5 * math.log(beta(n, nu, p))
    r = _INV_SQRT2 * _radial(log_c, n, nu, abs(y))
    if y > 0:
        return complex(r, 0.0)
    return cmath.exp(1j * math.pi * nu) * r


@dataclass(frozen=True)
class BranchSelection:
    """Why one origin exponent survives for a given nu.

    retained_exponent is the power of the kept solution Phi ~ y^nu at
    the origin; rejected_exponent is the power of the discarded second
    solution of the reduced equation (the factor multiplying
    y^nu e^(-y/2)), which behaves like y^(1 - 2 nu).
    """

    nu: float
    retained_exponent: float
    rejected_exponent: float
    reason: str
    detail: str
    quantization: str


def boundary_selection_report(nu: float) -> BranchSelection:
    """Report which solution branch survives at the origin and why."""
    _check_nu(nu)
    if nu == 0.75:
        reason = "singular second solution"
        detail = (
            "writing Phi = y^nu e^(-y/2) Q(y), the second solution carries "
            "Q ~ y^(1-2nu) = y^(-1/2), which diverges at the origin and is "
            "discarded; the surviving branch must then terminate, which pins "
            "the spectrum to lambda = n + nu.")
    else:
        reason = "incompatible double quantization"
        detail = (
            "both origin behaviors are finite here, but keeping both would "
            "demand lambda - 1/4 and lambda - 3/4 to be nonnegative integers "
            "at once, impossible since they differ by 1/2; requiring a "
            "nonvanishing regular part Q(0) != 0 removes the second branch "
            "and leaves the single tower lambda = n + nu.")
    return BranchSelection(
        nu=nu,
        retained_exponent=nu,
        rejected_exponent=1.0 - 2.0 * nu,
        reason=reason,
        detail=detail,
        quantization="lambda = n + nu",
    )
