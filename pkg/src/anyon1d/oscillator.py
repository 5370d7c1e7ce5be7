"""Half-line harmonic oscillator states.

Wavefunctions are the textbook Hermite-Gaussian eigenfunctions, carried
on u >= 0 with an extra sqrt(2) so the half-line norm is 1.  The even
(N = 2n) and odd (N = 2n + 1) towers are the s = 0 and s = 1/2 inputs
of the duality map.
"""

from __future__ import annotations

import math

import numpy as np

from .core import PhysicalParams
from .specfun import hermite, log_gamma

_LN2 = math.log(2.0)


def _check_level(N) -> None:
    if not isinstance(N, int) or isinstance(N, bool) or N < 0:
        raise ValueError(f"level N must be a nonnegative integer, got {N!r}")


def energy(N: int, p: PhysicalParams) -> float:
    """E_N = hbar omega (N + 1/2)."""
    _check_level(N)
    return p.hbar * p.require_omega() * (N + 0.5)


def wavefunction(N: int, p: PhysicalParams, u):
    """Half-line normalized eigenfunction at u >= 0 (scalar or array).

    Psi_N(u) = sqrt(2) (m w / pi hbar)^(1/4) (2^N N!)^(-1/2)
               H_N(u sqrt(m w / hbar)) exp(-m w u^2 / 2 hbar),
    so that the integral of Psi_N^2 over [0, inf) equals 1.
    """
    _check_level(N)
    omega = p.require_omega()
    arr = np.asarray(u, dtype=float)
    if np.any(arr < 0):
        raise ValueError("u must be nonnegative on the half line")
    scale = math.sqrt(p.mass * omega / p.hbar)
    z = arr * scale
    log_norm = (0.25 * math.log(p.mass * omega / (math.pi * p.hbar))
                + 0.5 * _LN2
                - 0.5 * (N * _LN2 + log_gamma(N + 1.0)))
    values = np.exp(log_norm - 0.5 * z * z) * hermite(N, z)
    if np.isscalar(u) or getattr(u, "ndim", 1) == 0:
        return float(values)
    return values


def mean_square_displacement(N: int, p: PhysicalParams) -> float:
    """<u^2> in level N of the full-line oscillator: (N + 1/2) hbar / (m w)."""
    _check_level(N)
    return (N + 0.5) * p.hbar / (p.mass * p.require_omega())
