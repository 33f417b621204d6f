"""Finite Bessel-polynomial (TRA) representation of the bound states.

Given a bound energy ``E`` the basis ``phi_n(x) = x^mu e^(-1/2x) Y_n^mu(x)``,
``x = 1/(lambda r)``, with::

    lambda = 2 sqrt(-2E),    mu = -Q / sqrt(-2E)

makes the wave operator tridiagonal, and the expansion coefficients obey a
three-term recursion.  Up to a known factor ``G_n`` they are the polynomials
``B_n^mu(z; sigma)`` with ``sigma = -1/(p sqrt(-2E))`` and
``z = -(gamma+1/2)^2 / (p sqrt(-2E))``.

Both coefficient routes are run in exact rational arithmetic on the
(binary-exact) float parameters and rounded once at the end: the sequences
swing over many orders of magnitude and a float64 forward recursion loses up
to ~1e-3 relative accuracy to cancellation for the larger ``gamma`` values.
"""
import math
from dataclasses import dataclass, replace
from fractions import Fraction

import numpy as np
from scipy.integrate import trapezoid

from .exceptions import DomainError
from .polys import (
    bessel_eval,
    b_poly_recurrence,
    laguerre_normalized,
    log_pochhammer,
    max_degree,
)

__all__ = [
    "TraState",
    "WavefunctionTable",
    "default_r_grid",
    "tra_parameters",
    "expansion_coefficients",
    "bpoly_coefficients",
    "g_factors",
    "tra_wavefunction",
    "hmd_wavefunction",
    "overlay_compare",
    "count_nodes",
]

COEFFICIENT_RTOL = 1e-12


@dataclass(frozen=True)
class TraState:
    E: float
    Q: float
    p: float
    gamma: float
    mu: float
    lam: float
    N: int
    sigma: float
    z: float
    F: np.ndarray | None = None

    @property
    def basis_size(self):
        return self.N + 1


@dataclass(frozen=True)
class WavefunctionTable:
    r: np.ndarray
    values: np.ndarray
    source: str
    k: int | None = None

    def window(self, lo, hi):
        """Restriction to ``lo < r < hi``."""
        keep = (self.r > lo) & (self.r < hi)
        return replace(self, r=self.r[keep], values=self.values[keep])


def default_r_grid(r_min=0.01, r_max=80.0, points=600):
    return np.geomspace(r_min, r_max, points)


def tra_parameters(E, params):
    if not E < 0:
        raise DomainError(f"TRA basis needs a bound energy E < 0, got {E}")
    if not params.p > 0:
        raise DomainError(f"TRA solution needs p > 0, got p={params.p}")
    s = math.sqrt(-2 * E)
    mu = -params.Q / s
    N = max_degree(mu)
    if N < 0:
        raise DomainError(f"no TRA basis: mu={mu} is not below -1/2")
    ps = params.p * s
    return TraState(
        E=E,
        Q=params.Q,
        p=params.p,
        gamma=params.gamma,
        mu=mu,
        lam=2 * s,
        N=N,
        sigma=-1 / ps,
        z=-((params.gamma + 0.5) ** 2) / ps,
    )


def _exact(state):
    mu = Fraction(state.mu)
    lp = Fraction(state.lam) * Fraction(state.p)
    t = (Fraction(state.gamma) + Fraction(1, 2)) ** 2
    return mu, lp, t


def _recursion_exact(state):
    mu, lp, t = _exact(state)
    half = Fraction(1, 2)
    F = [Fraction(1)]
    prev = Fraction(0)
    for n in range(state.N):
        d = n + mu
        if d == 0 or d + 1 == 0:
            raise DomainError(f"coefficient recursion is singular at n={n} (mu={state.mu})")
        lead = lp * (n + 1) / ((d + 1) * (2 * d + 3))
        if lead == 0:
            raise DomainError(f"vanishing leading recursion coefficient at n={n}")
        diag = (d + half) ** 2 + mu * lp / (d * (d + 1))
        lower = lp * (n + 2 * mu) / (d * (2 * d - 1)) if n > 0 else 0
        F.append(((t - diag) * F[n] + lower * prev) / lead)
        prev = F[n]
    return F


def g_factors(mu, N):
    """``G_n = (2n+2mu+1)(2mu+1)_n / ((-1)^n n! (2mu+1))`` for ``n = 0..N``.

    Evaluated in log space; ``(2mu+1)_n`` overflows quickly for large ``|mu|``.
    """
    out = np.empty(N + 1)
    for n in range(N + 1):
        lp_mag, lp_sign = log_pochhammer(2 * mu + 1, n)
        ratio = (2 * n + 2 * mu + 1) / (2 * mu + 1)
        sign = lp_sign * (-1) ** n * (1 if ratio > 0 else -1)
        out[n] = sign * math.exp(lp_mag - math.lgamma(n + 1) + math.log(abs(ratio)))
    return out


def bpoly_coefficients(state):
    """Coefficients rebuilt as ``F_n = G_n B_n^mu(z; sigma)``."""
    if not state.p > 0:
        raise DomainError("B-polynomial route needs p > 0")
    mu, lp, t = _exact(state)
    # sigma = -2/(lambda p) and z = sigma (gamma+1/2)^2 given lambda = 2 sqrt(-2E)
    sigma = Fraction(-2) / lp
    B = b_poly_recurrence(mu, sigma * t, sigma, state.N)
    return g_factors(state.mu, state.N) * np.array([float(b) for b in B])


def expansion_coefficients(state, check=False):
    """``F_0 .. F_N`` (``F_0 = 1``) from the coefficient recursion.

    With ``check=True`` the result is compared against
    :func:`bpoly_coefficients` and a mismatch beyond 1e-12 (relative to the
    largest coefficient) raises ``ArithmeticError``.
    """
    F = np.array([float(f) for f in _recursion_exact(state)])
    if check:
        other = bpoly_coefficients(state)
        err = np.max(np.abs(F - other)) / np.max(np.abs(F))
        if err > COEFFICIENT_RTOL:
            raise ArithmeticError(f"coefficient routes disagree: relative error {err:.3e}")
    return F


def tra_wavefunction(state, r_grid=None, k=None):
    """``psi(r) = (lr)^-mu e^(-lr/2) sum_n F_n Y_n^mu(1/lr)`` with ``f_0 = 1``."""
    r = default_r_grid() if r_grid is None else np.asarray(r_grid, dtype=float)
    if np.any(r <= 0):
        raise DomainError("radial grid must be positive")
    F = state.F if state.F is not None else expansion_coefficients(state)
    lr = state.lam * r
    series = F @ bessel_eval(state.mu, 1.0 / lr, state.N)
    values = np.exp(-state.mu * np.log(lr) - lr / 2) * series
    return WavefunctionTable(r, values, "TRA", k)


def hmd_wavefunction(coefficients, gamma, rho, r_grid=None, k=None):
    """``psi(r) = sum_n c_n A_n y^(g+1) e^(-y/2) L_n^(2g+1)(y)``, ``y = rho r``."""
    r = default_r_grid() if r_grid is None else np.asarray(r_grid, dtype=float)
    if np.any(r < 0):
        raise DomainError("radial grid must be non-negative")
    c = np.asarray(coefficients, dtype=float)
    y = rho * r
    series = c @ laguerre_normalized(2 * gamma + 1, y, c.size - 1)
    with np.errstate(divide="ignore"):
        envelope = np.where(y > 0, np.exp((gamma + 1) * np.log(y) - y / 2), 0.0)
    return WavefunctionTable(r, envelope * series, "HMD", k)


def overlay_compare(a, b):
    """Best scale ``s`` minimizing ``||s a - b||`` and the relative residual.

    Norms use the trapezoid rule in ``r`` on the shared grid.
    """
    if a.r.shape != b.r.shape or not np.array_equal(a.r, b.r):
        raise DomainError("wavefunction tables must share the same radial grid")
    aa = trapezoid(a.values * a.values, a.r)
    bb = trapezoid(b.values * b.values, b.r)
    if aa == 0 or bb == 0:
        raise DomainError("cannot compare a zero-norm wavefunction")
    ab = trapezoid(a.values * b.values, a.r)
    scale = ab / aa
    resid2 = trapezoid((scale * a.values - b.values) ** 2, a.r)
    return float(scale), float(min(1.0, math.sqrt(max(resid2, 0.0) / bb)))


def count_nodes(values, rel_floor=0.05):
    """Sign changes between lobes whose amplitude exceeds ``rel_floor * max|psi|``.

    Samples below the floor are skipped, so round-off wiggles in the tails and
    the low-amplitude oscillations of a truncated series near the origin are
    not counted as nodes.
    """
    v = np.asarray(values, dtype=float)
    big = v[np.abs(v) > rel_floor * np.max(np.abs(v))]
    signs = np.sign(big)
    return int(np.count_nonzero(signs[1:] != signs[:-1]))
