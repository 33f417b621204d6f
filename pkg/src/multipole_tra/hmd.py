"""Bound-state energies by Hamiltonian diagonalization in a Laguerre basis.

Radial problem (atomic units)::

    [-1/2 d2/dr2 + g(g+1)/2r^2 - Q/r + p/r^3 - E] psi(r) = 0

expanded in ``chi_n(y) = A_n y^(g+1) e^(-y/2) L_n^(2g+1)(y)`` with ``y = rho r``.
The overlap matrix of this basis is tridiagonal and the Hamiltonian is
tridiagonal plus the dense ``p/r^3`` block, so the energies are the negative
eigenvalues of a generalized symmetric-definite problem.
"""
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .exceptions import DomainError
from .linalg import SymTridiag, generalized_sym_eigen, symtri_eigen
from .polys import max_degree
from .quadrature import default_quad_points, inverse_square_elements, is_regularized

__all__ = [
    "NEGATIVE_THRESHOLD",
    "PhysicalParams",
    "HmdConfig",
    "EnergySpectrum",
    "PlateauReport",
    "overlap_matrix",
    "hamiltonian_matrix",
    "solve_spectrum",
    "coulomb_baseline",
    "plateau_scan",
    "pps_diagnostic",
]

NEGATIVE_THRESHOLD = -1e-10


@dataclass(frozen=True)
class PhysicalParams:
    """Charge distribution seen by the electron.

    ``p`` is the effective quadrupole moment ``eta * q``.  Give either ``p``
    directly or both ``q`` and ``eta``.  ``gamma`` is the effective angular
    quantum number (``l`` when ``d == 0``).
    """

    Q: float
    gamma: float
    p: float | None = None
    d: float = 0.0
    q: float | None = None
    eta: float | None = None
    m: int = 0

    def __post_init__(self):
        if not self.Q > 0:
            raise DomainError(f"net charge Q must be positive, got {self.Q}")
        if self.eta is not None and not -0.5 <= self.eta <= 1.0:
            raise DomainError(f"eta must lie in [-1/2, 1], got {self.eta}")
        p = self.p
        if self.q is not None and self.eta is not None:
            derived = self.eta * self.q
            if p is not None and not math.isclose(p, derived, rel_tol=1e-12, abs_tol=1e-15):
                raise DomainError(f"p={p} disagrees with eta*q={derived}")
            p = derived
        if p is None:
            raise DomainError("give the quadrupole as p, or as q together with eta")
        if p < 0:
            raise DomainError(f"effective quadrupole p = eta*q must be >= 0, got {p}")
        object.__setattr__(self, "p", float(p))
        if not self.gamma > -0.5:
            raise DomainError(f"gamma must exceed -1/2, got {self.gamma}")
        if self.d < 0:
            raise DomainError(f"dipole moment must be >= 0, got {self.d}")


@dataclass(frozen=True)
class HmdConfig:
    basis_size: int = 150
    rho: float = 2.0
    quad_points: int | None = None

    def __post_init__(self):
        if self.basis_size < 2:
            raise DomainError(f"basis_size must be >= 2, got {self.basis_size}")
        if not self.rho > 0:
            raise DomainError(f"rho must be positive, got {self.rho}")
        if self.quad_points is None:
            object.__setattr__(self, "quad_points", default_quad_points(self.basis_size))


@dataclass(frozen=True)
class EnergySpectrum:
    energies: np.ndarray
    coefficients: np.ndarray
    params: PhysicalParams
    config: HmdConfig
    regularized: bool = False

    @property
    def empty(self):
        return self.energies.size == 0

    def __len__(self):
        return self.energies.size


@dataclass(frozen=True)
class PlateauReport:
    rho_grid: np.ndarray
    traces: np.ndarray
    plateau: tuple[float, float] | None
    chosen_rho: float | None
    plateau_indices: tuple[int, int] | None = field(default=None, repr=False)

    @property
    def empty(self):
        return self.plateau is None


def overlap_matrix(gamma, basis_size):
    if not gamma > -0.5:
        raise DomainError(f"gamma must exceed -1/2, got {gamma}")
    n = np.arange(basis_size, dtype=float)
    k = n[1:]
    return SymTridiag(2 * (n + gamma + 1), -np.sqrt(k * (k + 2 * gamma + 1)))


def hamiltonian_matrix(params, config):
    g, rho, nb = params.gamma, config.rho, config.basis_size
    n = np.arange(nb, dtype=float)
    k = n[1:]
    h = np.diag(rho**2 / 4 * ((n + g + 1) - 4 * params.Q / rho))
    off = rho**2 / 8 * np.sqrt(k * (k + 2 * g + 1))
    h += np.diag(off, 1) + np.diag(off, -1)
    if params.p != 0:
        h += rho**3 * params.p * inverse_square_elements(g, nb, config.quad_points)
    return h


def solve_spectrum(params, config=None):
    """Negative eigenvalues of ``H c = E Omega c`` (ascending) with their vectors.

    Returned coefficient vectors (columns) are Omega-orthonormal.  An empty
    spectrum is a valid result (check ``.empty``).
    """
    config = config or HmdConfig()
    h = hamiltonian_matrix(params, config)
    omega = overlap_matrix(params.gamma, config.basis_size)
    res = generalized_sym_eigen(h, omega, want_vectors=True)
    keep = res.values < NEGATIVE_THRESHOLD
    vecs = res.vectors[:, keep]
    # The reduced problem carries ~eps * ||L^-1 H L^-T|| absolute error (1e-11 at
    # 150 states); the Rayleigh quotient of the localized bound vectors does not.
    energies = np.einsum("ij,ij->j", vecs, h @ vecs) / np.einsum(
        "ij,ij->j", vecs, omega.to_dense() @ vecs
    )
    order = np.argsort(energies, kind="stable")
    energies, vecs = energies[order], vecs[:, order]
    keep = energies < NEGATIVE_THRESHOLD
    return EnergySpectrum(
        energies=energies[keep],
        coefficients=vecs[:, keep],
        params=params,
        config=config,
        regularized=params.p != 0 and is_regularized(params.gamma),
    )


def coulomb_baseline(Q, gamma, k):
    """Hydrogen-like level ``-Q^2 / 2(k + gamma + 1)^2``."""
    if k < 0:
        raise DomainError(f"state index must be >= 0, got {k}")
    return -(Q**2) / (2 * (k + gamma + 1) ** 2)


def _tracked(params, config, n_track):
    e = solve_spectrum(params, config).energies[:n_track]
    out = np.full(n_track, np.nan)
    out[: e.size] = e
    return out


def _longest_flat_window(traces, tol):
    best = None
    n = traces.shape[0]
    for i in range(n):
        if np.any(np.isnan(traces[i])):
            continue
        lo = traces[i].copy()
        hi = traces[i].copy()
        j = i
        while j + 1 < n and not np.any(np.isnan(traces[j + 1])):
            nlo = np.minimum(lo, traces[j + 1])
            nhi = np.maximum(hi, traces[j + 1])
            if np.max(nhi - nlo) > tol:
                break
            lo, hi, j = nlo, nhi, j + 1
        if best is None or j - i > best[1] - best[0]:
            best = (i, j)
    return best


def plateau_scan(params, base_config, rho_grid, n_track=4, tol=1e-8, workers=None):
    """Scan ``rho`` and find the widest stretch where tracked energies are flat.

    The plateau is the longest contiguous run of grid points on which every
    tracked energy varies by at most ``tol``; ``chosen_rho`` is its middle grid
    point.  Grid points are independent and may be solved on ``workers``
    threads; the report does not depend on completion order.
    """
    grid = np.asarray(rho_grid, dtype=float)
    if grid.ndim != 1 or grid.size == 0:
        raise DomainError("rho grid must be a non-empty 1-d sequence")
    if np.any(np.diff(grid) < 0):
        raise DomainError("rho grid must be ascending")
    configs = [
        HmdConfig(base_config.basis_size, float(rho), base_config.quad_points)
        for rho in grid
    ]
    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(lambda c: _tracked(params, c, n_track), configs))
    else:
        rows = [_tracked(params, c, n_track) for c in configs]
    traces = np.array(rows).reshape(grid.size, n_track)
    window = _longest_flat_window(traces, tol)
    if window is None:
        return PlateauReport(grid, traces, None, None, None)
    i, j = window
    return PlateauReport(
        grid, traces, (float(grid[i]), float(grid[j])), float(grid[(i + j) // 2]), (i, j)
    )


def pps_diagnostic(E, params):
    """Energy-dependent tridiagonal matrix of the "potential parameter spectrum".

    Its eigenvalues ``t`` would include ``(gamma + 1/2)**2`` at an exact
    energy.  Returns the matrix and ``min |t_i - (gamma+1/2)**2|``.  This is a
    diagnostic only; it is not accurate enough to locate energies.
    """
    if not E < 0:
        raise DomainError(f"PPS matrix needs E < 0, got {E}")
    s = math.sqrt(-2 * E)
    mu = -params.Q / s
    lp = 2 * s * params.p
    N = max_degree(mu)
    if N < 0:
        raise DomainError(f"no finite basis for E={E}: mu={mu} >= -1/2")
    n = np.arange(N + 1, dtype=float)
    diag = (n + mu + 0.5) ** 2
    if lp != 0:
        denom = (n + mu) * (n + mu + 1)
        if np.any(denom == 0):
            raise DomainError(f"PPS diagonal is singular at mu={mu}")
        diag = diag + mu * lp / denom
    j = n[:-1]
    off = lp / (j + mu + 1) * np.sqrt(
        -(j + 1) * (j + 2 * mu + 1) / ((2 * j + 2 * mu + 1) * (2 * j + 2 * mu + 3))
    )
    mat = SymTridiag(diag, off)
    t = symtri_eigen(mat).values
    gap = float(np.min(np.abs(t - (params.gamma + 0.5) ** 2)))
    return mat, gap
