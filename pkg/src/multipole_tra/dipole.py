"""Dipole coupling matrix and the effective angular quantum numbers gamma.

For a point dipole ``d`` along z, the angular problem couples partial waves
``l = m, m+1, ...``; the values ``(gamma + 1/2)**2`` are the eigenvalues of a
symmetric tridiagonal matrix in that partial-wave basis.
"""
from dataclasses import dataclass

import numpy as np

from .exceptions import ConvergenceError, DomainError
from .linalg import SymTridiag, symtri_eigen

__all__ = [
    "DEFAULT_SIZE",
    "DipoleSpec",
    "GammaSpectrum",
    "build_dipole_matrix",
    "gamma_spectrum",
]

DEFAULT_SIZE = 400


@dataclass(frozen=True)
class DipoleSpec:
    d: float
    m: int = 0
    size: int = DEFAULT_SIZE

    def __post_init__(self):
        if self.d < 0:
            raise DomainError(f"dipole moment must be >= 0, got {self.d}")
        if int(self.m) != self.m:
            raise DomainError(f"m must be an integer, got {self.m}")
        # the matrix only depends on |m|
        object.__setattr__(self, "m", abs(int(self.m)))
        if self.size < 1:
            raise DomainError(f"truncation size must be >= 1, got {self.size}")


@dataclass(frozen=True)
class GammaSpectrum:
    t_values: np.ndarray
    gammas: np.ndarray
    excluded: np.ndarray

    @property
    def excluded_count(self):
        return int(self.excluded.size)


def build_dipole_matrix(spec):
    i = np.arange(spec.size, dtype=float)
    m = spec.m
    diag = (i + m + 0.5) ** 2
    j = i[:-1]
    off = -spec.d * np.sqrt((j + 1) * (j + 2 * m + 1) / ((j + m + 1) ** 2 - 0.25))
    return SymTridiag(diag, off)


def _split(t):
    positive = t[t > 0]
    return positive, t[t <= 0]


def gamma_spectrum(spec, count, tol=1e-10):
    """Lowest ``count`` positive eigenvalues ``t`` and ``gamma = -1/2 + sqrt(t)``.

    Non-positive eigenvalues (supercritical channels, complex gamma) are
    returned in ``excluded`` and never converted.  Convergence is checked by
    doubling the truncation size.
    """
    if count < 1:
        raise DomainError(f"count must be >= 1, got {count}")
    if spec.size < count + 20:
        raise DomainError(f"truncation size {spec.size} too small for {count} values")
    t = symtri_eigen(build_dipole_matrix(spec)).values
    t2 = symtri_eigen(
        build_dipole_matrix(DipoleSpec(spec.d, spec.m, 2 * spec.size))
    ).values
    pos, excluded = _split(t)
    pos2, excluded2 = _split(t2)
    if excluded.size != excluded2.size:
        raise ConvergenceError("number of non-positive eigenvalues changed under doubling")
    pos, pos2 = pos[:count], pos2[:count]
    change = np.max(np.abs(pos - pos2))
    if change > tol:
        raise ConvergenceError(
            f"gamma values not converged at size {spec.size}: doubling moves them by {change:.3e}"
        )
    return GammaSpectrum(pos, -0.5 + np.sqrt(pos), excluded)
