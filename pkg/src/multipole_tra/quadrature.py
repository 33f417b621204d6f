"""Generalized Gauss-Laguerre rules and the ``<n|y^-2|m>`` matrix elements."""
import math
from dataclasses import dataclass

import numpy as np

from .exceptions import DomainError
from .linalg import SymTridiag, symtri_eigen
from .polys import laguerre_normalized

__all__ = [
    "QuadratureRule",
    "gauss_laguerre",
    "default_quad_points",
    "inverse_square_elements",
    "is_regularized",
]


@dataclass(frozen=True)
class QuadratureRule:
    """Gauss rule for the weight ``y**alpha * exp(-y)`` on ``(0, inf)``."""

    alpha: float
    nodes: np.ndarray
    weights: np.ndarray

    def integrate(self, f):
        return float(np.dot(self.weights, f(self.nodes)))


def gauss_laguerre(alpha, K):
    """Golub-Welsch construction from the K x K Jacobi matrix."""
    if not alpha > -1:
        raise DomainError(f"Gauss-Laguerre needs alpha > -1, got {alpha}")
    if K < 1:
        raise DomainError(f"need at least one node, got K={K}")
    k = np.arange(K, dtype=float)
    jacobi = SymTridiag(2 * k + alpha + 1, np.sqrt((k[1:]) * (k[1:] + alpha)))
    eig = symtri_eigen(jacobi, want_vectors=True)
    weights = math.gamma(alpha + 1) * eig.vectors[0] ** 2
    return QuadratureRule(float(alpha), eig.values, weights)


def default_quad_points(n_basis):
    return n_basis + 50


def inverse_square_elements(gamma, n_basis, K=None):
    """Matrix ``<n|y^-2|m> = A_n A_m int y^(2g-1) e^-y L_n L_m dy``, ``L = L^(2g+1)``.

    For ``gamma > 0`` the weight ``y**(2*gamma-1)`` is integrable and a rule
    with that exponent integrates the polynomial remainder exactly once
    ``K >= n_basis``.  For ``gamma == 0`` the integral diverges; it is then
    replaced by the fixed-order rule of the basis weight ``y**(2*gamma+1)``
    applied to ``y**-2`` times the integrand, so the result depends on ``K``
    (see :func:`is_regularized`).
    """
    if gamma < 0:
        raise DomainError(f"gamma must be >= 0, got {gamma}")
    if K is None:
        K = default_quad_points(n_basis)
    nu = 2 * gamma + 1
    if is_regularized(gamma):
        rule = gauss_laguerre(nu, K)
        extra = rule.nodes ** -2.0
    else:
        if K < n_basis:
            raise DomainError(f"need K >= n_basis for exact elements, got K={K}")
        rule = gauss_laguerre(2 * gamma - 1, K)
        extra = np.ones_like(rule.nodes)
    # sqrt(w) folded into the recursion keeps tail products finite
    phi = laguerre_normalized(nu, rule.nodes, n_basis - 1, scale=np.sqrt(rule.weights))
    mat = (phi * extra) @ phi.T
    return 0.5 * (mat + mat.T)


def is_regularized(gamma):
    """True when ``<n|y^-2|m>`` diverges and only a fixed-order value exists."""
    return gamma == 0
