"""Real symmetric eigenproblems (tridiagonal, dense, and generalized).

Eigenvalue solves are delegated to LAPACK through :mod:`scipy.linalg`; the
tridiagonal Cholesky factor used to reduce ``H v = E B v`` is computed here so
that a failed pivot can be reported by index.
"""
from dataclasses import dataclass

import numpy as np
import scipy.linalg as sla

from .exceptions import ConvergenceError, DomainError, NotPositiveDefiniteError

__all__ = [
    "SymTridiag",
    "EigenResult",
    "check_symmetric",
    "symtri_eigen",
    "cholesky_tridiag",
    "generalized_sym_eigen",
]


@dataclass(frozen=True)
class SymTridiag:
    diag: np.ndarray
    offdiag: np.ndarray

    def __post_init__(self):
        diag = np.asarray(self.diag, dtype=float).reshape(-1)
        off = np.asarray(self.offdiag, dtype=float).reshape(-1)
        if diag.size == 0:
            raise DomainError("empty tridiagonal matrix")
        if off.size != diag.size - 1:
            raise DomainError(
                f"offdiag has length {off.size}, expected {diag.size - 1}"
            )
        if not (np.all(np.isfinite(diag)) and np.all(np.isfinite(off))):
            raise DomainError("tridiagonal matrix has non-finite entries")
        object.__setattr__(self, "diag", diag)
        object.__setattr__(self, "offdiag", off)

    @property
    def n(self):
        return self.diag.size

    def to_dense(self):
        return np.diag(self.diag) + np.diag(self.offdiag, 1) + np.diag(self.offdiag, -1)

    def leading(self, size):
        """The leading ``size x size`` block."""
        return SymTridiag(self.diag[:size], self.offdiag[: size - 1])


@dataclass(frozen=True)
class EigenResult:
    values: np.ndarray
    vectors: np.ndarray | None = None


def check_symmetric(a, rtol=1e-13):
    a = np.asarray(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DomainError(f"expected a square matrix, got shape {a.shape}")
    scale = max(np.max(np.abs(a)), np.finfo(float).tiny) if a.size else 1.0
    if np.max(np.abs(a - a.T), initial=0.0) > rtol * scale:
        raise DomainError("matrix is not symmetric")
    return a


def _sorted(values, vectors):
    # LAPACK already returns ascending order; a stable sort pins tie order.
    order = np.argsort(values, kind="stable")
    values = values[order]
    if vectors is not None:
        vectors = vectors[:, order]
    return EigenResult(values, vectors)


def symtri_eigen(t, want_vectors=False):
    """All eigenvalues (ascending) and optionally eigenvectors of ``t``."""
    if t.n == 1:
        vecs = np.ones((1, 1)) if want_vectors else None
        return EigenResult(t.diag.copy(), vecs)
    try:
        if want_vectors:
            w, v = sla.eigh_tridiagonal(t.diag, t.offdiag, lapack_driver="stev")
        else:
            w = sla.eigh_tridiagonal(
                t.diag, t.offdiag, eigvals_only=True, lapack_driver="stev"
            )
            v = None
    except sla.LinAlgError as exc:
        raise ConvergenceError(f"tridiagonal eigensolver failed: {exc}") from exc
    return _sorted(w, v)


def cholesky_tridiag(b):
    """Lower-bidiagonal Cholesky factor of an SPD tridiagonal matrix.

    Returns ``(diag, sub)`` so that ``L = diag(diag) + diag(sub, -1)``.
    """
    n = b.n
    d = np.empty(n)
    s = np.empty(n - 1)
    pivot = b.diag[0]
    for i in range(n):
        if i > 0:
            s[i - 1] = b.offdiag[i - 1] / d[i - 1]
            pivot = b.diag[i] - s[i - 1] ** 2
        if not pivot > 0:
            raise NotPositiveDefiniteError(i, pivot)
        d[i] = np.sqrt(pivot)
    return d, s


def _bidiag_dense(d, s):
    return np.diag(d) + np.diag(s, -1)


def generalized_sym_eigen(h, b, want_vectors=False):
    """Solve ``h v = lambda b v`` for symmetric ``h`` and SPD tridiagonal ``b``.

    ``b = L L^T`` is factored, the standard problem for
    ``C = L^{-1} h L^{-T}`` is solved densely, and eigenvectors are mapped
    back as ``v = L^{-T} w`` (``b``-orthonormal).
    """
    h = check_symmetric(h)
    if h.shape[0] != b.n:
        raise DomainError(f"order mismatch: H is {h.shape[0]}, B is {b.n}")
    d, s = cholesky_tridiag(b)
    lower = _bidiag_dense(d, s)
    tmp = sla.solve_triangular(lower, h, lower=True)
    c = sla.solve_triangular(lower, tmp.T, lower=True)
    c = 0.5 * (c + c.T)
    try:
        if want_vectors:
            w, v = sla.eigh(c, driver="evr")
            v = sla.solve_triangular(lower, v, lower=True, trans="T")
        else:
            w = sla.eigh(c, eigvals_only=True, driver="evr")
            v = None
    except sla.LinAlgError as exc:
        raise ConvergenceError(f"dense eigensolver failed: {exc}") from exc
    return _sorted(w, v)
