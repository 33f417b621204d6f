"""Bessel, Laguerre and TRA ("B") polynomial families.

All three families are evaluated by forward three-term recursion.  The Bessel
polynomials ``Y_n^mu(x)`` and the ``B_n^mu(z; sigma)`` family only form a
finite orthogonal set, ``n = 0..N`` with ``N`` the largest integer strictly
below ``-mu - 1/2``, so degrees are checked against that bound instead of
worrying about recursion stability.
"""
import math
from dataclasses import dataclass

import numpy as np

from .exceptions import DomainError

__all__ = [
    "BesselFamily",
    "BPolyParams",
    "max_degree",
    "log_gamma",
    "log_pochhammer",
    "pochhammer",
    "bessel_eval",
    "bessel_monomials",
    "bessel_norm",
    "laguerre_eval",
    "laguerre_normalized",
    "b_poly_eval",
    "b_poly_recurrence",
]


def max_degree(mu):
    """Largest integer strictly less than ``-mu - 1/2``.

    Returns -1 when no degree is admissible (``mu >= -1/2``).
    """
    return math.ceil(-mu - 0.5) - 1


@dataclass(frozen=True)
class BesselFamily:
    mu: float
    n_max: int

    def __post_init__(self):
        if not self.mu < -0.5:
            raise DomainError(f"Bessel family needs mu < -1/2, got mu={self.mu}")
        if self.n_max < 0:
            raise DomainError(f"n_max must be >= 0, got {self.n_max}")
        if self.n_max > max_degree(self.mu):
            raise DomainError(
                f"degree {self.n_max} exceeds N={max_degree(self.mu)} for mu={self.mu}"
            )

    @property
    def N(self):
        return max_degree(self.mu)


@dataclass(frozen=True)
class BPolyParams:
    mu: float
    z: float
    sigma: float

    def __post_init__(self):
        if not self.mu < -0.5:
            raise DomainError(f"B polynomials need mu < -1/2, got mu={self.mu}")


def log_gamma(x):
    """Return ``(log|Gamma(x)|, sign Gamma(x))``.

    Poles (non-positive integers) raise :class:`DomainError`.
    """
    if x <= 0 and float(x).is_integer():
        raise DomainError(f"Gamma has a pole at {x}")
    value = math.lgamma(x)
    if x > 0:
        return value, 1
    # reflection: Gamma(x) < 0 on (-1, 0), (-3, -2), ...
    return value, (-1 if math.floor(-x) % 2 == 0 else 1)


def log_pochhammer(a, n):
    """Rising factorial ``(a)_n = a (a+1) ... (a+n-1)`` as ``(log|.|, sign)``."""
    if n < 0:
        raise DomainError(f"Pochhammer length must be >= 0, got {n}")
    log_mag = 0.0
    sign = 1
    for k in range(n):
        factor = a + k
        if factor == 0:
            raise DomainError(f"Pochhammer ({a})_{n} vanishes: factor k={k} is zero")
        log_mag += math.log(abs(factor))
        if factor < 0:
            sign = -sign
    return log_mag, sign


def pochhammer(a, n):
    log_mag, sign = log_pochhammer(a, n)
    return sign * math.exp(log_mag)


def _bessel_coeffs(mu, n):
    # 2x Y_n = a Y_n - b Y_{n-1} + c Y_{n+1}
    d = n + mu
    a = -mu / (d * (d + 1))
    b = n / (d * (2 * d + 1))
    c = (n + 2 * mu + 1) / ((d + 1) * (2 * d + 1))
    return a, b, c


def _check_bessel_degree(mu, n_max, formal):
    if formal:
        if n_max < 0:
            raise DomainError(f"n_max must be >= 0, got {n_max}")
        return
    BesselFamily(mu, n_max)


def bessel_eval(mu, x, n_max, *, formal=False):
    """Evaluate ``Y_0^mu(x) .. Y_{n_max}^mu(x)``.

    Returns an array of shape ``(n_max + 1,) + np.shape(x)``.  With
    ``formal=True`` the recursion is continued past ``N`` (used for
    generating-function checks); the result is then not part of the
    orthogonal family.
    """
    _check_bessel_degree(mu, n_max, formal)
    x = np.asarray(x, dtype=float)
    out = np.empty((n_max + 1,) + x.shape)
    out[0] = 1.0
    prev = np.zeros_like(x)
    for n in range(n_max):
        a, b, c = _bessel_coeffs(mu, n)
        out[n + 1] = ((2 * x - a) * out[n] + b * prev) / c
        prev = out[n]
    return out


def bessel_monomials(mu, n_max, *, formal=False):
    """Monomial coefficients of ``Y_n^mu``: row ``n`` holds ``c_j`` of ``x**j``.

    Built from the same recursion as :func:`bessel_eval`, so derivative
    identities can be checked exactly on coefficient vectors.
    """
    _check_bessel_degree(mu, n_max, formal)
    coef = np.zeros((n_max + 1, n_max + 1))
    coef[0, 0] = 1.0
    for n in range(n_max):
        a, b, c = _bessel_coeffs(mu, n)
        row = -a * coef[n]
        row[1:] += 2 * coef[n, :-1]
        if n > 0:
            row += b * coef[n - 1]
        coef[n + 1] = row / c
    return coef


def bessel_norm(mu, n):
    """Squared norm ``-n! Gamma(-n-2mu) / (2n+2mu+1)`` of ``Y_n^mu``."""
    if n < 0 or n > max_degree(mu):
        raise DomainError(f"degree {n} outside 0..{max_degree(mu)} for mu={mu}")
    lg, sg = log_gamma(-n - 2 * mu)
    return -sg * math.exp(math.lgamma(n + 1) + lg) / (2 * n + 2 * mu + 1)


def laguerre_eval(nu, x, n_max):
    """Generalized Laguerre polynomials ``L_0^nu(x) .. L_{n_max}^nu(x)``.

    The recursion itself is valid for any real ``nu``; the Bessel bridge
    ``Y_n^mu(x) = n! (-x)^n L_n^{-(2n+2mu+1)}(1/x)`` relies on that.
    """
    x = np.asarray(x, dtype=float)
    out = np.empty((n_max + 1,) + x.shape)
    out[0] = 1.0
    if n_max >= 1:
        out[1] = nu + 1 - x
    for n in range(1, n_max):
        out[n + 1] = ((2 * n + nu + 1 - x) * out[n] - (n + nu) * out[n - 1]) / (n + 1)
    return out


def laguerre_normalized(nu, x, n_max, scale=None):
    """``A_n L_n^nu(x)`` with ``A_n = sqrt(n!/Gamma(n+nu+1))``.

    These are orthonormal under the weight ``x**nu * exp(-x)``.  ``scale``
    (same shape as ``x``) multiplies every row; passing square-root quadrature
    weights keeps large-node products in range.
    """
    if not nu > -1:
        raise DomainError(f"normalized Laguerre needs nu > -1, got {nu}")
    x = np.asarray(x, dtype=float)
    out = np.empty((n_max + 1,) + x.shape)
    out[0] = math.exp(-0.5 * math.lgamma(nu + 1))
    if scale is not None:
        out[0] = out[0] * np.asarray(scale, dtype=float)
    prev = np.zeros_like(out[0])
    for n in range(n_max):
        out[n + 1] = (
            (2 * n + nu + 1 - x) * out[n] - math.sqrt(n * (n + nu)) * prev
        ) / math.sqrt((n + 1) * (n + nu + 1))
        prev = out[n]
    return out


def b_poly_recurrence(mu, z, sigma, n_max):
    """Forward recursion for ``B_n^mu(z; sigma)`` on plain Python numbers.

    Works unchanged on ``fractions.Fraction`` inputs, which is how the TRA
    module gets exact coefficients.  Returns a list of length ``n_max + 1``.
    """
    half = mu / mu / 2  # 1/2 in the arithmetic of ``mu``
    values = [mu / mu]
    prev = 0 * mu
    for n in range(n_max):
        d = n + mu
        lead = (n + 2 * mu + 1) / ((d + 1) * (d + half))
        if lead == 0:
            raise DomainError(f"B recursion leading coefficient vanishes at n={n}")
        diag = -2 * mu / (d * (d + 1)) + sigma * (d + half) ** 2
        lower = n / (d * (d + half))
        values.append(((z - diag) * values[n] + lower * prev) / lead)
        prev = values[n]
    return values


def b_poly_eval(params, n_max):
    """``B_0 .. B_{n_max}`` for ``params = BPolyParams(mu, z, sigma)``."""
    if n_max > max_degree(params.mu):
        raise DomainError(
            f"degree {n_max} exceeds N={max_degree(params.mu)} for mu={params.mu}"
        )
    vals = b_poly_recurrence(float(params.mu), float(params.z), float(params.sigma), n_max)
    return np.array(vals, dtype=float)
