import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.special import eval_genlaguerre

from multipole_tra.exceptions import DomainError
from multipole_tra.polys import (
    BesselFamily,
    BPolyParams,
    b_poly_eval,
    bessel_eval,
    bessel_monomials,
    bessel_norm,
    laguerre_eval,
    laguerre_normalized,
    log_gamma,
    log_pochhammer,
    max_degree,
    pochhammer,
)
from multipole_tra.quadrature import gauss_laguerre

SETTINGS = settings(max_examples=60, deadline=None)

mus = st.floats(min_value=-9.0, max_value=-0.6, allow_nan=False)
shifted_mus = st.floats(min_value=-9.0, max_value=-1.6, allow_nan=False)
xs = st.floats(min_value=0.0, max_value=5.0, allow_nan=False)


def y_closed(mu, n, x):
    """Terminating 2F0(-n, n+2mu+1; ; -x) summed term by term."""
    total, term = 0.0, 1.0
    for k in range(n + 1):
        total += term
        term *= (-n + k) * (n + 2 * mu + 1 + k) * (-x) / (k + 1)
    return total


def poly_val(coef, x):
    return np.polynomial.polynomial.polyval(x, coef)


def abs_scale(coef, x):
    return poly_val(np.abs(coef), abs(x))


# --- Gamma / Pochhammer -----------------------------------------------------

def test_pochhammer_examples():
    assert log_pochhammer(2.5, 0) == (0.0, 1)
    mag, sign = log_pochhammer(3, 2)
    assert sign == 1 and math.exp(mag) == pytest.approx(12, rel=1e-14)
    mag, sign = log_pochhammer(-14.2, 3)
    assert sign == -1
    assert math.exp(mag) == pytest.approx(2286.768, rel=1e-13)


def test_pochhammer_zero_factor_names_index():
    with pytest.raises(DomainError, match="k=2"):
        log_pochhammer(-2.0, 4)


@given(st.floats(min_value=-20, max_value=20), st.integers(min_value=0, max_value=12))
@SETTINGS
def test_pochhammer_matches_product(a, n):
    factors = [a + k for k in range(n)]
    if any(abs(f) < 1e-6 for f in factors):
        return
    assert pochhammer(a, n) == pytest.approx(math.prod(factors), rel=1e-12)


@pytest.mark.parametrize("x", [0.5, 1.0, 3.7, 25.0, 150.0, -0.5, -2.5, -7.3])
def test_log_gamma_against_math_gamma(x):
    mag, sign = log_gamma(x)
    assert sign * math.exp(mag) == pytest.approx(math.gamma(x), rel=1e-13)


@pytest.mark.parametrize("x", [0, -1, -4])
def test_log_gamma_poles(x):
    with pytest.raises(DomainError):
        log_gamma(x)


# --- Bessel family ----------------------------------------------------------

def test_max_degree_is_strict():
    assert max_degree(-3.0) == 2
    assert max_degree(-3.5) == 2  # -mu-1/2 = 3 is excluded
    assert max_degree(-3.51) == 3
    assert max_degree(-0.5) == -1


def test_family_validation():
    BesselFamily(-3.0, 2)
    with pytest.raises(DomainError):
        BesselFamily(-3.0, 3)
    with pytest.raises(DomainError):
        BesselFamily(-0.5, 0)
    with pytest.raises(DomainError):
        bessel_eval(-3.0, 0.5, 3)


def test_bessel_examples():
    y = bessel_eval(-3.0, 0.5, 2)
    assert y[0] == 1.0
    assert y[1] == pytest.approx(-1.0, abs=1e-14)
    assert y[2] == pytest.approx(-0.5, abs=1e-14)


def test_bessel_vector_shape():
    x = np.linspace(0, 2, 7).reshape(7, 1)
    assert bessel_eval(-4.2, x, 3).shape == (4, 7, 1)


@given(mus, xs)
@SETTINGS
def test_bessel_matches_hypergeometric_sum(mu, x):
    N = max_degree(mu)
    y = bessel_eval(mu, x, N)
    coef = bessel_monomials(mu, N)
    for n in range(N + 1):
        ref = y_closed(mu, n, x)
        assert abs(y[n] - ref) <= 1e-11 * max(1.0, abs_scale(coef[n], x))


@pytest.mark.parametrize("mu,n,expected", [(-3.0, 0, 24.0), (-3.0, 1, 8.0), (-3.0, 2, 12.0)])
def test_bessel_norm_examples(mu, n, expected):
    assert bessel_norm(mu, n) == pytest.approx(expected, rel=1e-13)


def test_bessel_norm_out_of_range():
    with pytest.raises(DomainError):
        bessel_norm(-3.0, 3)


@given(mus, xs)
@SETTINGS
def test_recursion_residual(mu, x):
    N = max_degree(mu)
    y = bessel_eval(mu, x, N)
    for n in range(N):
        d = n + mu
        a = -mu / (d * (d + 1))
        b = n / (d * (2 * d + 1))
        c = (n + 2 * mu + 1) / ((d + 1) * (2 * d + 1))
        lower = y[n - 1] if n else 0.0
        resid = 2 * x * y[n] - (a * y[n] - b * lower + c * y[n + 1])
        scale = max(abs(a * y[n]), abs(b * lower), abs(c * y[n + 1]))
        assert abs(resid) <= 1e-12 * max(1.0, abs(y[n]) * abs(x), scale)


@given(mus)
@SETTINGS
def test_differential_equation(mu):
    P = np.polynomial.polynomial
    N = max_degree(mu)
    coef = bessel_monomials(mu, N)
    pts = np.linspace(0.05, 4.0, 20)
    for n in range(N + 1):
        c = coef[n]
        d1, d2 = P.polyder(c), P.polyder(c, 2)
        t1 = pts**2 * P.polyval(pts, d2)
        t2 = (1 + 2 * pts * (mu + 1)) * P.polyval(pts, d1)
        t3 = n * (n + 2 * mu + 1) * P.polyval(pts, c)
        scale = np.abs(t1) + np.abs(t2) + np.abs(t3) + 1.0
        assert np.all(np.abs(t1 + t2 - t3) <= 1e-10 * scale)


@given(shifted_mus)
@SETTINGS
def test_forward_shift(mu):
    P = np.polynomial.polynomial
    N = max_degree(mu)
    here = bessel_monomials(mu, N)
    up = bessel_monomials(mu + 1, N - 1) if N >= 1 else None
    for n in range(1, N + 1):
        lhs = P.polyder(here[n])
        rhs = n * (n + 2 * mu + 1) * up[n - 1][: lhs.size]
        assert np.allclose(lhs, rhs, rtol=1e-12, atol=1e-12 * np.max(np.abs(lhs)))


@given(mus, st.floats(min_value=0.05, max_value=4.0))
@SETTINGS
def test_lowering_identity(mu, x):
    # x^2 Y_n' = -(2 mu x + 1) Y_n + Y_{n+1}^{mu-1}
    P = np.polynomial.polynomial
    N = max_degree(mu)
    coef = bessel_monomials(mu, N)
    down = bessel_eval(mu - 1, x, N + 1)
    for n in range(N + 1):
        y = P.polyval(x, coef[n])
        lhs = x**2 * P.polyval(x, P.polyder(coef[n]))
        rhs = -(2 * mu * x + 1) * y + down[n + 1]
        scale = abs(lhs) + abs((2 * mu * x + 1) * y) + abs(down[n + 1])
        assert abs(lhs - rhs) <= 1e-10 * max(scale, 1e-300)


@given(mus, st.floats(min_value=0.05, max_value=4.0))
@SETTINGS
def test_parameter_lowering_three_term(mu, x):
    N = max_degree(mu)
    y = bessel_eval(mu, x, N)
    down = bessel_eval(mu - 1, x, N + 1)
    for n in range(N):
        d = n + mu
        terms = [
            (n + 1) * (n + 2 * mu) / (d * (d + 1)) * y[n],
            n * (n + 1) / (d * (2 * d + 1)) * (y[n - 1] if n else 0.0),
            (n + 2 * mu) * (n + 2 * mu + 1) / ((d + 1) * (2 * d + 1)) * y[n + 1],
        ]
        lhs = 2 * down[n + 1]
        scale = sum(abs(t) for t in terms) + abs(lhs)
        assert abs(lhs - sum(terms)) <= 1e-10 * scale


@given(mus, st.floats(min_value=0.05, max_value=4.0))
@SETTINGS
def test_backward_shift(mu, x):
    P = np.polynomial.polynomial
    N = max_degree(mu)
    coef = bessel_monomials(mu, N)
    y = bessel_eval(mu, x, N)
    for n in range(N):
        d = n + mu
        lhs = 2 * x**2 * P.polyval(x, P.polyder(coef[n]))
        k = n * (n + 2 * mu + 1)
        terms = [
            -k * y[n] / (d * (d + 1)),
            k * (y[n - 1] if n else 0.0) / (d * (2 * d + 1)),
            k * y[n + 1] / ((d + 1) * (2 * d + 1)),
        ]
        scale = sum(abs(t) for t in terms) + abs(lhs)
        assert abs(lhs - sum(terms)) <= 1e-10 * max(scale, 1e-300)


@given(mus)
@SETTINGS
def test_orthogonality(mu):
    N = max_degree(mu)
    # x = 1/u maps the weight x^(2mu) e^(-1/x) dx to u^(-2mu-2) e^(-u) du;
    # u^(2N) clears the negative powers of u from Y_n Y_m.
    alpha = -2 * mu - 2 - 2 * N
    rule = gauss_laguerre(alpha, N + 2)
    vals = bessel_eval(mu, 1.0 / rule.nodes, N) * rule.nodes**N
    gram = (vals * rule.weights) @ vals.T
    diag = np.diag(gram)
    norms = np.array([bessel_norm(mu, n) for n in range(N + 1)])
    assert np.all(norms > 0)
    assert np.allclose(diag / norms, 1.0, rtol=0, atol=1e-8)
    off = gram - np.diag(diag)
    ratio = np.abs(off) / np.sqrt(np.outer(diag, diag))
    assert np.max(ratio) <= 1e-8


def _away_from_half_integers(mu):
    frac = (2 * mu) % 1.0
    return min(frac, 1 - frac) > 0.05


@given(
    st.floats(min_value=-6.0, max_value=-0.6).filter(_away_from_half_integers),
    st.floats(min_value=0.05, max_value=3.0),
    st.floats(min_value=-0.99, max_value=0.99),
)
@SETTINGS
def test_generating_function(mu, x, frac):
    t = frac * 0.1 / (4 * x)
    y = bessel_eval(mu, x, 12, formal=True)
    partial = sum(y[n] * t**n / math.factorial(n) for n in range(13))
    r = math.sqrt(1 - 4 * x * t)
    closed = 2 ** (2 * mu) / r * (1 + r) ** (-2 * mu) * math.exp(2 * t / (1 + r))
    assert partial == pytest.approx(closed, rel=1e-8)


@given(mus, st.floats(min_value=0.1, max_value=10.0))
@SETTINGS
def test_laguerre_bridge(mu, x):
    N = max_degree(mu)
    y = bessel_eval(mu, x, N)
    coef = bessel_monomials(mu, N)
    for n in range(N + 1):
        nu = -(2 * n + 2 * mu + 1)
        bridge = math.factorial(n) * (-x) ** n * laguerre_eval(nu, 1 / x, n)[n]
        assert abs(y[n] - bridge) <= 1e-10 * abs_scale(coef[n], x)


# --- Laguerre ---------------------------------------------------------------

def test_laguerre_examples():
    assert laguerre_eval(3.0, 2.0, 1)[1] == pytest.approx(2.0)
    assert laguerre_eval(0.7, 9.0, 0)[0] == 1.0
    assert laguerre_eval(1.0, 1.0, 2)[2] == pytest.approx(0.5, abs=1e-15)


@given(st.floats(min_value=-0.9, max_value=12.0), st.floats(min_value=0.0, max_value=40.0))
@SETTINGS
def test_laguerre_against_scipy(nu, x):
    ours = laguerre_eval(nu, x, 10)
    for n in range(11):
        assert ours[n] == pytest.approx(eval_genlaguerre(n, nu, x), rel=1e-9, abs=1e-9)


def test_normalized_laguerre_orthonormal():
    nu = 2.4
    rule = gauss_laguerre(nu, 40)
    vals = laguerre_normalized(nu, rule.nodes, 15, scale=np.sqrt(rule.weights))
    assert np.allclose(vals @ vals.T, np.eye(16), atol=1e-12)


def test_normalized_laguerre_rejects_bad_nu():
    with pytest.raises(DomainError):
        laguerre_normalized(-1.0, 1.0, 3)


# --- B polynomials ----------------------------------------------------------

def test_b_poly_examples():
    b = b_poly_eval(BPolyParams(mu=-3.0, z=-1.0, sigma=-0.2), 2)
    assert b[0] == 1.0
    assert b[1] == pytest.approx(0.75, abs=1e-14)
    b = b_poly_eval(BPolyParams(mu=-3.0, z=1.0, sigma=0.0), 1)
    assert b[1] == pytest.approx(0.0, abs=1e-15)


def test_b_poly_degree_limit():
    with pytest.raises(DomainError):
        b_poly_eval(BPolyParams(mu=-3.0, z=0.0, sigma=1.0), 3)
    with pytest.raises(DomainError):
        BPolyParams(mu=-0.4, z=0.0, sigma=1.0)


@given(mus, st.floats(-5, 5), st.floats(-2, 2))
@SETTINGS
def test_b_poly_finite_for_admissible_degrees(mu, z, sigma):
    N = max_degree(mu)
    b = b_poly_eval(BPolyParams(mu, z, sigma), N)
    assert b[0] == 1.0
    assert np.all(np.isfinite(b))
