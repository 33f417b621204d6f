"""Quick invariant checks behind ``multipole-tra selfcheck``."""
from dataclasses import dataclass

import numpy as np

from . import reference_data as ref
from .dipole import DipoleSpec, gamma_spectrum
from .hmd import HmdConfig, PhysicalParams, coulomb_baseline, solve_spectrum
from .polys import bessel_eval, bessel_norm, max_degree
from .quadrature import gauss_laguerre, inverse_square_elements
from .tables import quadrupole_shift_table
from .tra import bpoly_coefficients, expansion_coefficients, tra_parameters

__all__ = ["CheckResult", "run_selfcheck"]


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _hydrogenic():
    worst = 0.0
    for Q in (1.0, 2.0):
        for g in (0.0, 1.0):
            e = solve_spectrum(PhysicalParams(Q=Q, p=0.0, gamma=g)).energies[:6]
            exact = [coulomb_baseline(Q, g, k) for k in range(6)]
            worst = max(worst, float(np.max(np.abs(e - exact))))
    return worst <= 1e-8, f"max |E - E_exact| = {worst:.2e}"


def _bessel_orthogonality():
    mu = -5.3
    N = max_degree(mu)
    # u = 1/x turns the weight x^(2mu) e^(-1/x) into u^(-2mu-2) e^(-u)
    alpha = -2 * mu - 2 - 2 * N
    rule = gauss_laguerre(alpha, N + 2)
    y = bessel_eval(mu, 1.0 / rule.nodes, N) * rule.nodes**N
    gram = (y * rule.weights) @ y.T
    norms = np.array([bessel_norm(mu, n) for n in range(N + 1)])
    diag_err = float(np.max(np.abs(np.diag(gram) / norms - 1)))
    off = float(np.max(np.abs(gram - np.diag(np.diag(gram)))) / np.min(np.diag(gram)))
    return diag_err <= 1e-8 and off <= 1e-8, f"norm err {diag_err:.2e}, off-diag {off:.2e}"


def _inverse_square():
    m = inverse_square_elements(1.0, 2)
    err = max(abs(m[0, 0] - 1 / 6), abs(m[0, 1] - 1 / 6))
    return err <= 1e-11, f"|<0|y^-2|0,1> - 1/6| = {err:.2e}"


def _gammas():
    worst = 0.0
    for m, rows in ref.DIPOLE_CHANNELS.items():
        gs = gamma_spectrum(DipoleSpec(5.0, m), len(rows))
        worst = max(worst, float(np.max(np.abs(gs.gammas - [g for g, _ in rows]))))
        if gs.excluded_count != ref.CHANNEL_EXCLUDED[m]:
            return False, f"m={m}: {gs.excluded_count} excluded channels"
    return worst <= 1e-7, f"max |gamma - reference| = {worst:.2e}"


def _table1_l1():
    got = quadrupole_shift_table(ls=(1,))[:, 0]
    err = float(np.max(np.abs(got - ref.QUADRUPOLE_SHIFTS[1])))
    return err <= 1e-6, f"max deviation error (l=1) = {err:.2e}"


def _tra_routes():
    params = PhysicalParams(Q=2.0, p=5.0, gamma=1.0)
    spec = solve_spectrum(params, HmdConfig())
    worst = 0.0
    sizes = []
    for k in range(8):
        st = tra_parameters(spec.energies[k], params)
        sizes.append(st.N - k)
        a, b = expansion_coefficients(st), bpoly_coefficients(st)
        worst = max(worst, float(np.max(np.abs(a - b)) / np.max(np.abs(a))))
    ok = worst <= 1e-12 and all(s == 2 for s in sizes)
    return ok, f"route mismatch {worst:.2e}; N - k = {sorted(set(sizes))}"


CHECKS = [
    ("hydrogenic spectrum", _hydrogenic),
    ("Bessel orthogonality", _bessel_orthogonality),
    ("<n|y^-2|m> closed form", _inverse_square),
    ("dipole gamma values", _gammas),
    ("quadrupole shifts l=1", _table1_l1),
    ("TRA coefficient routes and N = k+2", _tra_routes),
]


def run_selfcheck():
    return [CheckResult(name, *fn()) for name, fn in CHECKS]
