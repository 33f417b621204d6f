"""
Closed-form wavefunctions from a finite Bessel-polynomial series
================================================================

At a bound energy ``E`` the basis ``x^mu e^(-1/2x) Y_n^mu(x)`` with
``x = 1 / lambda r`` turns the wave equation into a three-term recursion
for the expansion coefficients.  The Bessel family is finite, so the series
stops at ``N``, the largest integer below ``-mu - 1/2``.  Here that series is
laid over the Laguerre-basis eigenvector of the same state.
"""
# %%
import numpy as np

from multipole_tra import (
    PhysicalParams,
    count_nodes,
    expansion_coefficients,
    bpoly_coefficients,
    hmd_wavefunction,
    overlay_compare,
    solve_spectrum,
    tra_parameters,
    tra_wavefunction,
)

params = PhysicalParams(Q=2.0, p=5.0, gamma=1.0)
spec = solve_spectrum(params)

# %%
# The series length grows as the level approaches threshold: ``N = k + 2``.
for k in range(8):
    st = tra_parameters(spec.energies[k], params)
    print(f"k={k}  E={spec.energies[k]:.9f}  mu={st.mu:.6f}  N={st.N}")

# %%
# The coefficients come from the recursion directly, or as ``G_n B_n`` with
# the B polynomials.  Both routes agree to rounding.
st = tra_parameters(spec.energies[3], params)
print(expansion_coefficients(st))
print(bpoly_coefficients(st))

# %%
# Overlay after optimal scaling.  Both routes show ``k`` nodes; the relative
# residual measures how far the truncated series is from the converged state.
r = np.linspace(0.05, 60.0, 4001)[1:-1]
curves = {}
for k in range(4):
    st = tra_parameters(spec.energies[k], params)
    a = tra_wavefunction(st, r, k)
    b = hmd_wavefunction(spec.coefficients[:, k], 1.0, 2.0, r, k)
    scale, residual = overlay_compare(b, a)
    curves[k] = (a.values, scale * b.values)
    print(f"k={k}  nodes {count_nodes(a.values)}/{count_nodes(b.values)}  residual {residual:.3f}")

# %%
# With matplotlib installed, save the picture.
try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    fig, axes = plt.subplots(2, 2, figsize=(9, 6), sharex=True)
    for k, ax in enumerate(axes.flat):
        tra, hmd = curves[k]
        ax.plot(r, tra, color="tab:blue", label="Bessel series")
        ax.plot(r, hmd, "--", color="tab:red", label="Laguerre basis")
        ax.set_title(f"k = {k}")
        ax.set_xlim(0, 40)
    axes[0, 0].legend()
    fig.tight_layout()
    fig.savefig("overlay.png", dpi=120)
    print("wrote overlay.png")
