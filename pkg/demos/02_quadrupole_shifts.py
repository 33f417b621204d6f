"""
How much does a quadrupole move hydrogen-like levels?
=====================================================

Add an effective quadrupole ``p / r^3`` (``p = eta q > 0``) to a Coulomb
charge ``Q`` and diagonalize in a Laguerre basis.  Subtracting the Coulomb
energies ``-Q^2 / 2 (k + l + 1)^2`` isolates the quadrupole's effect.
"""
# %%
import numpy as np

from multipole_tra import HmdConfig, PhysicalParams, coulomb_baseline, solve_spectrum
from multipole_tra.tables import quadrupole_shift_table

# %%
# First the sanity check: without a quadrupole the basis reproduces the
# Coulomb spectrum to machine precision.
spec = solve_spectrum(PhysicalParams(Q=2.0, p=0.0, gamma=1.0))
exact = [coulomb_baseline(2.0, 1.0, k) for k in range(5)]
print("hydrogenic error:", np.max(np.abs(spec.energies[:5] - exact)))

# %%
# Now ``Q = 2``, ``p = 5`` with a 150-function basis at ``rho = 2``.
# The repulsive ``1/r^3`` term pushes every level up.  The push is largest
# for low ``l`` and low ``k``, where the electron sits close to the centre.
shifts = quadrupole_shift_table(Q=2.0, p=5.0, config=HmdConfig(150, 2.0))
print("   k        l=0          l=1          l=2          l=3")
for k, row in enumerate(shifts):
    print(f"{k:4d}  " + "  ".join(f"{v:11.9f}" for v in row))

# %%
# The ``l = 0`` column is special: the ``<n|y^-2|m>`` integral diverges for
# ``l = 0`` and only exists as a fixed-order quadrature value.  The spectrum
# object says so.
print("l=0 regularized:", solve_spectrum(PhysicalParams(Q=2.0, p=5.0, gamma=0.0)).regularized)
