"""
Angular channels of a dipole field
==================================

A point dipole couples neighbouring partial waves, so the orbital quantum
number ``l`` stops being a good label.  The centrifugal term keeps its form
``gamma (gamma + 1) / 2 r^2`` but ``gamma`` must now be read off the
eigenvalues ``t = (gamma + 1/2)^2`` of an infinite tridiagonal matrix.
"""
# %%
import numpy as np

from multipole_tra import DipoleSpec, build_dipole_matrix, gamma_spectrum

# %%
# With no dipole the matrix is diagonal and ``gamma`` is just ``l = i + m``.
print(gamma_spectrum(DipoleSpec(d=0.0, m=1), count=4).gammas)

# %%
# Switching the dipole on mixes the channels.  Look at the corner of the
# truncated matrix for ``d = 5``, ``m = 1``:
t = build_dipole_matrix(DipoleSpec(d=5.0, m=1, size=400))
print(np.round(t.leading(4).to_dense(), 4))

# %%
# For a strong enough dipole the lowest eigenvalue turns negative.  Then
# ``gamma`` is complex and the channel has no place in a bound-state
# calculation, so it is reported separately instead of converted.
for m in (0, 1, 2):
    gs = gamma_spectrum(DipoleSpec(d=5.0, m=m), count=4)
    print(f"m={m}: gamma = {np.round(gs.gammas, 9)}  excluded t = {np.round(gs.excluded, 4)}")

# %%
# Shrinking the dipole pulls every gamma back to its integer value.
for d in (5.0, 2.0, 0.5, 0.0):
    print(d, np.round(gamma_spectrum(DipoleSpec(d=d, m=2), count=3).gammas, 6))
