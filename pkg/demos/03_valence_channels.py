"""
A valence electron around a polar molecule
==========================================

Neutral core (``Q = 1``) with dipole ``d = 5`` and effective quadrupole
``p = 3``.  Each ``gamma`` channel from the dipole matrix becomes its own
radial problem.
"""
# %%
from multipole_tra.tables import dipole_channel_table

# %%
# Supercritical channels come first in each ``m`` block and are skipped.
for row in dipole_channel_table(Q=1.0, d=5.0, p=3.0):
    if row.skipped:
        print(f"m={row.m}  t={row.t:+.4f}  skipped (complex gamma)")
    else:
        energies = "  ".join(f"{-e:.9f}" for e in row.energies)
        print(f"m={row.m}  gamma={row.gamma:.9f}  -E: {energies}")
