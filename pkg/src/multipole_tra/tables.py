"""Energy tables: quadrupole shifts for d = 0 and dipole-channel spectra."""
from dataclasses import dataclass

import numpy as np

from .dipole import DEFAULT_SIZE, DipoleSpec, gamma_spectrum
from .hmd import HmdConfig, PhysicalParams, coulomb_baseline, solve_spectrum

__all__ = ["ChannelRow", "quadrupole_shift_table", "dipole_channel_table"]


def quadrupole_shift_table(Q=2.0, p=5.0, ls=(0, 1, 2, 3), kmax=8, config=None):
    """``E_k - E_k^C`` for each ``l`` in ``ls`` (columns) and ``k < kmax`` (rows).

    Missing states (fewer than ``kmax`` bound levels) are NaN.
    """
    config = config or HmdConfig()
    out = np.full((kmax, len(ls)), np.nan)
    for j, l in enumerate(ls):
        spec = solve_spectrum(PhysicalParams(Q=Q, p=p, gamma=float(l)), config)
        for k, e in enumerate(spec.energies[:kmax]):
            out[k, j] = e - coulomb_baseline(Q, l, k)
    return out


@dataclass(frozen=True)
class ChannelRow:
    m: int
    t: float
    gamma: float | None
    energies: np.ndarray | None

    @property
    def skipped(self):
        return self.gamma is None


def dipole_channel_table(
    Q=1.0, d=5.0, p=3.0, ms=(0, 1, 2), count=4, kmax=4, config=None, size=DEFAULT_SIZE
):
    """Per ``m``: supercritical channels (skipped) then ``count`` gamma channels.

    Each gamma channel carries its lowest ``kmax`` energies.
    """
    config = config or HmdConfig()
    rows = []
    for m in ms:
        gs = gamma_spectrum(DipoleSpec(d, m, size), count)
        for t in gs.excluded:
            rows.append(ChannelRow(m, float(t), None, None))
        for t, g in zip(gs.t_values, gs.gammas):
            params = PhysicalParams(Q=Q, p=p, gamma=float(g), d=d, m=m)
            e = solve_spectrum(params, config).energies[:kmax]
            rows.append(ChannelRow(m, float(t), float(g), e))
    return rows
