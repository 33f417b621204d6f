"""Bound states of an electron in a Coulomb + dipole + effective quadrupole field.

Two routes are provided: Hamiltonian diagonalization in a Laguerre basis
(:mod:`multipole_tra.hmd`) for the energies, and the finite Bessel-polynomial
tridiagonal representation (:mod:`multipole_tra.tra`) for closed-form
wavefunctions at those energies.
"""
from .dipole import DipoleSpec, GammaSpectrum, build_dipole_matrix, gamma_spectrum
from .exceptions import ConvergenceError, DomainError, NotPositiveDefiniteError
from .hmd import (
    EnergySpectrum,
    HmdConfig,
    PhysicalParams,
    PlateauReport,
    coulomb_baseline,
    hamiltonian_matrix,
    overlap_matrix,
    plateau_scan,
    pps_diagnostic,
    solve_spectrum,
)
from .tra import (
    TraState,
    WavefunctionTable,
    bpoly_coefficients,
    count_nodes,
    expansion_coefficients,
    hmd_wavefunction,
    overlay_compare,
    tra_parameters,
    tra_wavefunction,
)

__version__ = "0.1.0"
