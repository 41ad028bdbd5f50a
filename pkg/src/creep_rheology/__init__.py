"""
Creep Rheology

Creep functions, relaxation functions and retardation spectra of the Becker
and Lomnitz linear viscoelastic models.
"""

__version__ = "0.1.0"

from creep_rheology.models import (
    MaterialParams,
    ModelKind,
    compliance,
    dpsi,
    psi,
    spectrum,
    spectrum_reconstruct,
)
from creep_rheology.runner import CreepRheologyRunner
from creep_rheology.specfun import e1, ein
from creep_rheology.volterra import TimeGrid, estimate_order, solve_relaxation

__all__ = [
    "CreepRheologyRunner",
    "MaterialParams",
    "ModelKind",
    "TimeGrid",
    "compliance",
    "dpsi",
    "e1",
    "ein",
    "estimate_order",
    "psi",
    "solve_relaxation",
    "spectrum",
    "spectrum_reconstruct",
]
