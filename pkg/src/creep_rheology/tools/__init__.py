"""
Tools module for creep-rheology.
"""

from creep_rheology.tools.creep_tools import cmd_creep, cmd_rate
from creep_rheology.tools.figure_tools import cmd_figures
from creep_rheology.tools.relaxation_tools import cmd_relax
from creep_rheology.tools.spectrum_tools import cmd_spectrum
from creep_rheology.tools.validation_tools import cmd_validate

__all__ = [
    "cmd_creep",
    "cmd_figures",
    "cmd_rate",
    "cmd_relax",
    "cmd_spectrum",
    "cmd_validate",
]
