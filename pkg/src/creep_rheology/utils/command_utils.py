from typing import Any, Callable, Dict, Tuple, Type

from creep_rheology.tools.common import CommandResponse
from creep_rheology.tools.creep_tools import CreepParams, RateParams
from creep_rheology.tools.creep_tools import cmd_creep as cmd_creep_tool
from creep_rheology.tools.creep_tools import cmd_rate as cmd_rate_tool
from creep_rheology.tools.figure_tools import FiguresParams
from creep_rheology.tools.figure_tools import cmd_figures as cmd_figures_tool
from creep_rheology.tools.relaxation_tools import RelaxParams
from creep_rheology.tools.relaxation_tools import cmd_relax as cmd_relax_tool
from creep_rheology.tools.spectrum_tools import SpectrumParams
from creep_rheology.tools.spectrum_tools import cmd_spectrum as cmd_spectrum_tool
from creep_rheology.tools.validation_tools import ValidateParams
from creep_rheology.tools.validation_tools import cmd_validate as cmd_validate_tool

ParamsModel = Type[Any]

# Define the structure of the command definition tuple
CommandDefinition = Tuple[
    Callable,  # Implementation function
    ParamsModel,  # Pydantic model for parameters
    Type,  # Return type annotation
    str,  # Description
    str,  # Serialization method ('model_dump', 'text')
]


def get_command_definitions() -> Dict[str, CommandDefinition]:
    """
    Returns a dictionary containing definitions for all available commands.

    Returns:
        Dict[str, CommandDefinition]: A dictionary mapping command names to their definitions.
    """
    command_definitions: Dict[str, CommandDefinition] = {
        "creep": (
            cmd_creep_tool,
            CreepParams,
            CommandResponse,
            "Tabulate the creep functions of the Becker and Lomnitz models",
            "text",
        ),
        "rate": (
            cmd_rate_tool,
            RateParams,
            CommandResponse,
            "Tabulate the rates of creep of both models",
            "text",
        ),
        "relax": (
            cmd_relax_tool,
            RelaxParams,
            CommandResponse,
            "Solve the relaxation equation and tabulate the relaxation functions",
            "text",
        ),
        "spectrum": (
            cmd_spectrum_tool,
            SpectrumParams,
            CommandResponse,
            "Tabulate the retardation spectra of both models",
            "text",
        ),
        "figures": (
            cmd_figures_tool,
            FiguresParams,
            CommandResponse,
            "Reproduce the comparison figures as CSV tables and SVG charts",
            "model_dump",
        ),
        "validate": (
            cmd_validate_tool,
            ValidateParams,
            CommandResponse,
            "Run the validation suite against independent oracles",
            "text",
        ),
    }
    return command_definitions
