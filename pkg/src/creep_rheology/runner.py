"""
Creep-rheology command runner

This module dispatches named commands: it validates their arguments, executes
them and turns every failure into a response carrying the matching exit code.
"""

import json
import logging
from typing import Any, Dict, Union

from pydantic import ValidationError

from creep_rheology.tools.common import CommandResponse
from creep_rheology.utils.command_utils import get_command_definitions
from creep_rheology.utils.config import RunConfig
from creep_rheology.utils.errors import (
    DomainError,
    ExitCode,
    FigureConfigError,
    PrecisionFloorError,
    QuadratureConvergenceError,
    SolverInternalError,
    SolverNumericalError,
)

logger = logging.getLogger(__name__)


def serialize_command_output(response: CommandResponse, serialization: str) -> str:
    """Serializes a command response to the text printed on stdout."""
    if serialization == "text" and response.output is not None:
        return response.output
    if serialization == "model_dump":
        return json.dumps(response.model_dump(mode="json", exclude={"output"}), indent=2) + "\n"
    return response.output or ""


def _failure(message: str, exit_code: ExitCode) -> CommandResponse:
    return CommandResponse(success=False, message=message, exit_code=exit_code)


class CreepRheologyRunner:
    """
    Command runner for creep-rheology.

    Holds the run configuration and the command registry; each call validates
    the arguments against the command's params model before executing it.
    """

    def __init__(self, config: Union[Dict, RunConfig]):
        """
        Initialize the runner.

        Args:
            config: Run configuration, either as a dictionary or RunConfig object.
        """
        if isinstance(config, dict):
            self.config = RunConfig(**config)
        else:
            self.config = config
        self.command_definitions = get_command_definitions()

    def call_command(self, name: str, arguments: Dict[str, Any]) -> CommandResponse:
        """
        Execute a command.

        Args:
            name: The name of the command to call.
            arguments: The arguments for the command as a dictionary.

        Returns:
            CommandResponse: The command's response, or a failure response whose
            exit code classifies the error.
        """
        logger.debug(f"Received call for command '{name}'")
        if name not in self.command_definitions:
            logger.error(f"Unknown command: {name}")
            return _failure(f"Unknown command: {name}", ExitCode.USAGE)

        impl_func, params_model, _return_annotation, _description, _serialization = (
            self.command_definitions[name]
        )

        try:
            params = params_model(**arguments)
            logger.debug(f"Parsed arguments for command '{name}': {params}")
        except ValidationError as e:
            logger.error(f"Invalid arguments for command '{name}': {e}")
            return _failure(f"Invalid arguments for command '{name}': {e}", ExitCode.USAGE)

        try:
            return impl_func(self.config, params)
        except (ValidationError, DomainError, ValueError) as e:
            logger.error(f"Command '{name}' rejected its input: {e}")
            return _failure(f"{name}: {e}", ExitCode.USAGE)
        except OSError as e:
            # FigureConfigError is an OSError
            kind = "figure config" if isinstance(e, FigureConfigError) else "I/O"
            logger.error(f"Command '{name}' failed with {kind} error: {e}")
            return _failure(f"{name}: {kind} error: {e}", ExitCode.IO)
        except SolverNumericalError as e:
            logger.error(f"Command '{name}' failed at step {e.index} (t={e.time:.6g}): {e}")
            return _failure(
                f"{name}: solver failed at index {e.index} (t={e.time:.6g}): {e}",
                ExitCode.NUMERICAL,
            )
        except (SolverInternalError, QuadratureConvergenceError, PrecisionFloorError) as e:
            logger.error(f"Command '{name}' failed numerically: {e}")
            return _failure(f"{name}: numerical failure: {e}", ExitCode.NUMERICAL)

    def render(self, name: str, response: CommandResponse) -> str:
        """Text for stdout according to the command's serialization method."""
        definition = self.command_definitions.get(name)
        serialization = definition[4] if definition else ""
        return serialize_command_output(response, serialization)
