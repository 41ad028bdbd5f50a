"""
Command-line interface for creep-rheology.
"""

import argparse
import logging
import sys
from typing import Any, Dict, List, Optional, Sequence

from pydantic import ValidationError

from creep_rheology.runner import CreepRheologyRunner
from creep_rheology.tools.creep_tools import CREEP_COLUMNS, RATE_COLUMNS
from creep_rheology.tools.relaxation_tools import DEFAULT_STEP, RELAX_COLUMNS
from creep_rheology.tools.spectrum_tools import SPECTRUM_COLUMNS
from creep_rheology.utils.command_utils import get_command_definitions
from creep_rheology.utils.config import (
    DEFAULT_FIGURE_CONFIG_PATH,
    GridScale,
    OutputFormat,
    RunConfig,
)
from creep_rheology.utils.errors import ExitCode

# Configure logging
logging.basicConfig(
    level=logging.INFO,
    format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
)
logger = logging.getLogger(__name__)

# Grid defaults per table command: (t_min, t_max, points, scale)
GRID_DEFAULTS = {
    "creep": (0.0, 10.0, 101, GridScale.LINEAR),
    "rate": (0.0, 10.0, 101, GridScale.LINEAR),
    "spectrum": (1e-2, 1e3, 201, GridScale.LOG),
}
DEFAULT_COLUMNS = {
    "creep": CREEP_COLUMNS,
    "rate": RATE_COLUMNS,
    "relax": RELAX_COLUMNS,
    "spectrum": SPECTRUM_COLUMNS,
}
DEFAULT_RELAX_T_MAX = 100.0
DEFAULT_FIGURES_DIR = "figures"


def _common_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(add_help=False)

    material_group = parser.add_argument_group("Material")
    material_group.add_argument("--q", type=float, default=1.0, help="Creep amplitude q")
    material_group.add_argument(
        "--tau0", type=float, default=1.0, help="Characteristic time tau0"
    )
    material_group.add_argument("--ju", type=float, default=1.0, help="Unrelaxed compliance J_U")

    parser.add_argument(
        "--figure-config",
        default=DEFAULT_FIGURE_CONFIG_PATH,
        help="Figure-set YAML file used by 'figures'",
    )
    parser.add_argument("--debug", action="store_true", help="Enable debug logging")
    return parser


def _table_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(add_help=False)
    grid_group = parser.add_argument_group("Grid")
    grid_group.add_argument("--tmin", type=float, help="First sample point")
    grid_group.add_argument("--tmax", type=float, help="Last sample point")
    grid_group.add_argument("--points", type=int, help="Number of sample points")
    grid_group.add_argument(
        "--scale", choices=[s.value for s in GridScale], help="Spacing of the sample points"
    )

    output_group = parser.add_argument_group("Output")
    output_group.add_argument(
        "--format",
        choices=[f.value for f in OutputFormat],
        default=OutputFormat.CSV.value,
        help="Table format",
    )
    output_group.add_argument("--out", help="Table file (stdout when absent)")
    output_group.add_argument("--svg", help="SVG chart file")
    output_group.add_argument("--columns", help="Comma-separated series identifiers")
    return parser


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser with one subcommand per command."""
    common = _common_parser()
    table = _table_parser()
    descriptions = {name: definition[3] for name, definition in get_command_definitions().items()}
    parser = argparse.ArgumentParser(
        prog="creep-rheology",
        description="Becker and Lomnitz creep, relaxation and retardation spectra",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    subparsers.add_parser("creep", parents=[common, table], help=descriptions["creep"])
    subparsers.add_parser("rate", parents=[common, table], help=descriptions["rate"])
    relax = subparsers.add_parser("relax", parents=[common, table], help=descriptions["relax"])
    relax.add_argument("--step", type=float, default=DEFAULT_STEP, help="Solver step")
    subparsers.add_parser("spectrum", parents=[common, table], help=descriptions["spectrum"])

    figures = subparsers.add_parser("figures", parents=[common], help=descriptions["figures"])
    figures.add_argument(
        "--out", default=DEFAULT_FIGURES_DIR, help="Directory receiving the figure files"
    )

    validate = subparsers.add_parser("validate", parents=[common], help=descriptions["validate"])
    validate.add_argument(
        "--step", type=float, default=1e-4, help="Solver step of the small-time check"
    )
    validate.add_argument(
        "--spectrum-normalization",
        type=float,
        default=1.0,
        help="Factor applied to the reconstructed creep in the round-trip check",
    )
    return parser


def parse_args(argv: Optional[Sequence[str]] = None) -> argparse.Namespace:
    """Parse command-line arguments."""
    return build_parser().parse_args(argv)


def create_config(args: argparse.Namespace) -> RunConfig:
    """
    Create the run configuration from command-line arguments.

    Raises:
        ValidationError: If a material parameter is out of range.
    """
    return RunConfig(
        material={"j_u": args.ju, "q": args.q, "tau0": args.tau0},
        figure_config_path=args.figure_config,
        debug=args.debug,
    )


def _columns(args: argparse.Namespace) -> List[str]:
    if args.columns:
        return [column.strip() for column in args.columns.split(",") if column.strip()]
    return list(DEFAULT_COLUMNS[args.command])


def _output_request(args: argparse.Namespace) -> Dict[str, Any]:
    return {
        "format": args.format,
        "path": args.out,
        "chart_path": args.svg,
        "columns": _columns(args),
    }


def build_arguments(args: argparse.Namespace) -> Dict[str, Any]:
    """Map parsed flags onto the arguments of the command's params model."""
    command = args.command
    if command in GRID_DEFAULTS:
        t_min, t_max, points, scale = GRID_DEFAULTS[command]
        return {
            "grid": {
                "t_min": t_min if args.tmin is None else args.tmin,
                "t_max": t_max if args.tmax is None else args.tmax,
                "points": points if args.points is None else args.points,
                "scale": args.scale or scale,
            },
            "out": _output_request(args),
        }
    if command == "relax":
        arguments: Dict[str, Any] = {
            "grid_max": DEFAULT_RELAX_T_MAX if args.tmax is None else args.tmax,
            "step": args.step,
            "scale": args.scale or GridScale.LINEAR,
            "out": _output_request(args),
        }
        if args.tmin is not None:
            arguments["t_min"] = args.tmin
        if args.points is not None:
            arguments["points"] = args.points
        return arguments
    if command == "figures":
        return {"out_dir": args.out}
    return {"step": args.step, "spectrum_normalization": args.spectrum_normalization}


def main(argv: Optional[Sequence[str]] = None) -> None:
    """Main entry point for the CLI."""
    args = parse_args(argv)

    # Configure logging level based on debug flag
    if args.debug:
        logging.getLogger().setLevel(logging.DEBUG)
        logger.debug("Debug logging enabled.")
    else:
        logging.getLogger().setLevel(logging.INFO)

    try:
        config = create_config(args)
    except ValidationError as e:
        logger.error(f"Invalid material parameters: {e}")
        sys.exit(ExitCode.USAGE)

    runner = CreepRheologyRunner(config)
    try:
        response = runner.call_command(args.command, build_arguments(args))
    except Exception as e:
        logger.exception(f"Unexpected error running '{args.command}': {e}")
        sys.exit(ExitCode.USAGE)

    text = runner.render(args.command, response)
    if text:
        sys.stdout.write(text)
        sys.stdout.flush()

    if response.success:
        logger.info(response.message)
    else:
        logger.error(response.message)
    sys.exit(int(response.exit_code))


if __name__ == "__main__":
    main()
