"""
Tests for the command-line interface.
"""

import io
import os
import tempfile
import unittest
from contextlib import redirect_stdout

from creep_rheology.cli import build_arguments, build_parser, create_config, main, parse_args
from creep_rheology.utils.command_utils import get_command_definitions
from creep_rheology.utils.config import GridScale
from creep_rheology.utils.errors import ExitCode


def run_cli(argv):
    stdout = io.StringIO()
    with redirect_stdout(stdout):
        try:
            main(argv)
        except SystemExit as e:
            return e.code, stdout.getvalue()
    raise AssertionError("main() did not exit")


class TestParseArgs(unittest.TestCase):
    """Tests for flag parsing and argument mapping."""

    def test_creep_defaults(self):
        args = parse_args(["creep"])
        arguments = build_arguments(args)
        self.assertEqual(
            arguments["grid"],
            {"t_min": 0.0, "t_max": 10.0, "points": 101, "scale": GridScale.LINEAR},
        )
        self.assertEqual(arguments["out"]["columns"], ["psi_becker", "psi_lomnitz"])
        self.assertEqual(arguments["out"]["format"], "csv")

    def test_spectrum_defaults(self):
        arguments = build_arguments(parse_args(["spectrum"]))
        self.assertEqual(arguments["grid"]["t_min"], 1e-2)
        self.assertEqual(arguments["grid"]["t_max"], 1e3)
        self.assertEqual(arguments["grid"]["scale"], GridScale.LOG)

    def test_relax_flags(self):
        args = parse_args(["relax", "--tmax", "20", "--step", "0.01", "--scale", "log"])
        arguments = build_arguments(args)
        self.assertEqual(arguments["grid_max"], 20.0)
        self.assertEqual(arguments["step"], 0.01)
        self.assertEqual(arguments["scale"], "log")
        self.assertNotIn("points", arguments)

    def test_columns_flag(self):
        args = parse_args(["creep", "--columns", "time, j_becker"])
        self.assertEqual(build_arguments(args)["out"]["columns"], ["time", "j_becker"])

    def test_help_lists_command_descriptions(self):
        help_text = " ".join(build_parser().format_help().split())
        for name, definition in get_command_definitions().items():
            with self.subTest(command=name):
                self.assertIn(name, help_text)
                self.assertIn(definition[3], help_text)

    def test_validate_flags(self):
        args = parse_args(["validate", "--step", "0.5", "--spectrum-normalization", "2"])
        self.assertEqual(build_arguments(args), {"step": 0.5, "spectrum_normalization": 2.0})

    def test_material_flags(self):
        config = create_config(parse_args(["rate", "--q", "0.3", "--tau0", "2", "--ju", "4"]))
        material = config.material
        self.assertEqual((material.q, material.tau0, material.j_u), (0.3, 2.0, 4.0))

    def test_unknown_subcommand(self):
        with self.assertRaises(SystemExit):
            parse_args(["plot"])


class TestMain(unittest.TestCase):
    """End-to-end runs of the CLI entry point."""

    def test_creep_to_stdout(self):
        code, out = run_cli(["creep", "--tmax", "10", "--points", "11"])
        self.assertEqual(code, ExitCode.OK)
        lines = out.split("\n")
        self.assertEqual(lines[0], "t,psi_becker,psi_lomnitz")
        self.assertEqual(lines[1], "0,0,0")
        self.assertEqual(len(lines), 13)

    def test_rate_first_row(self):
        code, out = run_cli(["rate", "--points", "3"])
        self.assertEqual(code, ExitCode.OK)
        self.assertEqual(out.split("\n")[1], "0,1,1")

    def test_invalid_grid_is_usage_error(self):
        code, out = run_cli(["creep", "--scale", "log", "--tmin", "0"])
        self.assertEqual(code, ExitCode.USAGE)
        self.assertEqual(out, "")

    def test_invalid_material_is_usage_error(self):
        code, _ = run_cli(["creep", "--q", "-1"])
        self.assertEqual(code, ExitCode.USAGE)

    def test_unwritable_output_is_io_error(self):
        with tempfile.TemporaryDirectory() as tmp:
            code, _ = run_cli(["creep", "--out", os.path.join(tmp, "no", "creep.csv")])
        self.assertEqual(code, ExitCode.IO)

    def test_files_written(self):
        with tempfile.TemporaryDirectory() as tmp:
            csv_path = os.path.join(tmp, "spectrum.json")
            svg_path = os.path.join(tmp, "spectrum.svg")
            code, out = run_cli(
                ["spectrum", "--format", "json", "--out", csv_path, "--svg", svg_path]
            )
            self.assertEqual(code, ExitCode.OK)
            self.assertEqual(out, "")
            self.assertTrue(os.path.isfile(csv_path))
            self.assertTrue(os.path.isfile(svg_path))

    def test_relax_small_grid(self):
        code, out = run_cli(["relax", "--tmax", "1", "--step", "0.1"])
        self.assertEqual(code, ExitCode.OK)
        self.assertEqual(out.split("\n")[1], "0,1,1")
        self.assertEqual(len(out.strip().split("\n")), 12)

    def test_validate_negative_control(self):
        code, out = run_cli(["validate", "--step", "0.5"])
        self.assertEqual(code, ExitCode.VALIDATION)
        self.assertIn("FAIL", out)


if __name__ == "__main__":
    unittest.main()
