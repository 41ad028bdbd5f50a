"""
Tests for the figure-set command.
"""

import os
import tempfile
import unittest

import yaml

from creep_rheology.tools.figure_tools import (
    FigureDefinition,
    FiguresParams,
    cmd_figures,
    load_figure_set,
)
from creep_rheology.utils.config import DEFAULT_FIGURE_CONFIG_PATH, GridScale, RunConfig
from creep_rheology.utils.errors import FigureConfigError

EXPECTED_FILES = {
    "fig1_creep.csv",
    "fig1a_creep_linear.svg",
    "fig1b_creep_log.svg",
    "fig2_rate.csv",
    "fig2a_rate_linear.svg",
    "fig2b_rate_log.svg",
    "fig3_relaxation.csv",
    "fig3a_relaxation_linear.svg",
    "fig3b_relaxation_log.svg",
    "fig4_spectrum.csv",
    "fig4a_spectrum_linear.svg",
    "fig4b_spectrum_log.svg",
}


def read_csv(path):
    with open(path, encoding="utf-8") as f:
        lines = f.read().strip().split("\n")
    return lines[0].split(","), [[float(v) for v in line.split(",")] for line in lines[1:]]


class TestLoadFigureSet(unittest.TestCase):
    """Tests for loading figure definitions from YAML."""

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmp.cleanup)

    def write(self, text):
        path = os.path.join(self.tmp.name, "figures.yaml")
        with open(path, "w", encoding="utf-8") as f:
            f.write(text)
        return path

    def test_default_figure_set(self):
        figure_set = load_figure_set(DEFAULT_FIGURE_CONFIG_PATH)
        self.assertEqual([f.name for f in figure_set.figures], ["fig1", "fig2", "fig3", "fig4"])
        self.assertEqual(figure_set.figures[2].step, 5e-3)

    def test_missing_file(self):
        with self.assertRaises(FigureConfigError):
            load_figure_set(os.path.join(self.tmp.name, "absent.yaml"))

    def test_invalid_yaml(self):
        with self.assertRaises(FigureConfigError):
            load_figure_set(self.write("figures: [unclosed"))

    def test_not_a_mapping(self):
        with self.assertRaises(FigureConfigError):
            load_figure_set(self.write("- just\n- a list\n"))

    def test_invalid_definition(self):
        bad = {"figures": [{"name": "fig9", "slug": "x", "command": "plot"}]}
        with self.assertRaises(FigureConfigError):
            load_figure_set(self.write(yaml.safe_dump(bad)))

    def test_figure_error_is_os_error(self):
        self.assertTrue(issubclass(FigureConfigError, OSError))


class TestFigureDefinition(unittest.TestCase):
    def test_names_and_sample_points(self):
        figure = FigureDefinition(
            name="fig1",
            slug="creep",
            command="creep",
            title="Creep functions",
            y_label="psi(t)",
            columns=["psi_becker"],
            charts={
                "linear": {"t_min": 0.0, "t_max": 2.0, "points": 3},
                "log": {"t_min": 0.1, "t_max": 10.0, "points": 3, "scale": "log"},
            },
        )
        self.assertEqual(figure.csv_name, "fig1_creep.csv")
        self.assertEqual(figure.svg_name(GridScale.LINEAR), "fig1a_creep_linear.svg")
        self.assertEqual(figure.svg_name(GridScale.LOG), "fig1b_creep_log.svg")
        self.assertEqual(figure.sample_points().tolist(), [0.0, 0.1, 1.0, 2.0, 10.0])


class TestFiguresCommand(unittest.TestCase):
    """Tests for cmd_figures on the shipped figure set."""

    @classmethod
    def setUpClass(cls):
        cls.tmp = tempfile.TemporaryDirectory()
        cls.out_dirs = [os.path.join(cls.tmp.name, f"run{i}") for i in range(2)]
        cls.responses = [
            cmd_figures(RunConfig(), FiguresParams(out_dir=out_dir)) for out_dir in cls.out_dirs
        ]

    @classmethod
    def tearDownClass(cls):
        cls.tmp.cleanup()

    def test_file_set(self):
        for response, out_dir in zip(self.responses, self.out_dirs):
            self.assertTrue(response.success)
            self.assertEqual(set(os.listdir(out_dir)), EXPECTED_FILES)
            self.assertEqual(len(response.files), 12)

    def test_byte_identical_reruns(self):
        for name in sorted(EXPECTED_FILES):
            with self.subTest(name=name):
                contents = []
                for out_dir in self.out_dirs:
                    with open(os.path.join(out_dir, name), "rb") as f:
                        contents.append(f.read())
                self.assertEqual(contents[0], contents[1])

    def test_creep_ordering(self):
        header, rows = read_csv(os.path.join(self.out_dirs[0], "fig1_creep.csv"))
        self.assertEqual(header, ["t", "psi_becker", "psi_lomnitz"])
        times = [row[0] for row in rows]
        self.assertEqual(times, sorted(set(times)))
        self.assertEqual((times[0], times[-1]), (0.0, 100.0))
        for row in rows:
            if row[0] > 0:
                self.assertGreater(row[1], row[2])

    def test_relaxation_ordering(self):
        header, rows = read_csv(os.path.join(self.out_dirs[0], "fig3_relaxation.csv"))
        self.assertEqual(header, ["t", "phi_becker", "phi_lomnitz"])
        self.assertEqual(rows[0][0], 0.0)
        self.assertAlmostEqual(rows[0][1], 1.0, places=15)
        self.assertAlmostEqual(rows[0][2], 1.0, places=15)
        for row in rows[1:]:
            self.assertLess(row[1], row[2])

    def test_becker_spectrum_cut_off(self):
        header, rows = read_csv(os.path.join(self.out_dirs[0], "fig4_spectrum.csv"))
        self.assertEqual(header, ["tau", "r_becker", "r_lomnitz"])
        for tau, r_becker, _ in rows:
            if tau < 1.0:
                self.assertEqual(r_becker, 0.0)
            else:
                self.assertAlmostEqual(r_becker, 1.0 / tau, places=15)

    def test_unwritable_directory(self):
        with tempfile.NamedTemporaryFile() as blocker:
            with self.assertRaises(OSError):
                cmd_figures(RunConfig(), FiguresParams(out_dir=os.path.join(blocker.name, "x")))


if __name__ == "__main__":
    unittest.main()
