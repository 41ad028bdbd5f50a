"""
Tests for the material functions and the spectral reconstruction.
"""

import math
import unittest

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st
from pydantic import ValidationError

from creep_rheology.models import (
    MaterialParams,
    ModelKind,
    QuadratureConfig,
    compliance,
    compliance_from_spectrum,
    dpsi,
    psi,
    spectrum,
    spectrum_peak,
    spectrum_reconstruct,
)
from creep_rheology.utils.errors import DomainError, QuadratureConvergenceError


class TestModelKind(unittest.TestCase):
    def test_values(self):
        self.assertEqual(ModelKind.BECKER, "becker")
        self.assertEqual(ModelKind.LOMNITZ, "lomnitz")
        self.assertEqual(ModelKind("lomnitz"), ModelKind.LOMNITZ)


class TestMaterialParams(unittest.TestCase):
    """Tests for the MaterialParams model."""

    def test_defaults(self):
        params = MaterialParams()
        self.assertEqual((params.j_u, params.q, params.tau0), (1.0, 1.0, 1.0))

    def test_rejects_non_positive_and_non_finite(self):
        for field in ("j_u", "q", "tau0"):
            for value in (0.0, -1.0, math.inf, math.nan):
                with self.subTest(field=field, value=value):
                    with self.assertRaises(ValidationError):
                        MaterialParams(**{field: value})

    def test_frozen(self):
        params = MaterialParams()
        with self.assertRaises(ValidationError):
            params.q = 2.0


class TestCreepFunctions(unittest.TestCase):
    """Tests for psi, dpsi and the compliance."""

    def test_values_at_one(self):
        self.assertAlmostEqual(psi(ModelKind.BECKER, 1.0), 0.7965996, places=7)
        self.assertAlmostEqual(psi(ModelKind.LOMNITZ, 1.0), 0.6931472, places=7)
        self.assertAlmostEqual(dpsi(ModelKind.BECKER, 1.0), 0.6321206, places=7)
        self.assertEqual(dpsi(ModelKind.LOMNITZ, 1.0), 0.5)

    def test_origin(self):
        for kind in ModelKind:
            with self.subTest(kind=kind):
                self.assertEqual(psi(kind, 0.0), 0.0)
                self.assertEqual(dpsi(kind, 0.0), 1.0)

    def test_compliance_instantaneous(self):
        """J(0) is the unrelaxed compliance."""
        params = MaterialParams(j_u=2.5, q=0.3, tau0=4.0)
        for kind in ModelKind:
            with self.subTest(kind=kind):
                self.assertEqual(compliance(params, kind, 0.0), 2.5)

    def test_compliance_scaling(self):
        """J(t) = J_U [1 + q psi(t / tau0)]."""
        params = MaterialParams(j_u=2.0, q=0.5, tau0=10.0)
        expected = 2.0 * (1.0 + 0.5 * math.log1p(3.0))
        self.assertAlmostEqual(compliance(params, ModelKind.LOMNITZ, 30.0), expected, places=14)

    def test_compliance_time_reduction(self):
        """J with relaxation time tau0 at t equals J with tau0 = 1 at t / tau0."""
        params = MaterialParams(j_u=1.5, q=0.7, tau0=25.0)
        reduced = params.model_copy(update={"tau0": 1.0})
        for kind in ModelKind:
            for t in (0.0, 0.3, 25.0, 180.0, 4000.0):
                with self.subTest(kind=kind, t=t):
                    self.assertAlmostEqual(
                        compliance(params, kind, t),
                        compliance(reduced, kind, t / params.tau0),
                        places=13,
                    )

    def test_creep_function_shape(self):
        """psi is non-negative and concave with a positive decreasing slope."""
        times = np.linspace(0.0, 50.0, 1001)
        for kind in ModelKind:
            with self.subTest(kind=kind):
                values = np.array([psi(kind, t) for t in times])
                slopes = np.array([dpsi(kind, t) for t in times])
                self.assertTrue(np.all(values >= 0))
                self.assertTrue(np.all(slopes > 0))
                self.assertTrue(np.all(np.diff(slopes) < 0))
                self.assertTrue(np.all(np.diff(values, 2) <= 0))

    def test_negative_time_rejected(self):
        for kind in ModelKind:
            with self.subTest(kind=kind):
                with self.assertRaises(DomainError):
                    psi(kind, -1.0)
                with self.assertRaises(DomainError):
                    dpsi(kind, -1.0)

    @given(st.floats(min_value=1e-6, max_value=1e4, allow_nan=False, allow_infinity=False))
    @settings(max_examples=200, deadline=None)
    def test_becker_creeps_more(self, t):
        """psi_B(t) > psi_L(t) for every positive t."""
        self.assertGreater(psi(ModelKind.BECKER, t), psi(ModelKind.LOMNITZ, t))

    def test_long_time_rate(self):
        """t psi'(t) tends to 1 for both models."""
        for kind in ModelKind:
            with self.subTest(kind=kind):
                value = 1000.0 * dpsi(kind, 1000.0)
                self.assertGreaterEqual(value, 0.99)
                self.assertLessEqual(value, 1.0 + 1e-12)


class TestSpectrum(unittest.TestCase):
    """Tests for the closed-form retardation spectra."""

    def test_becker_step(self):
        self.assertEqual(spectrum(ModelKind.BECKER, 0.5), 0.0)
        self.assertEqual(spectrum(ModelKind.BECKER, 0.999999), 0.0)
        self.assertEqual(spectrum(ModelKind.BECKER, 1.0), 1.0)
        self.assertEqual(spectrum(ModelKind.BECKER, 4.0), 0.25)

    def test_lomnitz_values(self):
        self.assertAlmostEqual(spectrum(ModelKind.LOMNITZ, 1.0), 0.3678794, places=7)
        self.assertAlmostEqual(spectrum(ModelKind.LOMNITZ, 1.0), math.exp(-1.0), places=15)
        self.assertLess(spectrum(ModelKind.LOMNITZ, 0.01), 1e-40)

    def test_decay(self):
        """Both spectra approach 1/tau at long retardation times."""
        for kind in ModelKind:
            with self.subTest(kind=kind):
                self.assertAlmostEqual(1000.0 * spectrum(kind, 1000.0), 1.0, delta=0.01)

    def test_non_positive_tau_rejected(self):
        for tau in (0.0, -2.0, math.nan):
            with self.subTest(tau=tau):
                with self.assertRaises(DomainError):
                    spectrum(ModelKind.LOMNITZ, tau)

    def test_peak(self):
        taus = sorted(set(np.logspace(-2.0, 3.0, 101).tolist()) | {1.0})
        tau, value = spectrum_peak(ModelKind.LOMNITZ, taus)
        self.assertEqual(tau, 1.0)
        self.assertAlmostEqual(value, math.exp(-1.0), delta=1e-12)
        tau, value = spectrum_peak(ModelKind.BECKER, taus)
        self.assertEqual((tau, value), (1.0, 1.0))

    def test_peak_requires_samples(self):
        with self.assertRaises(DomainError):
            spectrum_peak(ModelKind.BECKER, [])


class TestSpectrumReconstruct(unittest.TestCase):
    """Tests for rebuilding the creep function from its spectrum."""

    def test_round_trip(self):
        """The quadrature reproduces the closed-form creep functions."""
        for kind in ModelKind:
            for t in np.logspace(-2.0, 2.0, 9):
                with self.subTest(kind=kind, t=t):
                    self.assertAlmostEqual(
                        spectrum_reconstruct(kind, t), psi(kind, t), delta=1e-8
                    )

    def test_zero_time(self):
        for kind in ModelKind:
            with self.subTest(kind=kind):
                self.assertEqual(spectrum_reconstruct(kind, 0.0), 0.0)

    def test_negative_time_rejected(self):
        with self.assertRaises(DomainError):
            spectrum_reconstruct(ModelKind.BECKER, -1.0)

    def test_node_budget_exhausted(self):
        """A tiny node budget with a strict tolerance raises with diagnostics."""
        cfg = QuadratureConfig(abs_tol=1e-15, rel_tol=1e-15, max_nodes=16)
        with self.assertRaises(QuadratureConvergenceError) as ctx:
            spectrum_reconstruct(ModelKind.LOMNITZ, 100.0, cfg)
        self.assertGreater(ctx.exception.error_estimate, 0.0)
        self.assertGreater(ctx.exception.tolerance, 0.0)

    def test_compliance_from_spectrum(self):
        params = MaterialParams(j_u=0.5, q=2.0, tau0=3.0)
        for kind in ModelKind:
            with self.subTest(kind=kind):
                self.assertAlmostEqual(
                    compliance_from_spectrum(params, kind, 6.0),
                    compliance(params, kind, 6.0),
                    delta=1e-8,
                )


if __name__ == "__main__":
    unittest.main()
