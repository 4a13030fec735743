"""Cut-ring eigensystem and regularised zero-point mode sums."""

from __future__ import annotations

import math
import unittest

import numpy as np

from src.core.extrapolation import loglog_slope, richardson, require_converging
from src.errors import ConfigError, ConvergenceError, DomainError
from src.models.spectrum import Regulator, RegulatorKind
from src.spectrum.modes import (
    casimir_energy_mode_sum, cutoff_energies, cutoff_residual_slope, eigenfunction_sample,
    gram_matrix, mode, rotating_mode_frequency, rotating_mode_function, static_mode_frequency,
    zeta_finite_part,
)

STATIC_CASIMIR = -1.0 / 48.0


# ===========================================================================
# 1. Eigensystem
# ===========================================================================

class TestModes(unittest.TestCase):
    def test_half_integer_spectrum(self):
        self.assertEqual([static_mode_frequency(m) for m in (1, 2, 3)], [0.5, 1.0, 1.5])

    def test_rotation_rescales_spectrum(self):
        self.assertAlmostEqual(rotating_mode_frequency(4, 0.5), 0.75 * 2.0, places=15)
        self.assertEqual(mode(2, 0.0).omega_hat, 1.0)

    def test_index_and_speed_checked(self):
        with self.assertRaises(DomainError):
            static_mode_frequency(0)
        with self.assertRaises(DomainError):
            rotating_mode_frequency(1, 1.0)

    def test_eigenfunction_vanishes_at_cut(self):
        self.assertEqual(eigenfunction_sample(3, 0.0), 0.0)
        near_end = eigenfunction_sample(3, 2.0 * math.pi - 1e-12)
        self.assertLess(abs(near_end), 1e-11)

    def test_eigenfunction_domain(self):
        with self.assertRaises(DomainError):
            eigenfunction_sample(1, 2.0 * math.pi)
        with self.assertRaises(DomainError):
            eigenfunction_sample(1, np.array([0.1, -0.1]))

    def test_eigenfunction_vectorised(self):
        phi = np.linspace(0.0, 6.0, 7)
        values = eigenfunction_sample(2, phi)
        self.assertEqual(values.shape, (7,))
        self.assertAlmostEqual(values[1], math.sin(1.0) / math.sqrt(math.pi), places=15)

    def test_rotating_mode_function_at_rest(self):
        value = rotating_mode_function(3, static_mode_frequency(3), 0.0, 1.2, 0.0)
        self.assertAlmostEqual(value.real, eigenfunction_sample(3, 1.2), places=15)
        self.assertEqual(value.imag, 0.0)

    def test_rotating_mode_function_phase(self):
        nu, t = 0.5, 0.3
        theta = 1.0 - nu * t
        tau = t - nu * theta / (1.0 - nu * nu)
        omega = rotating_mode_frequency(2, nu)
        value = rotating_mode_function(2, omega, t, 1.0, nu)
        expected = math.sin(theta) / math.sqrt(math.pi) * complex(math.cos(omega * tau), -math.sin(omega * tau))
        self.assertAlmostEqual(abs(value - expected), 0.0, places=14)

    def test_orthonormality(self):
        gram = gram_matrix(20)
        self.assertLess(np.max(np.abs(gram - np.eye(20))), 1e-10)


# ===========================================================================
# 2. Mode sums
# ===========================================================================

class TestModeSums(unittest.TestCase):
    def test_zeta_values(self):
        self.assertAlmostEqual(zeta_finite_part(-1), -1.0 / 12.0, places=15)
        self.assertLess(abs(zeta_finite_part(-3) * 120.0 - 1.0), 1e-12)
        self.assertLess(abs(zeta_finite_part(-5) * 252.0 + 1.0), 1e-12)
        with self.assertRaises(DomainError):
            zeta_finite_part(0)

    def test_finite_part_static(self):
        self.assertLess(abs(casimir_energy_mode_sum(0.0) - STATIC_CASIMIR), 1e-10)

    def test_exp_cutoff_static(self):
        reg = Regulator(kind=RegulatorKind.EXP_CUTOFF, epsilons=(0.2, 0.1, 0.05))
        self.assertLess(abs(casimir_energy_mode_sum(0.0, reg) - STATIC_CASIMIR), 1e-8)

    def test_single_cutoff_value(self):
        reg = Regulator(kind=RegulatorKind.EXP_CUTOFF, epsilons=(0.2,))
        self.assertAlmostEqual(casimir_energy_mode_sum(0.0, reg), -0.0208229, delta=1e-7)

    def test_cutoff_error_is_quadratic(self):
        self.assertLess(abs(cutoff_residual_slope(0.0, (0.2, 0.1, 0.05)) - 2.0), 0.1)

    def test_rotating_mode_sum_scales_with_spectrum(self):
        nu = 0.3
        self.assertAlmostEqual(casimir_energy_mode_sum(nu), (1.0 - nu * nu) * STATIC_CASIMIR, places=14)

    def test_cutoff_energies_vectorised(self):
        self.assertEqual(cutoff_energies(0.0, [0.2, 0.1]).shape, (2,))


# ===========================================================================
# 3. Extrapolation
# ===========================================================================

class TestRichardson(unittest.TestCase):
    def test_removes_quadratic_error(self):
        steps = (0.4, 0.2, 0.1)
        values = [1.0 + 3.0 * h * h for h in steps]
        result = richardson(steps, values, order=2)
        self.assertAlmostEqual(result.value, 1.0, places=13)

    def test_complex_values(self):
        steps = (1e-2, 1e-3)
        values = [complex(2.0 + h, -1.0 + h) for h in steps]
        result = richardson(steps, values, order=1)
        self.assertIsInstance(result.value, complex)
        self.assertAlmostEqual(abs(result.value - complex(2.0, -1.0)), 0.0, places=12)
        self.assertEqual(result.to_dict()["value"][1], result.value.imag)

    def test_ladder_errors(self):
        with self.assertRaises(ConfigError):
            richardson((0.1,), (1.0, 2.0))
        with self.assertRaises(ConfigError):
            richardson((), ())

    def test_diverging_ladder_detected(self):
        steps = (0.4, 0.2, 0.1, 0.05)
        values = [1.0, 2.0, 0.0, 5.0]
        with self.assertRaises(ConvergenceError) as ctx:
            require_converging(richardson(steps, values, order=2))
        self.assertEqual(len(ctx.exception.residuals), 3)

    def test_loglog_slope(self):
        xs = (1.0, 0.5, 0.25)
        self.assertAlmostEqual(loglog_slope(xs, [x**3 for x in xs]), 3.0, places=12)
