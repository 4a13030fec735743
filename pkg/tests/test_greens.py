"""Structure function, Green functions and their independent cross-checks."""

from __future__ import annotations

import math
import unittest

import numpy as np

from src.errors import DomainError, SingularPointError
from src.greens.calg import calg_closed, calg_delta_limit, calg_hessian, calg_series
from src.greens.green import (
    green_arguments, green_delta_limit, green_rotating, green_static, wave_operator_order,
)
from src.models.greens import GPoint
from src.spectrum.modes import green_rotating_mode_sum


def _p(x: float, y: float, z: float, delta: float) -> GPoint:
    return GPoint(x=x, y=y, z=z, delta=delta)


# ===========================================================================
# 1. Structure function
# ===========================================================================

class TestStructureFunction(unittest.TestCase):
    def test_symmetric_in_x_and_y(self):
        a = calg_closed(_p(0.7, 1.1, 0.3, 1e-3))
        b = calg_closed(_p(1.1, 0.7, 0.3, 1e-3))
        self.assertAlmostEqual(abs(a - b), 0.0, places=14)

    def test_vanishes_at_cut(self):
        self.assertAlmostEqual(abs(calg_closed(_p(0.0, 1.3, 0.4, 1e-4))), 0.0, places=14)

    def test_vanishes_at_far_side_of_cut(self):
        self.assertLess(abs(calg_closed(_p(math.pi, math.pi, 0.4, 1e-4))), 1e-12)

    def test_series_matches_closed_form(self):
        p = _p(0.7, 1.1, 0.3, 1e-4)
        series = calg_series(p, 200_000)
        self.assertLess(series.tail_bound, 1e-9)
        self.assertLess(abs(series.value - calg_closed(p)), 1e-6)

    def test_single_term_series(self):
        p = _p(0.7, 1.1, 0.3, 0.1)
        expected = math.sin(0.7) * math.sin(1.1) * complex(math.cos(0.3), -math.sin(0.3)) * math.exp(-0.1)
        self.assertAlmostEqual(abs(calg_series(p, 1).value - expected), 0.0, places=15)

    def test_series_needs_a_term(self):
        with self.assertRaises(ValueError):
            calg_series(_p(0.7, 1.1, 0.3, 0.1), 0)

    def test_singular_factor_raises(self):
        with self.assertRaises(SingularPointError) as ctx:
            calg_closed(_p(0.5, 0.5, 1.0, 1e-14))
        self.assertIsNotNone(ctx.exception.factor)

    def test_point_validation(self):
        with self.assertRaises(DomainError):
            _p(0.5, 0.5, 1.0, 0.0)
        with self.assertRaises(DomainError):
            _p(3.5, 0.5, 1.0, 1e-3)

    def test_delta_limit(self):
        limit = calg_delta_limit(0.7, 1.1, 0.3)
        self.assertLess(abs(limit.value - calg_closed(_p(0.7, 1.1, 0.3, 1e-12))), 1e-8)
        self.assertEqual(len(limit.residuals), 2)


class TestHessian(unittest.TestCase):
    def test_matches_finite_differences(self):
        base = np.array([0.7, 1.1, 0.3])
        delta = 0.05
        h = 1e-4

        def f(v) -> complex:
            return calg_closed(_p(v[0], v[1], v[2], delta))

        fd = np.zeros((3, 3), dtype=complex)
        for i in range(3):
            for j in range(3):
                ei = np.eye(3)[i] * h
                ej = np.eye(3)[j] * h
                fd[i, j] = (f(base + ei + ej) - f(base + ei - ej)
                            - f(base - ei + ej) + f(base - ei - ej)) / (4.0 * h * h)

        hess = calg_hessian(_p(*base, delta))
        self.assertLess(np.max(np.abs(fd - hess)), 1e-5 * np.max(np.abs(hess)))

    def test_symmetric(self):
        hess = calg_hessian(_p(0.4, 2.0, 1.7, 0.01))
        self.assertTrue(np.allclose(hess, hess.T, rtol=0, atol=1e-14))


# ===========================================================================
# 2. Green functions
# ===========================================================================

class TestGreenFunctions(unittest.TestCase):
    def test_static_arguments(self):
        self.assertEqual(green_arguments(0.0, 3.0, 1.0, 2.0), (0.5, 1.0, 1.5))

    def test_rotating_arguments_use_comoving_angle(self):
        x, y, z = green_arguments(1.0, 1.0, 1.0, 2.0, nu=0.5)
        self.assertAlmostEqual(x, 0.25, places=15)
        self.assertAlmostEqual(y, 0.75, places=15)
        self.assertAlmostEqual(z, 0.25, places=15)

    def test_argument_domain(self):
        with self.assertRaises(DomainError):
            green_arguments(0.0, 1.0, 2.0 * math.pi, 1.0)
        with self.assertRaises(DomainError):
            green_arguments(0.0, 1.0, 1.0, 1.0, nu=1.0)

    def test_dirichlet_at_cut(self):
        self.assertEqual(green_static(0.0, 1.0, 0.0, 2.0), 0j)
        # cut has moved to phi = nu*t
        self.assertEqual(green_rotating(1.0, 2.0, 0.5, 2.0, nu=0.5), 0j)

    def test_rotating_reduces_to_static(self):
        a = green_rotating(0.3, 1.1, 2.0, 4.0, nu=0.0, delta=1e-3)
        b = green_static(0.3, 1.1, 2.0, 4.0, delta=1e-3)
        self.assertEqual(a, b)

    def test_closed_form_matches_mode_sum(self):
        closed = green_rotating(0.3, 1.1, 2.0, 4.0, nu=0.5, delta=1e-2)
        modes = green_rotating_mode_sum(0.3, 1.1, 2.0, 4.0, nu=0.5, delta=1e-2, m_max=5000)
        self.assertLess(abs(closed - modes), 1e-5)

    def test_static_closed_form_matches_mode_sum(self):
        closed = green_static(0.0, 0.7, 1.0, 5.0, delta=1e-2)
        modes = green_rotating_mode_sum(0.0, 0.7, 1.0, 5.0, nu=0.0, delta=1e-2, m_max=5000)
        self.assertLess(abs(closed - modes), 1e-5)

    def test_delta_limit_is_scaled_structure_function(self):
        limit = green_delta_limit(0.0, 0.6, 1.4, 2.2)
        direct = calg_delta_limit(0.7, 1.1, 0.3)
        self.assertAlmostEqual(abs(limit.value - 1j / math.pi * direct.value), 0.0, places=14)

    def test_wave_equation_away_from_source(self):
        self.assertGreaterEqual(wave_operator_order(0.0, 1.5, 2.0, 3.5), 1.9)
