"""Point-split energy and angular-momentum densities."""

from __future__ import annotations

import math
import unittest

from src.errors import ConfigError, DomainError
from src.greens.pointsplit import (
    angmom_density_point_split, angmom_density_raw, t00_point_split, t00_point_split_ladder, t00_raw,
)
from src.models.greens import SplitConfig, SplitMethod
from src.zeropoint.closed_form import zp_angmom_neutral, zp_energy_neutral


def _t00_target(nu: float) -> float:
    return -(1.0 + nu * nu) / (96.0 * math.pi)


# ===========================================================================
# 1. Energy density
# ===========================================================================

class TestEnergyDensity(unittest.TestCase):
    def test_static_ring(self):
        value = t00_point_split(0.0, 0.5)
        self.assertLess(abs(value / _t00_target(0.0) - 1.0), 1e-4)

    def test_rotating_ring(self):
        value = t00_point_split(0.5, 0.5)
        self.assertLess(abs(value / _t00_target(0.5) - 1.0), 1e-4)

    def test_uniform_around_the_ring(self):
        values = [t00_point_split(0.3, phi) for phi in (0.5, 2.0, 5.0)]
        self.assertLess(max(values) - min(values), 1e-5)

    def test_independent_of_sense_of_rotation(self):
        for nu in (0.3, -0.3):
            self.assertLess(abs(t00_point_split(nu, 2.0) / _t00_target(nu) - 1.0), 1e-4)

    def test_integrates_to_closed_form(self):
        total = 2.0 * math.pi * t00_point_split(0.3, 2.0)
        self.assertLess(abs(total / zp_energy_neutral(0.3) - 1.0), 1e-4)

    def test_later_time_same_comoving_point(self):
        # the cut moves with the ring, so only theta = phi - nu*t matters
        a = t00_point_split(0.3, 2.0, t=0.0)
        b = t00_point_split(0.3, 2.3, t=1.0)
        self.assertAlmostEqual(a, b, places=9)

    def test_ladder_residuals_decrease(self):
        ladder = t00_point_split_ladder(0.2, 1.0)
        self.assertEqual(len(ladder.residuals), 3)
        self.assertLess(ladder.residuals[-1], ladder.residuals[0])

    def test_stencil_agrees_with_analytic_derivatives(self):
        analytic = SplitConfig(dt_sequence=(0.2,))
        stencil = SplitConfig(dt_sequence=(0.2,), stencil_h=1e-3, method=SplitMethod.STENCIL)
        a = t00_raw(0.3, 2.0, 0.2, analytic)
        s = t00_raw(0.3, 2.0, 0.2, stencil)
        self.assertLess(abs(a - s), 2e-3)

    def test_split_straddling_cut_rejected(self):
        with self.assertRaises(DomainError):
            t00_point_split(0.3, 0.01)
        with self.assertRaises(DomainError):
            t00_point_split(0.3, 0.0)

    def test_superluminal_rejected(self):
        with self.assertRaises(DomainError):
            t00_point_split(1.0, 1.0)


# ===========================================================================
# 2. Angular-momentum density
# ===========================================================================

class TestAngularMomentumDensity(unittest.TestCase):
    def test_rotating_ring(self):
        value = angmom_density_point_split(0.3, 1.0)
        self.assertLess(abs(value / (-0.3 / (48.0 * math.pi)) - 1.0), 1e-4)

    def test_integrates_to_closed_form(self):
        total = 2.0 * math.pi * angmom_density_point_split(0.4, 3.0)
        self.assertLess(abs(total / zp_angmom_neutral(0.4) - 1.0), 1e-4)

    def test_static_ring_carries_none(self):
        cfg = SplitConfig()
        self.assertLess(abs(angmom_density_raw(0.0, 1.0, 0.1, cfg)), 1e-12)
        self.assertLess(abs(angmom_density_point_split(0.0, 1.0)), 1e-12)

    def test_odd_in_nu(self):
        a = angmom_density_point_split(0.25, 2.5)
        b = angmom_density_point_split(-0.25, 2.5)
        self.assertLess(abs(a + b), 2e-4 * abs(a))


# ===========================================================================
# 3. Split configuration
# ===========================================================================

class TestSplitConfig(unittest.TestCase):
    def test_dt_must_decrease(self):
        with self.assertRaises(ConfigError):
            SplitConfig(dt_sequence=(0.1, 0.2))

    def test_dt_below_half(self):
        with self.assertRaises(ConfigError):
            SplitConfig(dt_sequence=(0.5, 0.1))

    def test_stencil_much_smaller_than_dt(self):
        with self.assertRaises(ConfigError):
            SplitConfig(dt_sequence=(0.2, 0.01), stencil_h=0.005)

    def test_to_dict(self):
        self.assertEqual(SplitConfig().to_dict()["method"], "analytic")
