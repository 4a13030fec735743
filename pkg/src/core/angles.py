"""Angle helpers for the cut ring."""

from __future__ import annotations

import math

import numpy as np

TWO_PI = 2.0 * math.pi


def wrap_2pi(x):
    """[x]_{2π}: representative in [0, 2π)."""
    r = np.mod(x, TWO_PI)
    r = np.where(r >= TWO_PI, 0.0, r)
    return float(r) if np.ndim(r) == 0 else r


def comoving_angle(t: float, phi: float, nu: float) -> float:
    """θ(t, φ) = [φ − νt]_{2π}, the angle measured from the co-rotating cut."""
    return wrap_2pi(phi - nu * t)
