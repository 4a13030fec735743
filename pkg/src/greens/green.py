"""Feynman Green functions of the static and rotating cut ring (R = 1)."""

from __future__ import annotations

import math
from typing import Sequence

import numpy as np

from src.core.angles import TWO_PI, comoving_angle
from src.core.extrapolation import RichardsonResult
from src.errors import DomainError
from src.greens.calg import calg_closed, calg_delta_limit
from src.models.greens import GPoint


def _check_angle(name: str, value: float) -> None:
    if not (0.0 <= value < TWO_PI):
        raise DomainError(f"{name} must lie in [0, 2*pi), got {value}")


def green_static(t: float, tp: float, phi: float, phip: float, delta: float = 1e-6) -> complex:
    """G = (i/π)·𝒢(φ/2, φ'/2, |t − t'|/2)."""
    x, y, z = green_arguments(t, tp, phi, phip)
    return 1j / math.pi * calg_closed(GPoint(x=x, y=y, z=z, delta=delta))


def green_arguments(
    t: float, tp: float, phi: float, phip: float, nu: float = 0.0,
) -> tuple[float, float, float]:
    """(x, y, z) of 𝒢 for laboratory coordinates; θ = [φ − νt]_{2π}."""
    if not abs(nu) < 1.0:
        raise DomainError(f"Rotation must be subluminal, |nu| = {abs(nu)}")
    _check_angle("phi", phi)
    _check_angle("phip", phip)
    if nu == 0.0:
        return phi / 2.0, phip / 2.0, abs(t - tp) / 2.0
    theta = comoving_angle(t, phi, nu)
    theta_p = comoving_angle(tp, phip, nu)
    return theta / 2.0, theta_p / 2.0, rotating_separation(t, tp, theta, theta_p, nu)


def rotating_separation(t: float, tp: float, theta: float, theta_p: float, nu: float) -> float:
    """|(1 − ν²)(t − t') − ν(θ − θ')| / 2."""
    return abs((1.0 - nu * nu) * (t - tp) - nu * (theta - theta_p)) / 2.0


def green_rotating(
    t: float, tp: float, phi: float, phip: float, nu: float, delta: float = 1e-6,
) -> complex:
    """Green function of the ring whose cut sits at φ = [νt]_{2π}.

    Arguments are laboratory angles; θ = [φ − νt]_{2π} measures the angle
    from the moving cut.
    """
    x, y, z = green_arguments(t, tp, phi, phip, nu)
    return 1j / math.pi * calg_closed(GPoint(x=x, y=y, z=z, delta=delta))


def green_delta_limit(
    t: float, tp: float, phi: float, phip: float, nu: float = 0.0,
    deltas: Sequence[float] = (1e-3, 1e-4, 1e-5),
) -> RichardsonResult:
    """G extrapolated to δ → 0 over a damping ladder."""
    x, y, z = green_arguments(t, tp, phi, phip, nu)
    limit = calg_delta_limit(x, y, z, deltas)
    return RichardsonResult(
        value=1j / math.pi * complex(limit.value),
        tableau=1j / math.pi * limit.tableau,
        residuals=[r / math.pi for r in limit.residuals],
    )


def wave_operator_residual(
    t: float, tp: float, phi: float, phip: float, h: float,
    delta: float = 0.2, aspect: float = 2.0,
) -> complex:
    """(∂t² − ∂φ²)G by central differences, φ-step = aspect·h.

    Away from the source and the cut the residual vanishes as O(h²).  An
    isotropic stencil (aspect = 1) reproduces the lattice dispersion exactly
    and shows no convergence, so the default is anisotropic.
    """
    h_phi = aspect * h
    g0 = green_static(t, tp, phi, phip, delta)
    d_tt = (green_static(t + h, tp, phi, phip, delta) - 2.0 * g0
            + green_static(t - h, tp, phi, phip, delta)) / h**2
    d_pp = (green_static(t, tp, phi + h_phi, phip, delta) - 2.0 * g0
            + green_static(t, tp, phi - h_phi, phip, delta)) / h_phi**2
    return complex(d_tt - d_pp)


def wave_operator_order(
    t: float, tp: float, phi: float, phip: float,
    steps=(0.01, 0.005, 0.0025), delta: float = 0.2, aspect: float = 2.0,
) -> float:
    """Observed convergence order of the wave-operator residual over halving steps."""
    res = [abs(wave_operator_residual(t, tp, phi, phip, h, delta, aspect)) for h in steps]
    orders = [
        math.log(res[i] / res[i + 1]) / math.log(steps[i] / steps[i + 1])
        for i in range(len(steps) - 1)
    ]
    return float(np.min(orders))
