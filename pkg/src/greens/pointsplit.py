"""Point-splitting extraction of the vacuum energy and angular-momentum densities.

For a split (t, φ) → (t + Δt, φ) the unrenormalised energy density is
−1/(2πΔt²) + finite + O(Δt²).  The known divergence is subtracted before
extrapolating Δt → 0, so the Richardson ladder only sees a smooth remainder.
The angular-momentum density has no divergence at all.
"""

from __future__ import annotations

import logging
import math
from typing import Callable

import numpy as np

from src.core.angles import TWO_PI, comoving_angle
from src.core.extrapolation import RichardsonResult, require_converging, richardson
from src.errors import DomainError
from src.greens.calg import calg_hessian
from src.greens.green import green_rotating, rotating_separation
from src.models.greens import GPoint, SplitConfig, SplitMethod

logger = logging.getLogger(__name__)

RESIDUAL_FLOOR = 1e-10


def _split_point(nu: float, phi: float, t: float, dt: float) -> GPoint:
    theta = comoving_angle(t, phi, nu)
    theta_p = theta - nu * dt
    if not (0.0 < theta_p < TWO_PI) or theta == 0.0:
        raise DomainError(
            f"point split straddles the cut (theta={theta}, theta'={theta_p}); choose another phi or t"
        )
    z = rotating_separation(t, t + dt, theta, theta_p, nu)
    return GPoint(x=theta / 2.0, y=theta_p / 2.0, z=z, delta=1.0)


def _gradients(nu: float, sign: float) -> dict[str, np.ndarray]:
    """∂(x, y, z)/∂ of each of (t, t', φ, φ'); sign = sign of (t − t') − ν(φ − φ')."""
    return {
        "t": np.array([-nu / 2.0, 0.0, sign / 2.0]),
        "tp": np.array([0.0, -nu / 2.0, -sign / 2.0]),
        "phi": np.array([0.5, 0.0, -sign * nu / 2.0]),
        "phip": np.array([0.0, 0.5, sign * nu / 2.0]),
    }


def _analytic_mixed(nu: float, phi: float, t: float, dt: float, delta: float) -> dict[str, complex]:
    base = _split_point(nu, phi, t, dt)
    p = GPoint(x=base.x, y=base.y, z=base.z, delta=delta)
    hess = calg_hessian(p)
    g = _gradients(nu, sign=-1.0)   # t − t' = −dt < 0 at coincident φ

    def mixed(a: str, b: str) -> complex:
        return complex(g[a] @ hess @ g[b])

    # derivatives of 𝒢; the Green function is (i/π)·𝒢
    return {
        "t_tp": 1j / math.pi * mixed("t", "tp"),
        "phi_phip": 1j / math.pi * mixed("phi", "phip"),
        "t_phip": 1j / math.pi * mixed("t", "phip"),
        "phi_tp": 1j / math.pi * mixed("phi", "tp"),
    }


def _stencil_mixed(nu: float, phi: float, t: float, dt: float, h: float, delta: float) -> dict[str, complex]:
    _split_point(nu, phi, t, dt)

    def green(tt: float, ttp: float, ph: float, php: float) -> complex:
        return green_rotating(tt, ttp, ph % TWO_PI, php % TWO_PI, nu, delta)

    tp = t + dt
    args = {"t": 0, "tp": 1, "phi": 2, "phip": 3}
    base = [t, tp, phi, phi]

    def mixed(a: str, b: str) -> complex:
        total = 0j
        for sa, sb, w in ((1, 1, 1.0), (1, -1, -1.0), (-1, 1, -1.0), (-1, -1, 1.0)):
            x = list(base)
            x[args[a]] += sa * h
            x[args[b]] += sb * h
            total += w * green(*x)
        return total / (4.0 * h * h)

    return {
        "t_tp": mixed("t", "tp"),
        "phi_phip": mixed("phi", "phip"),
        "t_phip": mixed("t", "phip"),
        "phi_tp": mixed("phi", "tp"),
    }


def _mixed(nu: float, phi: float, t: float, dt: float, cfg: SplitConfig) -> dict[str, complex]:
    if cfg.method is SplitMethod.STENCIL:
        return _stencil_mixed(nu, phi, t, dt, cfg.stencil_h, cfg.delta)
    return _analytic_mixed(nu, phi, t, dt, cfg.delta)


def _extrapolate(
    cfg: SplitConfig, raw: Callable[[float], float], what: str,
) -> RichardsonResult:
    values = [raw(dt) for dt in cfg.dt_sequence]
    result = richardson(cfg.dt_sequence, values, order=cfg.extrapolation_order)
    logger.debug("%s ladder dt=%s values=%s residuals=%s", what, cfg.dt_sequence, values, result.residuals)
    require_converging(result, floor=RESIDUAL_FLOOR, what=what)
    return result


def _check_nu(nu: float) -> None:
    if not abs(nu) < 1.0:
        raise DomainError(f"Rotation must be subluminal, |nu| = {abs(nu)}")


def t00_raw(nu: float, phi: float, dt: float, cfg: SplitConfig, t: float = 0.0) -> float:
    """Split energy density ½(∂t∂t' + ∂φ∂φ')G/i with the counterterm +1/(2πΔt²) added."""
    d = _mixed(nu, phi, t, dt, cfg)
    density = (d["t_tp"] + d["phi_phip"]) / 2j
    return density.real + 1.0 / (2.0 * math.pi * dt * dt)


def t00_point_split_ladder(nu: float, phi: float, cfg: SplitConfig | None = None, t: float = 0.0) -> RichardsonResult:
    _check_nu(nu)
    cfg = cfg or SplitConfig()
    return _extrapolate(cfg, lambda dt: t00_raw(nu, phi, dt, cfg, t), f"t00(nu={nu}, phi={phi})")


def t00_point_split(nu: float, phi: float, cfg: SplitConfig | None = None, t: float = 0.0) -> float:
    """Physical energy density at (t, φ); target −(1 + ν²)/(96π)."""
    return float(t00_point_split_ladder(nu, phi, cfg, t).value)


def angmom_density_raw(nu: float, phi: float, dt: float, cfg: SplitConfig, t: float = 0.0) -> float:
    """−½(∂t∂φ' + ∂φ∂t')G/i at the split points."""
    d = _mixed(nu, phi, t, dt, cfg)
    return (-(d["t_phip"] + d["phi_tp"]) / 2j).real


def angmom_density_point_split(nu: float, phi: float, cfg: SplitConfig | None = None, t: float = 0.0) -> float:
    """Angular-momentum density of the neutral field; target −ν/(48π)."""
    _check_nu(nu)
    cfg = cfg or SplitConfig()
    result = _extrapolate(cfg, lambda dt: angmom_density_raw(nu, phi, dt, cfg, t), f"l-density(nu={nu})")
    return float(result.value)
