"""Closed-form zero-point energy and angular momentum of the cut ring.

Neutral field:  E = −(1 + ν²)/48,            L = ∂E/∂ν = −ν/24.
Charged field:  E = −C(1 + ν²)/24,           L = −Cν/12,
with C = 1 + 6M(M + 1) and winding number M = ⌊βν/(1 − ν²)⌋.

The floor makes the charged quantities piecewise smooth with downward
energy jumps at ν_n, the n-th root of βν/(1 − ν²) = n.
"""

from __future__ import annotations

import logging
import math

import numpy as np

from src.core.units import to_si_moment_of_inertia, unit_scales
from src.errors import DomainError
from src.models.zeropoint import EnhancementCoefficient, FieldKind, WindingNumber

logger = logging.getLogger(__name__)

DEFAULT_JUMP_TOL = 1e-12


def _check_subluminal(nu: float) -> None:
    if not abs(nu) < 1.0:
        raise DomainError(f"Rotation must be subluminal, |nu| = {abs(nu)}")


def winding_argument(nu: float, beta: float) -> float:
    return beta * nu / (1.0 - nu * nu)


# ---------------------------------------------------------------------------
# Neutral field
# ---------------------------------------------------------------------------

def zp_energy_neutral(nu: float) -> float:
    _check_subluminal(nu)
    # kept as two terms so the second difference at ν = 0 is exact to rounding
    return -1.0 / 48.0 - nu * nu / 48.0


def zp_angmom_neutral(nu: float) -> float:
    _check_subluminal(nu)
    return -nu / 24.0


def zp_moment_of_inertia() -> float:
    """Dimensionless zero-point moment of inertia, in units of ħR/c."""
    return -1.0 / 24.0


def zp_moment_of_inertia_si(radius_si: float) -> float:
    """−ħR/(24c) in kg·m²."""
    return to_si_moment_of_inertia(zp_moment_of_inertia(), unit_scales(radius_si))


# ---------------------------------------------------------------------------
# Winding number
# ---------------------------------------------------------------------------

def winding(nu: float, beta: float, jump_tol: float = DEFAULT_JUMP_TOL) -> WindingNumber:
    """M = ⌊βν/(1 − ν²)⌋; ``at_jump`` flags arguments within jump_tol (relative) of a nonzero integer."""
    _check_subluminal(nu)
    arg = winding_argument(nu, beta)
    if not math.isfinite(arg):
        raise DomainError(f"winding argument is not finite for nu={nu}, beta={beta}")
    m_wind = math.floor(arg)
    nearest = round(arg)
    # C(0) = C(−1), so crossing zero is not a discontinuity
    at_jump = nearest != 0 and abs(arg - nearest) < jump_tol * max(1.0, abs(arg))
    return WindingNumber(m_wind=m_wind, arg=arg, at_jump=at_jump)


def winding_index(nu, beta: float) -> np.ndarray:
    """Vectorised ⌊βν/(1 − ν²)⌋ over an array of ν."""
    nu_arr = np.asarray(nu, dtype=float)
    if np.any(np.abs(nu_arr) >= 1.0):
        raise DomainError("Rotation must be subluminal")
    return np.floor(beta * nu_arr / (1.0 - nu_arr * nu_arr)).astype(np.int64)


def enhancement(m_wind: int) -> EnhancementCoefficient:
    return EnhancementCoefficient.for_winding(m_wind)


def enhancement_array(m_wind: np.ndarray) -> np.ndarray:
    m = np.asarray(m_wind, dtype=np.int64)
    return 1 + 6 * m * (m + 1)


# ---------------------------------------------------------------------------
# Charged field
# ---------------------------------------------------------------------------

def zp_energy_charged(nu: float, beta: float) -> float:
    c = enhancement(winding(nu, beta).m_wind).c_factor
    return c * (-1.0 / 24.0 - nu * nu / 24.0)


def zp_angmom_charged(nu: float, beta: float) -> float:
    c = enhancement(winding(nu, beta).m_wind).c_factor
    return -c * nu / 12.0


def zp_energy(nu: float, beta: float = 0.0, field: FieldKind = FieldKind.CHARGED) -> float:
    if field is FieldKind.NEUTRAL:
        return zp_energy_neutral(nu)
    return zp_energy_charged(nu, beta)


def zp_angmom(nu: float, beta: float = 0.0, field: FieldKind = FieldKind.CHARGED) -> float:
    if field is FieldKind.NEUTRAL:
        return zp_angmom_neutral(nu)
    return zp_angmom_charged(nu, beta)


# ---------------------------------------------------------------------------
# Characteristic frequencies
# ---------------------------------------------------------------------------

def characteristic_nu(beta: float, n: int = 1) -> float:
    """Smallest float ν > 0 with ⌊βν/(1 − ν²)⌋ = n.

    Starts from the positive root 2n/(β + √(β² + 4n²)) of βν = n(1 − ν²)
    and moves by ulps until the floor agrees.
    """
    if not beta > 0:
        raise DomainError(f"characteristic_nu needs beta > 0, got {beta}")
    if n < 1:
        raise DomainError(f"crossing index must be >= 1, got {n}")
    nu = 2.0 * n / (beta + math.sqrt(beta * beta + 4.0 * n * n))
    while math.floor(winding_argument(nu, beta)) < n:
        nu = float(np.nextafter(nu, 1.0))
    while True:
        below = float(np.nextafter(nu, 0.0))
        if math.floor(winding_argument(below, beta)) >= n:
            nu = below
        else:
            break
    return nu


def nonrelativistic_nu(beta: float, n: int = 1) -> float:
    """n/β, the crossing without the 1 − ν² correction."""
    if not beta > 0:
        raise DomainError(f"nonrelativistic_nu needs beta > 0, got {beta}")
    return n / beta
