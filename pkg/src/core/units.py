"""Unit conventions: natural units ħ = c = 1 with lengths in units of the ring radius.

All physics modules work with the dimensionless triple (ν, β, Î); SI values
enter and leave only through this module.
"""

from __future__ import annotations

from typing import Any

from scipy import constants as _sc

from src.errors import DomainError
from src.models.state import DimensionlessState, PhysicalRing, UnitScales

# Exact SI-2019 defining constants (unchanged from CODATA 2018).
HBAR: float = _sc.hbar
ELEMENTARY_CHARGE: float = _sc.e
SPEED_OF_LIGHT: float = _sc.c

CODATA_RELEASE = "CODATA 2018 (exact SI defining constants)"


def constants_metadata() -> dict[str, Any]:
    return {
        "release": CODATA_RELEASE,
        "hbar_J_s": HBAR,
        "elementary_charge_C": ELEMENTARY_CHARGE,
        "speed_of_light_m_s": SPEED_OF_LIGHT,
    }


def unit_scales(radius_si: float) -> UnitScales:
    if not radius_si > 0:
        raise DomainError(f"radius_si must be positive, got {radius_si}")
    frequency_scale = SPEED_OF_LIGHT / radius_si
    return UnitScales(
        energy_scale=HBAR * frequency_scale,
        frequency_scale=frequency_scale,
        angmom_scale=HBAR,
    )


def reduce(ring: PhysicalRing) -> tuple[float, float, UnitScales]:
    """Return (beta, i_cl_hat, scales) for a physical ring.

    β = q·e·B·R²/ħ,  Î = I_cl·c/(ħR).
    """
    scales = unit_scales(ring.radius_si)
    charge = ring.charge_quanta * ELEMENTARY_CHARGE
    beta = charge * ring.b_field_si * ring.radius_si**2 / HBAR
    i_cl_hat = ring.moment_of_inertia_si / scales.inertia_scale
    return beta, i_cl_hat, scales


def state_from(ring: PhysicalRing, nu: float = 0.0, nu_max: float = 0.99) -> DimensionlessState:
    beta, i_cl_hat, _ = reduce(ring)
    return DimensionlessState(nu=nu, beta=beta, i_cl_hat=i_cl_hat, nu_max=nu_max)


# -- conversions -------------------------------------------------------------

def to_si_energy(e_hat: float, scales: UnitScales) -> float:
    return e_hat * scales.energy_scale


def from_si_energy(joules: float, scales: UnitScales) -> float:
    return joules / scales.energy_scale


def to_si_frequency(nu: float, scales: UnitScales) -> float:
    return nu * scales.frequency_scale


def from_si_frequency(omega: float, scales: UnitScales) -> float:
    return omega / scales.frequency_scale


def to_si_angmom(l_hat: float, scales: UnitScales) -> float:
    return l_hat * scales.angmom_scale


def to_si_moment_of_inertia(i_hat: float, scales: UnitScales) -> float:
    return i_hat * scales.inertia_scale
