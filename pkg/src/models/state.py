"""Ring state models: the dimensionless triple and its SI counterpart."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Optional

from src.errors import DomainError


@dataclass(frozen=True)
class DimensionlessState:
    """Reduced parameters (ν, β, Î) with the subluminal cap ν_max.

    ν = ΩR/c, β = eBR²/ħ, Î = I_cl·c/(ħR).
    """

    nu: float
    beta: float
    i_cl_hat: float
    nu_max: float = 0.99

    def __post_init__(self) -> None:
        if not (0.0 < self.nu_max < 1.0):
            raise DomainError(f"nu_max must lie in (0, 1), got {self.nu_max}")
        if not abs(self.nu) < self.nu_max:
            raise DomainError(f"|nu| = {abs(self.nu)} must be below nu_max = {self.nu_max}")
        if not (math.isfinite(self.beta) and math.isfinite(self.i_cl_hat)):
            raise DomainError("beta and i_cl_hat must be finite")
        if self.i_cl_hat < 0:
            raise DomainError(f"i_cl_hat must be non-negative, got {self.i_cl_hat}")

    def to_dict(self) -> dict[str, Any]:
        return {
            "nu": self.nu,
            "beta": self.beta,
            "i_cl_hat": self.i_cl_hat,
            "nu_max": self.nu_max,
        }


@dataclass(frozen=True)
class PhysicalRing:
    """SI description of the device: radius, field, classical inertia, carrier charge.

    Give either ``i_cl_si`` or ``mass_per_length`` (then I_cl = 2πR·μ·R²).
    """

    radius_si: float
    b_field_si: float = 0.0
    i_cl_si: Optional[float] = None
    mass_per_length: Optional[float] = None
    charge_quanta: int = 1

    def __post_init__(self) -> None:
        if not (math.isfinite(self.radius_si) and self.radius_si > 0):
            raise DomainError(f"radius_si must be positive, got {self.radius_si}")
        if not math.isfinite(self.b_field_si):
            raise DomainError("b_field_si must be finite")
        if self.i_cl_si is not None and self.mass_per_length is not None:
            raise DomainError("Give either i_cl_si or mass_per_length, not both")
        if self.i_cl_si is not None and not self.i_cl_si >= 0:
            raise DomainError(f"i_cl_si must be non-negative, got {self.i_cl_si}")
        if self.mass_per_length is not None and not self.mass_per_length >= 0:
            raise DomainError(f"mass_per_length must be non-negative, got {self.mass_per_length}")

    @property
    def moment_of_inertia_si(self) -> float:
        if self.i_cl_si is not None:
            return self.i_cl_si
        if self.mass_per_length is not None:
            return 2.0 * math.pi * self.radius_si * self.mass_per_length * self.radius_si**2
        return 0.0

    def to_dict(self) -> dict[str, Any]:
        return {
            "radius_si": self.radius_si,
            "b_field_si": self.b_field_si,
            "i_cl_si": self.moment_of_inertia_si,
            "mass_per_length": self.mass_per_length,
            "charge_quanta": self.charge_quanta,
        }


@dataclass(frozen=True)
class UnitScales:
    """Conversion scales for natural units with lengths measured in R."""

    energy_scale: float      # ħc/R  [J]
    frequency_scale: float   # c/R   [rad/s]
    angmom_scale: float      # ħ     [J·s]

    def __post_init__(self) -> None:
        if min(self.energy_scale, self.frequency_scale, self.angmom_scale) <= 0:
            raise DomainError("All unit scales must be positive")
        if not math.isclose(
            self.energy_scale, self.angmom_scale * self.frequency_scale, rel_tol=1e-12
        ):
            raise DomainError("energy_scale must equal angmom_scale * frequency_scale")

    @property
    def inertia_scale(self) -> float:
        """ħR/c in kg·m²."""
        return self.angmom_scale / self.frequency_scale

    def to_dict(self) -> dict[str, Any]:
        return {
            "energy_scale": self.energy_scale,
            "frequency_scale": self.frequency_scale,
            "angmom_scale": self.angmom_scale,
            "inertia_scale": self.inertia_scale,
        }
