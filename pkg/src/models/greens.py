"""Argument and configuration models for the Green-function evaluators."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from src.errors import ConfigError, DomainError


class SplitMethod(str, Enum):
    ANALYTIC = "analytic"
    STENCIL = "stencil"


@dataclass(frozen=True)
class GPoint:
    """Arguments of the structure function 𝒢(x, y, z − iδ)."""

    x: float
    y: float
    z: float
    delta: float

    def __post_init__(self) -> None:
        if not self.delta > 0:
            raise DomainError(f"Damping delta must be positive, got {self.delta}")
        for name, v in (("x", self.x), ("y", self.y)):
            if not (0.0 <= v <= math.pi):
                raise DomainError(f"{name} must lie in [0, pi], got {v}")
        if not math.isfinite(self.z):
            raise DomainError("z must be finite")

    def to_dict(self) -> dict[str, Any]:
        return {"x": self.x, "y": self.y, "z": self.z, "delta": self.delta}


@dataclass(frozen=True)
class SplitConfig:
    """Point-splitting ladder: time separations, stencil step and extrapolation order."""

    dt_sequence: tuple[float, ...] = field(default=(0.2, 0.1, 0.05, 0.025))
    stencil_h: float = 1e-4
    extrapolation_order: int = 2
    delta: float = 1e-12
    method: SplitMethod = SplitMethod.ANALYTIC

    def __post_init__(self) -> None:
        if not self.dt_sequence:
            raise ConfigError("dt_sequence must not be empty")
        if any(not (0.0 < dt < 0.5) for dt in self.dt_sequence):
            raise ConfigError(f"dt values must lie in (0, 0.5), got {self.dt_sequence}")
        if any(b >= a for a, b in zip(self.dt_sequence, self.dt_sequence[1:])):
            raise ConfigError(f"dt_sequence must be strictly decreasing, got {self.dt_sequence}")
        if self.extrapolation_order < 1:
            raise ConfigError("extrapolation_order must be >= 1")
        if not self.delta > 0:
            raise ConfigError("delta must be positive")
        if not (0.0 < self.stencil_h < 0.1 * min(self.dt_sequence)):
            raise ConfigError(
                f"stencil_h={self.stencil_h} must be much smaller than min(dt)={min(self.dt_sequence)}"
            )

    def to_dict(self) -> dict[str, Any]:
        return {
            "dt_sequence": list(self.dt_sequence),
            "stencil_h": self.stencil_h,
            "extrapolation_order": self.extrapolation_order,
            "delta": self.delta,
            "method": self.method.value,
        }
