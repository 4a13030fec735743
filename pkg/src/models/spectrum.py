"""Mode and regulator models for the cut-ring spectrum."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from src.errors import ConfigError, DomainError


class RegulatorKind(str, Enum):
    FINITE_PART = "finite-part"
    EXP_CUTOFF = "exp-cutoff"


@dataclass(frozen=True)
class Mode:
    """One on-shell mode of the cut ring (R = 1)."""

    m: int
    omega_hat: float

    def __post_init__(self) -> None:
        if self.m < 1:
            raise DomainError(f"Mode index must be >= 1, got {self.m}")
        if self.omega_hat < 0:
            raise DomainError(f"Mode frequency must be non-negative, got {self.omega_hat}")

    def to_dict(self) -> dict[str, Any]:
        return {"m": self.m, "omega_hat": self.omega_hat}


@dataclass(frozen=True)
class Regulator:
    """Divergence-subtraction scheme for the zero-point mode sum."""

    kind: RegulatorKind = RegulatorKind.FINITE_PART
    epsilons: tuple[float, ...] = field(default=(0.2, 0.1, 0.05))
    richardson_order: int = 2

    def __post_init__(self) -> None:
        if self.richardson_order < 1:
            raise ConfigError(f"richardson_order must be >= 1, got {self.richardson_order}")
        if self.kind is RegulatorKind.EXP_CUTOFF:
            if not self.epsilons:
                raise ConfigError("exp-cutoff regulator needs at least one epsilon")
            if any(not (0.0 < e <= 1.0) for e in self.epsilons):
                raise ConfigError(f"epsilons must lie in (0, 1], got {self.epsilons}")
            if any(b >= a for a, b in zip(self.epsilons, self.epsilons[1:])):
                raise ConfigError(f"epsilons must be strictly decreasing, got {self.epsilons}")

    @classmethod
    def from_name(cls, name: str, epsilons: tuple[float, ...] = (0.2, 0.1, 0.05),
                  richardson_order: int = 2) -> "Regulator":
        try:
            kind = RegulatorKind(name)
        except ValueError as e:
            raise ConfigError(f"Unknown regulator '{name}'") from e
        return cls(kind=kind, epsilons=tuple(epsilons), richardson_order=richardson_order)

    def to_dict(self) -> dict[str, Any]:
        return {
            "kind": self.kind.value,
            "epsilons": list(self.epsilons),
            "richardson_order": self.richardson_order,
        }
