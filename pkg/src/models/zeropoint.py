"""Winding number and enhancement coefficient of the charged zero-point energy."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Any

from src.errors import DomainError


class FieldKind(str, Enum):
    NEUTRAL = "neutral"
    CHARGED = "charged"


@dataclass(frozen=True)
class WindingNumber:
    """M = ⌊βν/(1−ν²)⌋ with a flag for arguments sitting on a jump."""

    m_wind: int
    arg: float
    at_jump: bool

    def to_dict(self) -> dict[str, Any]:
        return {"m_wind": self.m_wind, "arg": self.arg, "at_jump": self.at_jump}


@dataclass(frozen=True)
class EnhancementCoefficient:
    c_factor: int

    def __post_init__(self) -> None:
        if self.c_factor < 1:
            raise DomainError(f"Enhancement coefficient must be >= 1, got {self.c_factor}")

    @classmethod
    def for_winding(cls, m_wind: int) -> "EnhancementCoefficient":
        m = int(m_wind)
        return cls(c_factor=1 + 6 * m * (m + 1))

    def to_dict(self) -> dict[str, Any]:
        return {"c_factor": self.c_factor}
