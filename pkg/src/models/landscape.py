"""Landscape models: constancy branches, minimisation report and E(L) table rows."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Optional

from src.errors import DomainError


class CandidateKind(str, Enum):
    ORIGIN = "origin"
    LEFT = "left"
    RIGHT_LIMIT = "right_limit"
    BOUNDARY = "boundary"


@dataclass(frozen=True)
class Branch:
    """Maximal half-open ν interval [nu_lo, nu_hi) of constant winding number."""

    n: int
    nu_lo: float
    nu_hi: float
    c_factor: int
    curvature: float

    def __post_init__(self) -> None:
        if not self.nu_lo < self.nu_hi:
            raise DomainError(f"Empty branch interval [{self.nu_lo}, {self.nu_hi})")

    def contains(self, nu: float) -> bool:
        return self.nu_lo <= nu < self.nu_hi

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "nu_lo": self.nu_lo,
            "nu_hi": self.nu_hi,
            "c_factor": self.c_factor,
            "curvature": self.curvature,
        }


@dataclass(frozen=True)
class Candidate:
    nu: float
    energy: float
    branch_n: int
    closed: bool
    kind: CandidateKind

    def to_dict(self) -> dict[str, Any]:
        return {
            "nu": self.nu,
            "energy": self.energy,
            "branch_n": self.branch_n,
            "closed": self.closed,
            "kind": self.kind.value,
        }


@dataclass(frozen=True)
class Jump:
    """Discontinuity at the start of branch n: E and L both jump (values right minus left)."""

    n: int
    nu: float
    delta_e: float
    delta_l: float

    def to_dict(self) -> dict[str, Any]:
        return {"n": self.n, "nu": self.nu, "delta_e": self.delta_e, "delta_l": self.delta_l}


@dataclass
class MinimumReport:
    """Result of the exact global minimisation of the total energy."""

    nu_star: float
    e_star: float
    branch_n: int
    rotating_ground_state: bool
    boundary_hit: bool
    e_zero: float
    candidates: list[Candidate] = field(default_factory=list)
    jumps: list[Jump] = field(default_factory=list)
    nonrelativistic_nu: Optional[float] = None

    @property
    def relativistic_offset(self) -> Optional[float]:
        if self.nonrelativistic_nu is None:
            return None
        return self.nu_star - self.nonrelativistic_nu

    def _scalars(self) -> dict[str, Any]:
        return {
            "nu_star": self.nu_star,
            "e_star": self.e_star,
            "branch_n": self.branch_n,
            "rotating_ground_state": self.rotating_ground_state,
            "boundary_hit": self.boundary_hit,
            "e_zero": self.e_zero,
            "nonrelativistic_nu": self.nonrelativistic_nu,
            "relativistic_offset": self.relativistic_offset,
        }

    def summary(self) -> dict[str, Any]:
        """Scalar fields plus candidate and jump counts."""
        return {**self._scalars(), "candidates": len(self.candidates), "jumps": len(self.jumps)}

    def to_dict(self) -> dict[str, Any]:
        return {
            **self._scalars(),
            "candidates": [c.to_dict() for c in self.candidates],
            "jumps": [j.to_dict() for j in self.jumps],
        }


@dataclass(frozen=True)
class ELTableRow:
    nu: float
    l_total: float
    e_total: float
    branch_n: int

    def to_dict(self) -> dict[str, Any]:
        return {
            "nu": self.nu,
            "l_total": self.l_total,
            "e_total": self.e_total,
            "branch_n": self.branch_n,
        }


@dataclass(frozen=True)
class GridScanResult:
    """Dense-grid oracle for the global minimum."""

    nu_argmin: float
    e_min: float
    step: float
    n_points: int
    refined: bool

    def to_dict(self) -> dict[str, Any]:
        return {
            "nu_argmin": self.nu_argmin,
            "e_min": self.e_min,
            "step": self.step,
            "n_points": self.n_points,
            "refined": self.refined,
        }
