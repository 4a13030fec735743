"""Validated CLI run configuration (flags merged over run file over environment)."""

from __future__ import annotations

import math
from enum import Enum
from typing import Any, Optional

from pydantic import BaseModel, ConfigDict, ValidationError, field_validator, model_validator

from src.errors import ConfigError
from src.models.greens import SplitMethod
from src.models.spectrum import RegulatorKind
from src.models.state import PhysicalRing
from src.models.zeropoint import FieldKind


class OutputFormat(str, Enum):
    CSV = "csv"
    JSON = "json"


class RunConfig(BaseModel):
    """Parameters shared by every subcommand; each command reads the subset it needs."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    # ν grid / domain
    nu_start: float = 0.0
    nu_stop: float = 0.05
    nu_step: float = 1e-4
    nu_max: float = 0.99
    nu: Optional[float] = None

    # physics
    beta: float = 0.0
    i_cl_hat: float = 0.0
    field: FieldKind = FieldKind.CHARGED

    # regulator
    regulator: RegulatorKind = RegulatorKind.FINITE_PART
    epsilons: tuple[float, ...] = (0.2, 0.1, 0.05)
    richardson_order: int = 2

    # point splitting / Green functions
    phi: float = 0.5
    phip: Optional[float] = None
    t: float = 0.0
    tp: Optional[float] = None
    delta: float = 1e-6
    dt_sequence: tuple[float, ...] = (0.2, 0.1, 0.05, 0.025)
    split_method: SplitMethod = SplitMethod.ANALYTIC

    # SI ring
    radius_si: Optional[float] = None
    b_field_si: float = 0.0
    i_cl_si: Optional[float] = None
    mass_per_length_si: Optional[float] = None
    charge_quanta: int = 1
    winding: Optional[int] = None

    # output
    output: Optional[str] = None
    format: Optional[OutputFormat] = None
    seed: int = 20120917

    @field_validator("nu_step")
    @classmethod
    def _positive_step(cls, v: float) -> float:
        if not v > 0:
            raise ValueError("nu_step must be positive")
        return v

    @field_validator("nu_max")
    @classmethod
    def _subluminal(cls, v: float) -> float:
        if not (0.0 < v < 1.0):
            raise ValueError("nu_max must lie in (0, 1)")
        return v

    @field_validator("i_cl_hat")
    @classmethod
    def _non_negative_inertia(cls, v: float) -> float:
        if not v >= 0:
            raise ValueError("i_cl_hat must be non-negative")
        return v

    @field_validator("beta", "delta", "phi", "t")
    @classmethod
    def _finite(cls, v: float) -> float:
        if not math.isfinite(v):
            raise ValueError("value must be finite")
        return v

    @model_validator(mode="after")
    def _check_ranges(self) -> "RunConfig":
        if self.nu_stop < self.nu_start:
            raise ValueError(f"empty nu range [{self.nu_start}, {self.nu_stop}]")
        if self.nu is not None and abs(self.nu) >= self.nu_max:
            raise ValueError("|nu| must be below nu_max")
        if self.radius_si is not None and not self.radius_si > 0:
            raise ValueError("radius_si must be positive")
        if self.i_cl_si is not None and self.mass_per_length_si is not None:
            raise ValueError("give either i_cl_si or mass_per_length_si, not both")
        return self

    @classmethod
    def build(cls, **values: Any) -> "RunConfig":
        """Construct from merged sources, dropping unset (None) entries and mapping errors."""
        clean = {k: v for k, v in values.items() if v is not None}
        try:
            return cls(**clean)
        except ValidationError as e:
            raise ConfigError(_format_validation_error(e)) from e

    def check_grid(self) -> None:
        """Raise ConfigError unless the sweep grid lies strictly inside (-nu_max, nu_max)."""
        if max(abs(self.nu_start), abs(self.nu_stop)) >= self.nu_max:
            raise ConfigError(
                f"nu range [{self.nu_start}, {self.nu_stop}] must stay strictly inside "
                f"(-nu_max, nu_max) with nu_max={self.nu_max}"
            )

    @property
    def n_grid(self) -> int:
        """Number of points on the inclusive grid nu_start, nu_start + step, ..., nu_stop."""
        span = (self.nu_stop - self.nu_start) / self.nu_step
        return int(math.floor(span + 1e-9)) + 1

    def ring(self) -> PhysicalRing:
        if self.radius_si is None:
            raise ConfigError("this command needs --radius-si")
        return PhysicalRing(
            radius_si=self.radius_si,
            b_field_si=self.b_field_si,
            i_cl_si=self.i_cl_si,
            mass_per_length=self.mass_per_length_si,
            charge_quanta=self.charge_quanta,
        )

    def to_dict(self) -> dict[str, Any]:
        # the output path is not part of the run
        return self.model_dump(mode="json", exclude={"output"})


def _format_validation_error(e: ValidationError) -> str:
    parts = []
    for err in e.errors():
        loc = ".".join(str(p) for p in err.get("loc", ())) or "config"
        parts.append(f"{loc}: {err.get('msg')}")
    return "Invalid run configuration: " + "; ".join(parts)
