"""Command registry: maps subcommand names to handlers.

Each handler takes a validated RunConfig and returns a CommandResult; the
front end decides how to render it.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Any, Callable, Optional, Sequence

from src.config import NumericsConfig, get_numerics_config
from src.core.units import unit_scales
from src.errors import ConfigError
from src.greens.green import green_arguments, green_delta_limit, green_rotating, green_static
from src.greens.pointsplit import angmom_density_point_split, t00_point_split_ladder
from src.landscape.branches import enumerate_branches
from src.landscape.minimize import global_minimum, minimum_in_si
from src.models.greens import SplitConfig
from src.models.run_config import OutputFormat, RunConfig
from src.models.spectrum import Regulator
from src.services.estimate_service import EstimateService
from src.services.sweep_service import SWEEP_COLUMNS, SweepService
from src.services.verification_service import VerificationService
from src.spectrum.modes import casimir_energy_mode_sum

logger = logging.getLogger(__name__)

BRANCH_COLUMNS = ("n", "nu_lo", "nu_hi", "c_factor", "curvature")


@dataclass
class CommandResult:
    """Output of one subcommand: either a table (columns + rows) or a JSON document."""

    command: str
    document: dict[str, Any] = field(default_factory=dict)
    columns: Optional[Sequence[str]] = None
    rows: Optional[list[Sequence[Any]]] = None
    text: Optional[str] = None
    exit_code: int = 0
    regulator: Optional[Regulator] = None

    @property
    def tabular(self) -> bool:
        return self.columns is not None


def regulator_for(cfg: RunConfig) -> Regulator:
    return Regulator(kind=cfg.regulator, epsilons=cfg.epsilons, richardson_order=cfg.richardson_order)


class CommandRegistry:
    """Holds the numerics defaults and dispatches by subcommand name."""

    TABULAR = frozenset({"sweep", "branches"})

    def __init__(self, numerics: Optional[NumericsConfig] = None):
        self.numerics = numerics or get_numerics_config()
        self._dispatch: dict[str, Callable[[RunConfig], CommandResult]] = {
            "sweep":    self.cmd_sweep,
            "minimize": self.cmd_minimize,
            "branches": self.cmd_branches,
            "greens":   self.cmd_greens,
            "t00":      self.cmd_t00,
            "verify":   self.cmd_verify,
            "estimate": self.cmd_estimate,
        }

    @property
    def names(self) -> list[str]:
        return list(self._dispatch)

    def check_format(self, name: str, cfg: RunConfig) -> None:
        if cfg.format is OutputFormat.CSV and name not in self.TABULAR:
            raise ConfigError(f"'{name}' only writes JSON; --format csv applies to sweep and branches")

    def execute(self, name: str, cfg: RunConfig) -> CommandResult:
        fn = self._dispatch.get(name)
        if fn is None:
            raise ConfigError(f"Unknown command '{name}'. Available: {', '.join(self.names)}")
        self.check_format(name, cfg)
        logger.info("running %s", name)
        return fn(cfg)

    # -- landscape -------------------------------------------------------------

    def cmd_sweep(self, cfg: RunConfig) -> CommandResult:
        rows = SweepService(cfg, jump_tol=self.numerics.jump_tol).rows()
        return CommandResult(
            command="sweep",
            columns=SWEEP_COLUMNS,
            rows=[r.as_tuple() for r in rows],
            document={"rows": [r.to_dict() for r in rows]},
        )

    def cmd_minimize(self, cfg: RunConfig) -> CommandResult:
        report = global_minimum(
            cfg.beta, cfg.i_cl_hat, cfg.nu_max, cfg.field, self.numerics.endpoint_eps,
        )
        document: dict[str, Any] = {"report": report.to_dict()}
        if cfg.radius_si is not None:
            document["si"] = minimum_in_si(report, unit_scales(cfg.radius_si))
        return CommandResult(command="minimize", document=document)

    def cmd_branches(self, cfg: RunConfig) -> CommandResult:
        branches = enumerate_branches(abs(cfg.beta), cfg.nu_max, cfg.i_cl_hat, cfg.field)
        return CommandResult(
            command="branches",
            columns=BRANCH_COLUMNS,
            rows=[(b.n, b.nu_lo, b.nu_hi, b.c_factor, b.curvature) for b in branches],
            document={"branches": [b.to_dict() for b in branches]},
        )

    # -- Green functions and densities -----------------------------------------

    def cmd_greens(self, cfg: RunConfig) -> CommandResult:
        nu = cfg.nu or 0.0
        tp = cfg.tp if cfg.tp is not None else cfg.t + 1.0
        phip = cfg.phip if cfg.phip is not None else cfg.phi
        if nu == 0.0:
            value = green_static(cfg.t, tp, cfg.phi, phip, cfg.delta)
        else:
            value = green_rotating(cfg.t, tp, cfg.phi, phip, nu, cfg.delta)
        limit = green_delta_limit(cfg.t, tp, cfg.phi, phip, nu, self.numerics.delta_ladder)
        x, y, z = green_arguments(cfg.t, tp, cfg.phi, phip, nu)
        return CommandResult(command="greens", document={
            "point": {"t": cfg.t, "tp": tp, "phi": cfg.phi, "phip": phip, "nu": nu},
            "calg_arguments": {"x": x, "y": y, "z": z},
            "delta": cfg.delta,
            "value": [value.real, value.imag],
            "delta_limit": limit.to_dict(),
        })

    def cmd_t00(self, cfg: RunConfig) -> CommandResult:
        nu = cfg.nu or 0.0
        split = SplitConfig(
            dt_sequence=cfg.dt_sequence,
            stencil_h=self.numerics.stencil_h,
            extrapolation_order=cfg.richardson_order,
            delta=self.numerics.split_delta,
            method=cfg.split_method,
        )
        ladder = t00_point_split_ladder(nu, cfg.phi, split, cfg.t)
        t00 = float(ladder.value)
        regulator = regulator_for(cfg)
        return CommandResult(command="t00", regulator=regulator, document={
            "nu": nu,
            "phi": cfg.phi,
            "t": cfg.t,
            "method": cfg.split_method.value,
            "t00": t00,
            "t00_closed_form": -(1.0 + nu * nu) / (96.0 * math.pi),
            "ladder": ladder.to_dict(),
            "total_energy": 2.0 * math.pi * t00,
            "angmom_density": angmom_density_point_split(nu, cfg.phi, split, cfg.t),
            "mode_sum": casimir_energy_mode_sum(nu, regulator),
        })

    # -- suites ----------------------------------------------------------------

    def cmd_verify(self, cfg: RunConfig) -> CommandResult:
        report = VerificationService(seed=cfg.seed, numerics=self.numerics).run()
        return CommandResult(
            command="verify",
            document=report.to_dict(),
            text=report.to_text() + "\n",
            exit_code=0 if report.all_passed else 1,
        )

    def cmd_estimate(self, cfg: RunConfig) -> CommandResult:
        service = EstimateService(cfg.ring(), cfg.nu_max, cfg.field)
        return CommandResult(command="estimate", document=service.estimate(cfg.nu, cfg.winding))
