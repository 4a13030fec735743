"""Sweep service: rows of the total-energy landscape over a ν grid."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any

import numpy as np

from src.landscape.energy import classical_energy, total_angmom
from src.models.run_config import RunConfig
from src.models.zeropoint import FieldKind
from src.zeropoint.closed_form import enhancement, winding, zp_energy

logger = logging.getLogger(__name__)

SWEEP_COLUMNS = ("nu", "M", "C", "e_zp", "e_cl", "e_total", "l_total", "at_jump")


@dataclass(frozen=True)
class SweepRow:
    nu: float
    m_wind: int
    c_factor: int
    e_zp: float
    e_cl: float
    e_total: float
    l_total: float
    at_jump: bool

    def as_tuple(self) -> tuple:
        return (self.nu, self.m_wind, self.c_factor, self.e_zp, self.e_cl,
                self.e_total, self.l_total, self.at_jump)

    def to_dict(self) -> dict[str, Any]:
        return dict(zip(SWEEP_COLUMNS, self.as_tuple()))


def nu_grid(cfg: RunConfig) -> np.ndarray:
    """nu_start + k·nu_step for k = 0..n_grid−1 (integer multiples, no accumulation)."""
    cfg.check_grid()
    return cfg.nu_start + np.arange(cfg.n_grid, dtype=float) * cfg.nu_step


class SweepService:
    """Evaluates the landscape row by row, in ascending ν."""

    def __init__(self, cfg: RunConfig, jump_tol: float = 1e-12):
        self._cfg = cfg
        self._jump_tol = jump_tol

    def row(self, nu: float) -> SweepRow:
        cfg = self._cfg
        if cfg.field is FieldKind.NEUTRAL:
            m_wind, c_factor, at_jump = 0, 1, False
        else:
            w = winding(nu, cfg.beta, self._jump_tol)
            m_wind, c_factor, at_jump = w.m_wind, enhancement(w.m_wind).c_factor, w.at_jump
        e_zp = zp_energy(nu, cfg.beta, cfg.field)
        e_cl = classical_energy(nu, cfg.i_cl_hat)
        return SweepRow(
            nu=nu,
            m_wind=m_wind,
            c_factor=c_factor,
            e_zp=e_zp,
            e_cl=e_cl,
            e_total=e_cl + e_zp,
            l_total=total_angmom(nu, cfg.beta, cfg.i_cl_hat, cfg.field, cfg.nu_max),
            at_jump=at_jump,
        )

    def rows(self) -> list[SweepRow]:
        grid = nu_grid(self._cfg)
        logger.info("sweep: %d rows on [%g, %g] step %g", len(grid), grid[0], grid[-1], self._cfg.nu_step)
        return [self.row(float(nu)) for nu in grid]
