"""Estimate service: plugs SI ring parameters into the dimensionless results."""

from __future__ import annotations

import logging
from typing import Any, Optional

from src.core.units import constants_metadata, reduce, to_si_energy, to_si_frequency
from src.landscape.minimize import critical_inertia, global_minimum, minimum_in_si
from src.models.state import PhysicalRing
from src.models.zeropoint import FieldKind
from src.zeropoint.closed_form import (
    characteristic_nu, enhancement, nonrelativistic_nu, winding, zp_energy, zp_moment_of_inertia_si,
)

logger = logging.getLogger(__name__)


class EstimateService:
    """β, Ω_ch, winding and enhancement, and the ground-state verdict for a physical ring."""

    def __init__(self, ring: PhysicalRing, nu_max: float = 0.99, field: FieldKind = FieldKind.CHARGED):
        self._ring = ring
        self._nu_max = nu_max
        self._field = field
        self.beta, self.i_cl_hat, self.scales = reduce(ring)

    def estimate(self, nu: Optional[float] = None, m_wind: Optional[int] = None) -> dict[str, Any]:
        beta, scales = self.beta, self.scales
        out: dict[str, Any] = {
            "ring": self._ring.to_dict(),
            "beta": beta,
            "i_cl_hat": self.i_cl_hat,
            "scales": scales.to_dict(),
            "zp_moment_of_inertia_si": zp_moment_of_inertia_si(self._ring.radius_si),
            "constants": constants_metadata(),
        }

        if beta > 0 and self._field is FieldKind.CHARGED:
            nu_ch = characteristic_nu(beta, 1)
            out["characteristic"] = {
                "nu_ch": nu_ch,
                "nu_ch_nonrelativistic": nonrelativistic_nu(beta, 1),
                "omega_ch_rad_s": to_si_frequency(nu_ch, scales),
                "omega_ch_nonrelativistic_rad_s": to_si_frequency(nonrelativistic_nu(beta, 1), scales),
            }
            i_crit, n_crit = critical_inertia(beta, self._nu_max)
            out["critical_inertia"] = {"i_cl_hat": i_crit, "branch_n": n_crit}
        else:
            out["characteristic"] = None
            logger.info("no discontinuities: beta=%g, field=%s", beta, self._field.value)

        if nu is not None:
            w = winding(nu, beta) if self._field is FieldKind.CHARGED else None
            e_zp = zp_energy(nu, beta, self._field)
            out["at_nu"] = {
                "nu": nu,
                "omega_rad_s": to_si_frequency(nu, scales),
                "winding": w.to_dict() if w else None,
                "c_factor": enhancement(w.m_wind).c_factor if w else 1,
                "e_zp": e_zp,
                "e_zp_J": to_si_energy(e_zp, scales),
            }

        if m_wind is not None:
            out["enhancement"] = {"m_wind": m_wind, "c_factor": enhancement(m_wind).c_factor}

        report = global_minimum(beta, self.i_cl_hat, self._nu_max, self._field)
        out["minimum"] = report.summary()
        out["minimum_si"] = minimum_in_si(report, scales)
        out["rotating_ground_state"] = report.rotating_ground_state
        return out
