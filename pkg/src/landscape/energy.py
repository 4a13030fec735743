"""Total (classical plus zero-point) rotational energy and angular momentum."""

from __future__ import annotations

import numpy as np

from src.errors import DomainError
from src.models.landscape import Branch
from src.models.zeropoint import FieldKind
from src.zeropoint.closed_form import enhancement_array, winding_index, zp_angmom, zp_energy


def _check_domain(nu: float, nu_max: float) -> None:
    if not (0.0 < nu_max < 1.0):
        raise DomainError(f"nu_max must lie in (0, 1), got {nu_max}")
    if not abs(nu) < nu_max:
        raise DomainError(f"|nu| = {abs(nu)} must stay below nu_max = {nu_max}")


def zp_weight(c_factor: int, field: FieldKind = FieldKind.CHARGED) -> float:
    """w in E_zp = −w(1 + ν²): C/24 for the charged field, 1/48 for the neutral one."""
    if field is FieldKind.NEUTRAL:
        return 1.0 / 48.0
    return c_factor / 24.0


def classical_energy(nu: float, i_cl_hat: float) -> float:
    return 0.5 * i_cl_hat * nu * nu


def total_energy(
    nu: float, beta: float, i_cl_hat: float,
    field: FieldKind = FieldKind.CHARGED, nu_max: float = 0.99,
) -> float:
    """Îν²/2 + E_zp(ν, β)."""
    _check_domain(nu, nu_max)
    return classical_energy(nu, i_cl_hat) + zp_energy(nu, beta, field)


def total_angmom(
    nu: float, beta: float, i_cl_hat: float,
    field: FieldKind = FieldKind.CHARGED, nu_max: float = 0.99,
) -> float:
    """Îν + L_zp(ν, β)."""
    _check_domain(nu, nu_max)
    return i_cl_hat * nu + zp_angmom(nu, beta, field)


def branch_energy(branch: Branch, nu: float, field: FieldKind = FieldKind.CHARGED) -> float:
    """(Î/2 − w)ν² − w with the branch's own enhancement coefficient."""
    w = zp_weight(branch.c_factor, field)
    return branch.curvature * nu * nu - w


def branch_angmom(branch: Branch, nu: float) -> float:
    return 2.0 * branch.curvature * nu


def energy_grid(
    nu: np.ndarray, beta: float, i_cl_hat: float, field: FieldKind = FieldKind.CHARGED,
) -> tuple[np.ndarray, np.ndarray]:
    """Vectorised total energy over a ν grid; returns (energies, winding indices)."""
    nu = np.asarray(nu, dtype=float)
    if field is FieldKind.NEUTRAL:
        m = np.zeros(nu.shape, dtype=np.int64)
        w = np.full(nu.shape, 1.0 / 48.0)
    else:
        m = winding_index(nu, beta)
        w = enhancement_array(m) / 24.0
    return 0.5 * i_cl_hat * nu * nu - w * (1.0 + nu * nu), m
