"""Parametric E(L) table and the zero-temperature identity dE/dL = ν.

Within a branch both E and L are smooth in ν with dE/dν = ν·dL/dν, so the
centred quotient over three rows on one branch reproduces ν.  At each ν_n
the table shows a downward jump in E together with a jump in L.
"""

from __future__ import annotations

import logging
from typing import Sequence

import numpy as np

from src.landscape.energy import energy_grid
from src.models.landscape import ELTableRow
from src.models.zeropoint import FieldKind
from src.zeropoint.closed_form import enhancement_array

logger = logging.getLogger(__name__)


def e_of_l_table(
    beta: float,
    i_cl_hat: float,
    nu_grid: Sequence[float],
    field: FieldKind = FieldKind.CHARGED,
) -> list[ELTableRow]:
    """Rows (ν, L, E, branch) sorted by ν."""
    nu = np.sort(np.asarray(nu_grid, dtype=float))
    energies, m = energy_grid(nu, beta, i_cl_hat, field)
    if field is FieldKind.NEUTRAL:
        l_total = (i_cl_hat - 1.0 / 24.0) * nu
    else:
        l_total = (i_cl_hat - enhancement_array(m) / 12.0) * nu

    slopes = i_cl_hat - (enhancement_array(np.unique(m)) / 12.0 if field is FieldKind.CHARGED
                         else np.array([1.0 / 24.0]))
    if np.any(slopes <= 0):
        logger.warning(
            "L(nu) is not increasing on every branch (i_cl_hat=%g); E(L) may be multivalued", i_cl_hat,
        )
    return [
        ELTableRow(nu=float(v), l_total=float(l), e_total=float(e), branch_n=int(n))
        for v, l, e, n in zip(nu, l_total, energies, m)
    ]


def find_jumps(rows: Sequence[ELTableRow]) -> list[tuple[ELTableRow, ELTableRow]]:
    """Consecutive row pairs whose branch label changes."""
    return [(a, b) for a, b in zip(rows, rows[1:]) if a.branch_n != b.branch_n]


def check_single_valued(
    rows: Sequence[ELTableRow], tol: float = 1e-9,
) -> list[tuple[ELTableRow, ELTableRow]]:
    """Row pairs with |ΔL| < tol but |ΔE| > tol."""
    by_l = sorted(rows, key=lambda r: r.l_total)
    violations = []
    for i, a in enumerate(by_l):
        for b in by_l[i + 1:]:
            if b.l_total - a.l_total >= tol:
                break
            if abs(b.e_total - a.e_total) > tol:
                violations.append((a, b))
    if violations:
        logger.warning("E(L) table has %d single-valuedness violations", len(violations))
    return violations


def de_dl_residuals(rows: Sequence[ELTableRow]) -> float:
    """max |ΔE/ΔL − ν| over centred triples that share a branch (0.0 if none)."""
    worst = 0.0
    for prev, cur, nxt in zip(rows, rows[1:], rows[2:]):
        if not (prev.branch_n == cur.branch_n == nxt.branch_n):
            continue
        dl = nxt.l_total - prev.l_total
        if dl == 0.0:
            continue
        worst = max(worst, abs((nxt.e_total - prev.e_total) / dl - cur.nu))
    return worst
