"""Constancy branches of the winding number on [0, ν_max)."""

from __future__ import annotations

import logging
import math

import numpy as np

from src.errors import DomainError
from src.landscape.energy import zp_weight
from src.models.landscape import Branch
from src.models.zeropoint import FieldKind
from src.zeropoint.closed_form import enhancement, winding_argument

logger = logging.getLogger(__name__)


def jump_points(beta: float, nu_max: float) -> list[float]:
    """ν_1 < ν_2 < ... strictly below nu_max; elementwise equal to characteristic_nu."""
    if beta == 0:
        return []
    n_top = int(math.floor(winding_argument(nu_max, beta))) + 1
    if n_top < 1:
        return []
    n = np.arange(1, n_top + 1, dtype=float)
    nu = 2.0 * n / (beta + np.sqrt(beta * beta + 4.0 * n * n))
    while True:
        low = np.floor(beta * nu / (1.0 - nu * nu)) < n
        if not low.any():
            break
        nu[low] = np.nextafter(nu[low], 1.0)
    while True:
        below = np.nextafter(nu, 0.0)
        ok = np.floor(beta * below / (1.0 - below * below)) >= n
        if not ok.any():
            break
        nu[ok] = below[ok]
    return [float(v) for v in nu[nu < nu_max]]


def _make_branch(n: int, lo: float, hi: float, i_cl_hat: float, field: FieldKind) -> Branch:
    c = enhancement(n).c_factor if field is FieldKind.CHARGED else 1
    return Branch(
        n=n, nu_lo=lo, nu_hi=hi, c_factor=c,
        curvature=0.5 * i_cl_hat - zp_weight(c, field),
    )


def enumerate_branches(
    beta: float, nu_max: float = 0.99, i_cl_hat: float = 0.0,
    field: FieldKind = FieldKind.CHARGED,
) -> list[Branch]:
    """Half-open branches [ν_n, ν_{n+1}) ∩ [0, ν_max), covering [0, ν_max) exactly."""
    if not beta >= 0:
        raise DomainError(f"enumerate_branches needs beta >= 0, got {beta}")
    if not (0.0 < nu_max < 1.0):
        raise DomainError(f"nu_max must lie in (0, 1), got {nu_max}")

    points = [] if field is FieldKind.NEUTRAL else jump_points(beta, nu_max)
    edges = [0.0, *points, nu_max]
    branches = [
        _make_branch(n, edges[n], edges[n + 1], i_cl_hat, field)
        for n in range(len(edges) - 1)
    ]
    logger.debug(
        "beta=%g nu_max=%g: %d branches, jumps at %s", beta, nu_max, len(branches), points,
    )
    return branches
