"""Exact global minimisation of the total energy over ν ∈ [0, ν_max).

On branch n the energy is (Î/2 − w_n)ν² − w_n, monotone for ν ≥ 0, so the
infimum over a branch sits at its left endpoint or at the limit from
inside its right end.  Enumerating those candidates is exact; the dense
grid scan below is kept as an independent oracle.
"""

from __future__ import annotations

import logging
import math

import numpy as np

from src.core.units import to_si_energy, to_si_frequency
from src.errors import DomainError
from src.landscape.branches import enumerate_branches, jump_points
from src.landscape.energy import branch_angmom, branch_energy, energy_grid
from src.models.landscape import (
    Branch, Candidate, CandidateKind, GridScanResult, Jump, MinimumReport,
)
from src.models.state import UnitScales
from src.models.zeropoint import FieldKind
from src.zeropoint.closed_form import enhancement_array, nonrelativistic_nu, winding_index

logger = logging.getLogger(__name__)

DEFAULT_ENDPOINT_EPS = 1e-9


# ---------------------------------------------------------------------------
# Candidates
# ---------------------------------------------------------------------------

def _candidates(
    branches: list[Branch], field: FieldKind, endpoint_eps: float,
) -> list[Candidate]:
    out: list[Candidate] = []
    last = len(branches) - 1
    for b in branches:
        if b.n == 0:
            out.append(Candidate(0.0, branch_energy(b, 0.0, field), 0, True, CandidateKind.ORIGIN))
        else:
            out.append(Candidate(b.nu_lo, branch_energy(b, b.nu_lo, field), b.n, True, CandidateKind.LEFT))
        nu_in = max(b.nu_lo, b.nu_hi - endpoint_eps)
        kind = CandidateKind.BOUNDARY if b.n == branches[last].n else CandidateKind.RIGHT_LIMIT
        out.append(Candidate(nu_in, branch_energy(b, nu_in, field), b.n, False, kind))
    return out


def _jumps(branches: list[Branch], field: FieldKind) -> list[Jump]:
    jumps = []
    for prev, cur in zip(branches, branches[1:]):
        nu = cur.nu_lo
        jumps.append(Jump(
            n=cur.n,
            nu=nu,
            delta_e=branch_energy(cur, nu, field) - branch_energy(prev, nu, field),
            delta_l=branch_angmom(cur, nu) - branch_angmom(prev, nu),
        ))
    return jumps


def global_minimum(
    beta: float,
    i_cl_hat: float,
    nu_max: float = 0.99,
    field: FieldKind = FieldKind.CHARGED,
    endpoint_eps: float = DEFAULT_ENDPOINT_EPS,
) -> MinimumReport:
    """Least-energy candidate, ties broken toward smaller |ν| then smaller branch index.

    The landscape is even in ν and in β, so the search runs over ν ≥ 0 with
    |β|; the non-negative representative is reported.
    """
    if not i_cl_hat >= 0:
        raise DomainError(f"i_cl_hat must be non-negative, got {i_cl_hat}")
    if not endpoint_eps > 0:
        raise DomainError("endpoint_eps must be positive")
    branches = enumerate_branches(abs(beta), nu_max, i_cl_hat, field)
    candidates = _candidates(branches, field, endpoint_eps)
    for c in candidates:
        logger.debug("candidate %s nu=%.17g E=%.17g (branch %d)", c.kind.value, c.nu, c.energy, c.branch_n)

    best = min(candidates, key=lambda c: (c.energy, abs(c.nu), c.branch_n))
    e_zero = candidates[0].energy
    boundary_hit = best.kind is CandidateKind.BOUNDARY
    # n/β is only a comparison point for a crossing inside the domain
    nr_nu = None
    if best.branch_n >= 1 and not boundary_hit:
        nr_nu = nonrelativistic_nu(abs(beta), best.branch_n)
        if nr_nu >= nu_max:
            nr_nu = None
    report = MinimumReport(
        nu_star=best.nu,
        e_star=best.energy,
        branch_n=best.branch_n,
        rotating_ground_state=best.nu != 0.0 and best.energy < e_zero,
        boundary_hit=boundary_hit,
        e_zero=e_zero,
        candidates=candidates,
        jumps=_jumps(branches, field),
        nonrelativistic_nu=nr_nu,
    )
    if report.boundary_hit:
        logger.warning(
            "minimum sits at the nu_max boundary (nu_max=%g); the landscape is unbounded below inside the domain",
            nu_max,
        )
    logger.info("global minimum nu*=%.17g E*=%.17g branch=%d", report.nu_star, report.e_star, report.branch_n)
    return report


# ---------------------------------------------------------------------------
# Grid-scan oracle
# ---------------------------------------------------------------------------

def _bisect_jump(lo: float, hi: float, beta: float) -> float:
    """Smallest float in (lo, hi] whose winding index equals that of hi."""
    target = int(winding_index(hi, beta))
    while True:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            return hi
        if int(winding_index(mid, beta)) >= target:
            hi = mid
        else:
            lo = mid


def grid_scan_minimum(
    beta: float,
    i_cl_hat: float,
    nu_max: float = 0.99,
    step: float = 1e-6,
    field: FieldKind = FieldKind.CHARGED,
    endpoint_eps: float = DEFAULT_ENDPOINT_EPS,
) -> GridScanResult:
    """Brute-force argmin of the total energy on a uniform grid.

    The grid ends at ν_max − endpoint_eps.  Winding changes between grid
    points whose energies come within one on-branch grid increment of the
    grid minimum are located by bisection; the energy is then evaluated at
    the jump (left endpoint) and just below it (right limit).
    """
    if not step > 0:
        raise DomainError("grid step must be positive")
    if not (0.0 < nu_max < 1.0):
        raise DomainError(f"nu_max must lie in (0, 1), got {nu_max}")
    beta = abs(beta)
    n_points = int(math.floor((nu_max - endpoint_eps) / step)) + 1
    grid = np.arange(n_points, dtype=float) * step
    grid = grid[grid < nu_max - endpoint_eps]
    grid = np.append(grid, nu_max - endpoint_eps)
    energies, m = energy_grid(grid, beta, i_cl_hat, field)

    k = int(np.argmin(energies))
    best_nu, best_e = float(grid[k]), float(energies[k])
    refined = False

    same = m[1:] == m[:-1]
    increments = np.abs(np.diff(energies))[same]
    slack = float(increments.max()) if increments.size else 0.0
    changes = np.nonzero(~same)[0]
    near = changes[np.minimum(energies[changes], energies[changes + 1]) <= best_e + slack]
    for j in near:
        lo, hi = float(grid[j]), float(grid[j + 1])
        jump = _bisect_jump(lo, hi, beta)
        for nu in (max(lo, jump - endpoint_eps), jump):
            e, _ = energy_grid(np.array([nu]), beta, i_cl_hat, field)
            if float(e[0]) < best_e:
                best_nu, best_e, refined = nu, float(e[0]), True

    logger.debug(
        "grid scan: %d points, %d jumps refined, argmin nu=%.17g E=%.17g",
        len(grid), len(near), best_nu, best_e,
    )
    return GridScanResult(
        nu_argmin=best_nu, e_min=best_e, step=step, n_points=len(grid), refined=refined,
    )


# ---------------------------------------------------------------------------
# Critical inertia
# ---------------------------------------------------------------------------

def critical_inertia(beta: float, nu_max: float = 0.99) -> tuple[float, int]:
    """Largest Î admitting a rotating ground state, and the branch realising it.

    A branch-n left endpoint beats ν = 0 iff Î < (C_n(1 + ν_n²) − 1)/(12ν_n²);
    nonrelativistically the n = 1 bound is ≈ β².  Returns (0.0, 0) without jumps.
    """
    points = np.asarray(jump_points(beta, nu_max)) if beta > 0 else np.empty(0)
    if points.size == 0:
        return 0.0, 0
    n = np.arange(1, points.size + 1)
    bounds = (enhancement_array(n) * (1.0 + points**2) - 1.0) / (12.0 * points**2)
    k = int(np.argmax(bounds))
    best = (float(bounds[k]), k + 1)
    logger.debug("critical inertia for beta=%g: %.17g (branch %d)", beta, *best)
    return best


def minimum_in_si(report: MinimumReport, scales: UnitScales) -> dict[str, float]:
    """SI companions of the minimiser for reports with ring parameters."""
    return {
        "omega_star_rad_s": to_si_frequency(report.nu_star, scales),
        "e_star_J": to_si_energy(report.e_star, scales),
        "e_zero_J": to_si_energy(report.e_zero, scales),
        "stopping_work_J": to_si_energy(report.e_zero - report.e_star, scales),
    }
