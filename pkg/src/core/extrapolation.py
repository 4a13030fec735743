"""Richardson (Neville) extrapolation to zero step.

The error of each ladder entry is assumed to expand in powers
h^order, h^(2·order), ...; steps need not halve.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from src.errors import ConfigError, ConvergenceError

logger = logging.getLogger(__name__)


@dataclass
class RichardsonResult:
    value: float | complex
    tableau: np.ndarray
    residuals: list[float] = field(default_factory=list)

    def to_dict(self) -> dict:
        value = self.value
        if isinstance(value, complex):
            value = [value.real, value.imag]
        return {"value": value, "residuals": list(self.residuals)}


def richardson(
    steps: Sequence[float],
    values: Sequence[float | complex],
    order: int = 2,
) -> RichardsonResult:
    """Extrapolate ``values`` measured at ``steps`` to step zero.

    ``residuals[k]`` is |T[k+1,k+1] − T[k,k]|, the change of the diagonal.
    """
    if len(steps) != len(values):
        raise ConfigError("steps and values must have the same length")
    if not steps:
        raise ConfigError("empty extrapolation ladder")
    if order < 1:
        raise ConfigError("extrapolation order must be >= 1")

    s = np.asarray(steps, dtype=float) ** order
    n = len(s)
    table = np.zeros((n, n), dtype=np.result_type(*values, float))
    table[:, 0] = values
    for i in range(1, n):
        for j in range(1, i + 1):
            ratio = s[i - j] / s[i]
            table[i, j] = table[i, j - 1] + (table[i, j - 1] - table[i - 1, j - 1]) / (ratio - 1.0)

    diag = np.diag(table)
    residuals = [float(abs(diag[k + 1] - diag[k])) for k in range(n - 1)]
    value = diag[-1]
    value = complex(value) if np.iscomplexobj(table) else float(value)
    logger.debug("richardson steps=%s residuals=%s value=%r", list(steps), residuals, value)
    return RichardsonResult(value=value, tableau=table, residuals=residuals)


def require_converging(result: RichardsonResult, floor: float = 1e-10, what: str = "ladder") -> None:
    """Raise ConvergenceError unless the residuals decrease (or sit below ``floor``)."""
    res = result.residuals
    for a, b in zip(res, res[1:]):
        if b < floor:
            continue
        if not b < a:
            raise ConvergenceError(
                f"{what} did not converge: residuals {res}",
                residuals=res,
                table=result.tableau,
            )


def loglog_slope(xs: Sequence[float], ys: Sequence[float]) -> float:
    """Least-squares slope of log|y| against log x."""
    lx = np.log(np.asarray(xs, dtype=float))
    ly = np.log(np.abs(np.asarray(ys, dtype=float)))
    slope, _ = np.polyfit(lx, ly, 1)
    return float(slope)
