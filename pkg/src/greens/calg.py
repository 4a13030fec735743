"""Structure function 𝒢(x, y, z) of the cut-ring Green function.

    𝒢(x, y, z) = Σ_{m≥1} sin(mx) sin(my) e^{−imz} / m
               = ¼ ln [(1 − e^{i(x+y−z)})(1 − e^{−i(x+y+z)})]
                    / [(1 − e^{i(x−y−z)})(1 − e^{i(−x+y−z)})]

The Feynman prescription is realised as z → z − iδ.  Each of the four
logarithms is evaluated separately on the principal branch: with δ > 0
every exponential has modulus e^{−δ} < 1, so 1 − w stays in the right
half plane and no branch cut is crossed.
"""

from __future__ import annotations

import logging
import math
from typing import NamedTuple, Sequence

import numpy as np

from src.core.extrapolation import RichardsonResult, richardson
from src.errors import SingularPointError
from src.models.greens import GPoint

logger = logging.getLogger(__name__)

SINGULAR_TOL = 1e-13
_SERIES_CHUNK = 1 << 18


class SeriesResult(NamedTuple):
    value: complex
    tail_bound: float


def _damped_pair(a: float, z: float, delta: float) -> tuple[complex, complex]:
    """u = e^{−δ} e^{i(a−z)}, v = e^{−δ} e^{−i(a+z)}."""
    q = math.exp(-delta)
    u = q * complex(math.cos(a - z), math.sin(a - z))
    v = q * complex(math.cos(a + z), -math.sin(a + z))
    for w in (u, v):
        if abs(1.0 - w) < SINGULAR_TOL:
            raise SingularPointError(
                f"log factor vanishes at a={a}, z={z}, delta={delta}", factor=1.0 - w
            )
    return u, v


def _log_pair(a: float, z: float, delta: float) -> complex:
    u, v = _damped_pair(a, z, delta)
    return complex(np.log1p(-u)) + complex(np.log1p(-v))


def calg_closed(p: GPoint) -> complex:
    """Closed logarithmic form of 𝒢 at (x, y, z − iδ)."""
    plus = _log_pair(p.x + p.y, p.z, p.delta)
    minus = _log_pair(p.x - p.y, p.z, p.delta)
    return 0.25 * (plus - minus)


def calg_series(p: GPoint, m_max: int) -> SeriesResult:
    """Abel-damped partial sum of 𝒢 up to ``m_max`` terms with its tail bound."""
    if m_max < 1:
        raise ValueError(f"m_max must be >= 1, got {m_max}")
    total = 0j
    for start in range(1, m_max + 1, _SERIES_CHUNK):
        m = np.arange(start, min(start + _SERIES_CHUNK, m_max + 1), dtype=float)
        terms = np.sin(m * p.x) * np.sin(m * p.y) * np.exp(-1j * m * p.z - m * p.delta) / m
        total += complex(np.sum(terms))
    tail = math.exp(-p.delta * m_max) / (p.delta * m_max)
    return SeriesResult(value=total, tail_bound=tail)


def calg_hessian(p: GPoint) -> np.ndarray:
    """Second derivatives of 𝒢 in (x, y, z), closed form.

    With ℓ(a, z) = ln(1 − u) + ln(1 − v), P = u/(1−u)², Q = v/(1−v)²:
    ℓ_aa = ℓ_zz = P + Q and ℓ_az = Q − P; 𝒢 = ¼[ℓ(x+y) − ℓ(x−y)].
    """

    def _second(a: float) -> tuple[complex, complex]:
        u, v = _damped_pair(a, p.z, p.delta)
        big_p = u / (1.0 - u) ** 2
        big_q = v / (1.0 - v) ** 2
        return big_p + big_q, big_q - big_p

    aa_plus, az_plus = _second(p.x + p.y)
    aa_minus, az_minus = _second(p.x - p.y)

    g_xx = 0.25 * (aa_plus - aa_minus)
    g_xy = 0.25 * (aa_plus + aa_minus)
    g_zz = g_xx
    g_xz = 0.25 * (az_plus - az_minus)
    g_yz = 0.25 * (az_plus + az_minus)
    return np.array(
        [
            [g_xx, g_xy, g_xz],
            [g_xy, g_xx, g_yz],
            [g_xz, g_yz, g_zz],
        ],
        dtype=complex,
    )


def calg_delta_limit(
    x: float, y: float, z: float, deltas: Sequence[float] = (1e-3, 1e-4, 1e-5),
) -> RichardsonResult:
    """Extrapolate the damped closed form to δ → 0 (linear error in δ)."""
    values = [calg_closed(GPoint(x=x, y=y, z=z, delta=d)) for d in deltas]
    result = richardson(deltas, values, order=1)
    logger.debug("calg delta limit at (%g, %g, %g): residuals %s", x, y, z, result.residuals)
    return result
