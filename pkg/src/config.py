"""
Central configuration loader.
Reads numerics defaults from environment variables (via .env) and
flat key/value YAML run files.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Optional

import yaml
from dotenv import load_dotenv

from src.errors import ConfigError


# ---------------------------------------------------------------------------
# Load .env from repo root (if present)
# ---------------------------------------------------------------------------
_REPO_ROOT = Path(__file__).resolve().parents[1]
load_dotenv(_REPO_ROOT / ".env")

VERSION = "1.0.0"


def _get(key: str, default: Optional[str] = None) -> Optional[str]:
    return os.getenv(key, default)


def _get_float(key: str, default: float) -> float:
    raw = _get(key)
    if raw is None or raw == "":
        return default
    try:
        return float(raw)
    except ValueError as e:
        raise ConfigError(f"Environment variable {key} is not a number: {raw!r}") from e


def _get_int(key: str, default: int) -> int:
    raw = _get(key)
    if raw is None or raw == "":
        return default
    try:
        return int(raw)
    except ValueError as e:
        raise ConfigError(f"Environment variable {key} is not an integer: {raw!r}") from e


def _get_ladder(key: str, default: tuple[float, ...]) -> tuple[float, ...]:
    raw = _get(key)
    if raw is None or raw.strip() == "":
        return default
    try:
        return tuple(float(v) for v in raw.split(",") if v.strip())
    except ValueError as e:
        raise ConfigError(f"Environment variable {key} must be comma-separated numbers") from e


# ---------------------------------------------------------------------------
# Numerics defaults
# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class NumericsConfig:
    nu_max: float
    endpoint_eps: float
    jump_tol: float
    epsilons: tuple[float, ...]
    richardson_order: int
    dt_sequence: tuple[float, ...]
    stencil_h: float
    split_delta: float
    delta_ladder: tuple[float, ...]
    series_m_max: int
    grid_step: float


def get_numerics_config() -> NumericsConfig:
    return NumericsConfig(
        nu_max=_get_float("ROTVAC_NU_MAX", 0.99),
        endpoint_eps=_get_float("ROTVAC_ENDPOINT_EPS", 1e-9),
        jump_tol=_get_float("ROTVAC_JUMP_TOL", 1e-12),
        epsilons=_get_ladder("ROTVAC_EPSILONS", (0.2, 0.1, 0.05)),
        richardson_order=_get_int("ROTVAC_RICHARDSON_ORDER", 2),
        dt_sequence=_get_ladder("ROTVAC_DT_SEQUENCE", (0.2, 0.1, 0.05, 0.025)),
        stencil_h=_get_float("ROTVAC_STENCIL_H", 1e-4),
        split_delta=_get_float("ROTVAC_SPLIT_DELTA", 1e-12),
        delta_ladder=_get_ladder("ROTVAC_DELTA_LADDER", (1e-3, 1e-4, 1e-5)),
        series_m_max=_get_int("ROTVAC_SERIES_M_MAX", 1_000_000),
        grid_step=_get_float("ROTVAC_GRID_STEP", 1e-6),
    )


# ---------------------------------------------------------------------------
# Output / logging
# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class OutputConfig:
    log_level: str
    float_format: str


def get_output_config() -> OutputConfig:
    return OutputConfig(
        log_level=_get("ROTVAC_LOG_LEVEL", default="WARNING").upper(),  # type: ignore[union-attr]
        float_format=_get("ROTVAC_FLOAT_FORMAT", default=".17g"),  # type: ignore[arg-type]
    )


# ---------------------------------------------------------------------------
# Run files (flat YAML key/value)
# ---------------------------------------------------------------------------
def load_run_file(path: Path | str) -> dict[str, Any]:
    """Read a flat YAML run file; keys use the long-flag names with underscores."""
    p = Path(path)
    try:
        with p.open("r", encoding="utf-8") as f:
            data = yaml.safe_load(f) or {}
    except OSError as e:
        raise ConfigError(f"Cannot read run file '{p}': {e}") from e
    except yaml.YAMLError as e:
        raise ConfigError(f"Run file '{p}' is not valid YAML: {e}") from e
    if not isinstance(data, dict):
        raise ConfigError(f"Run file '{p}' must contain a mapping of keys to values")
    return {str(k).replace("-", "_"): v for k, v in data.items()}


# ---------------------------------------------------------------------------
# Paths
# ---------------------------------------------------------------------------
def get_repo_root() -> Path:
    return _REPO_ROOT
