"""Deterministic writers: fixed float formatting, fixed row order, no timestamps."""

from __future__ import annotations

import csv
import io
import json
import logging
import math
import sys
from pathlib import Path
from typing import Any, Iterable, Optional, Sequence

from src.config import VERSION, NumericsConfig, get_output_config
from src.core.units import constants_metadata
from src.errors import OutputError
from src.models.spectrum import Regulator

logger = logging.getLogger(__name__)


def _fmt(value: Any, float_format: str) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format(value, float_format)
    return str(value)


def render_csv(columns: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    float_format = get_output_config().float_format
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_fmt(v, float_format) for v in row])
    return buf.getvalue()


def _json_safe(value: Any) -> Any:
    """Replace non-finite floats with None so the document stays strict JSON."""
    if isinstance(value, float) and not math.isfinite(value):
        return None
    if isinstance(value, dict):
        return {k: _json_safe(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_json_safe(v) for v in value]
    return value


def render_json(document: dict[str, Any]) -> str:
    return json.dumps(_json_safe(document), indent=2, sort_keys=True, allow_nan=False) + "\n"


def provenance(numerics: NumericsConfig, regulator: Optional[Regulator] = None) -> dict[str, Any]:
    return {
        "version": VERSION,
        "constants": constants_metadata(),
        "tolerances": {
            "endpoint_eps": numerics.endpoint_eps,
            "jump_tol": numerics.jump_tol,
            "stencil_h": numerics.stencil_h,
            "split_delta": numerics.split_delta,
            "delta_ladder": list(numerics.delta_ladder),
            "grid_step": numerics.grid_step,
        },
        "regulator": regulator.to_dict() if regulator else None,
    }


def sidecar_path(output: str | Path) -> Path:
    p = Path(output)
    return p.with_name(p.name + ".provenance.json")


def write_text(text: str, output: Optional[str]) -> None:
    """Write to ``output`` or to stdout when no path is given."""
    if output is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    try:
        with open(output, "w", encoding="utf-8", newline="") as f:
            f.write(text)
    except OSError as e:
        raise OutputError(str(output), e.strerror or str(e)) from e
    logger.info("wrote %s", output)
