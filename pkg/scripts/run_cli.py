#!/usr/bin/env python3
"""Launcher for the rotating-vacuum command-line tool.

Usage:
  python scripts/run_cli.py sweep --beta 100 --i-cl-hat 9000 --nu-stop 0.05 -o sweep.csv
  python scripts/run_cli.py verify
"""

from __future__ import annotations

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1]))

from src.cli.main import main  # noqa: E402

if __name__ == "__main__":
    sys.exit(main())
