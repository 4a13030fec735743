"""Command-line front end.

Configuration precedence: flag > run file (--config) > environment > default.
Logs go to stderr so that CSV/JSON on stdout stays byte-identical.

Exit codes: 0 success, 1 failed verification, 2 usage/config/domain error,
3 output error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Any, Optional, Sequence

from src.cli.commands import CommandRegistry, CommandResult
from src.cli.output import provenance, render_csv, render_json, sidecar_path, write_text
from src.config import VERSION, get_numerics_config, get_output_config, load_run_file
from src.errors import OutputError, RotvacError
from src.models.run_config import OutputFormat, RunConfig

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3

# flag dest -> RunConfig field
_FLAG_FIELDS = (
    "nu_start", "nu_stop", "nu_step", "nu_max", "nu",
    "beta", "i_cl_hat", "field",
    "regulator", "epsilons", "richardson_order",
    "phi", "phip", "t", "tp", "delta", "dt_sequence", "split_method",
    "radius_si", "b_field_si", "i_cl_si", "mass_per_length_si", "charge_quanta", "winding",
    "output", "format", "seed",
)


def _ladder(text: str) -> tuple[float, ...]:
    try:
        values = tuple(float(v) for v in text.split(",") if v.strip())
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from e
    if not values:
        raise argparse.ArgumentTypeError("empty list")
    return values


def _common_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("run configuration")
    g.add_argument("--config", help="YAML run file (keys = long flag names)")
    g.add_argument("--nu-start", type=float)
    g.add_argument("--nu-stop", type=float)
    g.add_argument("--nu-step", type=float)
    g.add_argument("--nu-max", type=float, help="exclusive bound on |nu| (default 0.99)")
    g.add_argument("--nu", type=float, help="single angular velocity nu = Omega R / c")
    g.add_argument("--beta", type=float, help="flux parameter e B R^2 / hbar")
    g.add_argument("--i-cl-hat", type=float, help="classical moment of inertia in hbar R / c")
    g.add_argument("--field", choices=["neutral", "charged"])

    g = p.add_argument_group("regularisation")
    g.add_argument("--regulator", choices=["finite-part", "exp-cutoff"])
    g.add_argument("--epsilons", type=_ladder, help="comma-separated, strictly decreasing")
    g.add_argument("--richardson-order", type=int)
    g.add_argument("--dt-sequence", type=_ladder)
    g.add_argument("--split-method", choices=["analytic", "stencil"])

    g = p.add_argument_group("Green function point")
    g.add_argument("--phi", type=float)
    g.add_argument("--phip", type=float)
    g.add_argument("--t", type=float)
    g.add_argument("--tp", type=float)
    g.add_argument("--delta", type=float, help="Feynman damping")

    g = p.add_argument_group("SI ring")
    g.add_argument("--radius-si", type=float)
    g.add_argument("--b-field-si", type=float)
    g.add_argument("--i-cl-si", type=float)
    g.add_argument("--mass-per-length-si", type=float)
    g.add_argument("--charge-quanta", type=int)
    g.add_argument("--winding", type=int, help="report the enhancement coefficient at this M")

    g = p.add_argument_group("output")
    g.add_argument("--output", "-o", help="output path (default stdout)")
    g.add_argument("--format", choices=["csv", "json"])
    g.add_argument("--seed", type=int)
    g.add_argument("--verbose", "-v", action="store_true")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common_parser()
    parser = argparse.ArgumentParser(
        prog="rotvac",
        description="Zero-point rotational energy of a cut ring: sweeps, minimisation, verification",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  %(prog)s sweep --beta 100 --i-cl-hat 9000 --nu-stop 0.05 --nu-step 1e-4 -o sweep.csv
  %(prog)s minimize --beta 100 --i-cl-hat 9000 --nu-max 0.05
  %(prog)s t00 --nu 0.5 --phi 2.0
  %(prog)s estimate --radius-si 1e-6 --b-field-si 10 --nu-max 0.05
  %(prog)s verify
        """,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {VERSION}")
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "sweep": "total energy and angular momentum over a nu grid",
        "minimize": "exact global minimum of the total energy",
        "branches": "constancy branches of the winding number",
        "greens": "Green function at a point, with its delta -> 0 limit",
        "t00": "point-split energy and angular-momentum densities",
        "verify": "run the cross-module oracle suite",
        "estimate": "SI estimates for a physical ring",
    }
    for name, text in helps.items():
        sub.add_parser(name, parents=[common], help=text)
    return parser


def _environment_defaults() -> dict[str, Any]:
    num = get_numerics_config()
    return {
        "nu_max": num.nu_max,
        "epsilons": num.epsilons,
        "richardson_order": num.richardson_order,
        "dt_sequence": num.dt_sequence,
    }


def resolve_config(args: argparse.Namespace) -> RunConfig:
    """Merge environment defaults, the run file and explicit flags, then validate."""
    values = _environment_defaults()
    if args.config:
        values.update(load_run_file(args.config))
    for name in _FLAG_FIELDS:
        v = getattr(args, name, None)
        if v is not None:
            values[name] = v
    return RunConfig.build(**values)


def configure_logging(verbose: bool) -> None:
    level = logging.DEBUG if verbose else getattr(logging, get_output_config().log_level, logging.WARNING)
    logging.basicConfig(
        level=level,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
        force=True,
    )


def render(result: CommandResult, cfg: RunConfig, registry: CommandRegistry) -> None:
    prov = provenance(registry.numerics, result.regulator)
    fmt = cfg.format
    if fmt is None:
        fmt = OutputFormat.CSV if result.tabular else OutputFormat.JSON

    if result.text is not None and cfg.format is None and cfg.output is None:
        write_text(result.text, None)
        return

    if fmt is OutputFormat.CSV:
        table = render_csv(result.columns, result.rows)
        if cfg.output is None:
            write_text(table, None)
            return
        sidecar = render_json({"command": result.command, "config": cfg.to_dict(), "provenance": prov})
        write_text(table, cfg.output)
        try:
            write_text(sidecar, str(sidecar_path(cfg.output)))
        except OutputError:
            # no table without its provenance
            Path(cfg.output).unlink(missing_ok=True)
            raise
        return

    document = {
        "command": result.command,
        "config": cfg.to_dict(),
        "provenance": prov,
        "result": result.document,
    }
    write_text(render_json(document), cfg.output)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.verbose)

    try:
        cfg = resolve_config(args)
        registry = CommandRegistry()
        result = registry.execute(args.command, cfg)
        render(result, cfg, registry)
    except OutputError as e:
        logger.debug("output failure", exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_IO
    except RotvacError as e:
        logger.debug("command failed", exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    if result.exit_code:
        failed = [c["name"] for c in result.document.get("checks", []) if not c["passed"]]
        print(f"{args.command}: failed checks: {', '.join(failed)}", file=sys.stderr)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
