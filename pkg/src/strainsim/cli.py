"""Command-line entry point.

One subcommand per scenario, each driven entirely by a TOML config
file. Exit status: 0 on success, 2 for any configuration problem, 3
when a numerical guard stops the run.
"""

from __future__ import annotations

import argparse
import sys

from .config import SCENARIOS, ConfigError, load_config
from .dynamics import NumericalGuardError
from .scenarios import run_scenario

_DESCRIPTIONS = {
    "fringe": "classical interference fringe versus differential phase",
    "crosstalk": "phase picked up by neighboring guides at fixed depth",
    "hom": "two-photon coincidence scans (delay and phase)",
    "transient": "switching transient of the piezo-driven ram",
    "field": "stress field on a rectangular grid under the ram",
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="strainsim",
        description="Strain-optic phase control simulations for silica chips.",
    )
    subparsers = parser.add_subparsers(dest="scenario", required=True)
    for name in SCENARIOS:
        sub = subparsers.add_parser(name, help=_DESCRIPTIONS[name])
        sub.add_argument("--config", required=True, help="path to the TOML config file")
        sub.add_argument("--out", required=True, help="output directory for run artifacts")
        sub.add_argument(
            "--svg", action="store_true", help="also render SVG plots next to the CSV"
        )
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = load_config(args.config, args.scenario, args.out, write_svg=args.svg)
        manifest = run_scenario(config)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except NumericalGuardError as exc:
        print(f"numerical guard: {exc}", file=sys.stderr)
        return 3
    print(f"{args.scenario}: wrote {', '.join(manifest.files)} to {args.out}")
    for key in sorted(manifest.metrics):
        print(f"  {key} = {manifest.metrics[key]:.6g}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
