"""Command-line interface for the simulation sweeps.

Exit codes: 0 success, 2 configuration error, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace

from .config import ConfigError, ExperimentConfig, load_config
from .experiments import precoder_demo, run_distance_sweep, run_power_sweep
from .linalg import NumericalError

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", metavar="PATH", help="config file (INI sections)")
    parser.add_argument("--seed", type=int, help="override the master seed")
    parser.add_argument("--trials", type=int, help="override the trial count")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="swarmlink",
        description="Monte Carlo sweeps for multi-satellite uplink precoding",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("distance-sweep", help="rate vs inter-satellite distance")
    _add_common(p)
    p.add_argument("--out", default="distance_sweep.csv", help="output CSV path")
    p.add_argument("--workers", type=int, default=1, help="parallel worker count")

    p = sub.add_parser("power-sweep", help="rate vs transmit power")
    _add_common(p)
    p.add_argument("--out", default="power_sweep.csv", help="output CSV path")
    p.add_argument("--workers", type=int, default=1, help="parallel worker count")

    p = sub.add_parser("precoder-demo", help="print one precoder with SLNR/SINR")
    _add_common(p)

    p = sub.add_parser("validate-config", help="check a config file and exit")
    p.add_argument("--config", metavar="PATH", required=True)

    return parser


def _load(args) -> ExperimentConfig:
    cfg = load_config(args.config) if args.config else ExperimentConfig()
    overrides = {}
    if getattr(args, "seed", None) is not None:
        overrides["seed"] = args.seed
    if getattr(args, "trials", None) is not None:
        overrides["trials"] = args.trials
    if overrides:
        cfg = replace(cfg, **overrides)
    cfg.validate()
    return cfg


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "validate-config":
            cfg = load_config(args.config)
            cfg.validate()
            print(f"config OK: {args.config}")
            return EXIT_OK

        cfg = _load(args)
        if args.command == "distance-sweep":
            result = run_distance_sweep(cfg, workers=args.workers)
            result.write_csv(args.out)
            print(f"wrote {args.out} ({len(result.grid_values)} grid points)")
        elif args.command == "power-sweep":
            result = run_power_sweep(cfg, workers=args.workers)
            result.write_csv(args.out)
            print(f"wrote {args.out} ({len(result.grid_values)} grid points)")
        elif args.command == "precoder-demo":
            print(precoder_demo(cfg))
        return EXIT_OK
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except NumericalError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
