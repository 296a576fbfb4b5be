"""Command-line entry point.

Subcommands: ingest-check, synth, cescin, audit, curves, surplus, teams,
chart, run. Exit codes: 0 success, 1 usage error, 2 data error, 3 numeric
failure. ``DRAFTVAL_OUT`` sets the default output directory.
"""

from __future__ import annotations

import argparse
import dataclasses
import logging
import os
import sys
from pathlib import Path
from typing import Optional, Sequence

from .config import RunConfig, load_config
from .core_model import Metric
from .io import DataError, load_draft_csv, write_draft_csv
from .pipeline import PipelineError, run_pipeline
from .reference_chart import reference_chart
from .synth import SynthConfig, generate_synthetic_draft

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_NUMERIC = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit 1 on usage errors, not argparse's 2
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="draftval", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, data=True):
        if data:
            p.add_argument("data", help="draft CSV file")
        p.add_argument("--config", type=Path, help="flat key/value config file")
        p.add_argument(
            "--out",
            type=Path,
            default=Path(os.environ.get("DRAFTVAL_OUT", "out")),
            help="output directory (default $DRAFTVAL_OUT or ./out)",
        )
        p.add_argument(
            "--metric",
            choices=["toi", "gp", "gvt", "all"],
            default="all",
            help="restrict analysis to one metric",
        )
        p.add_argument("--by-position", action="store_true", help="stratify by position group")

    common(sub.add_parser("ingest-check", help="validate a draft CSV"))
    common(sub.add_parser("cescin", help="integrated scouting ordering and factors"))
    common(sub.add_parser("audit", help="optimal / nearly-optimal replay percentages"))
    common(sub.add_parser("curves", help="expected-performance curves per ordering"))
    common(sub.add_parser("surplus", help="scouting surplus per pick and in dollars"))
    common(sub.add_parser("teams", help="per-team gains and significance checks"))
    common(sub.add_parser("chart", help="monotone draft value pick chart"))

    p = sub.add_parser("run", help="full pipeline")
    common(p)
    p.add_argument("--seed", type=int, help="ignore the data file and use synthetic data")

    p = sub.add_parser("synth", help="write a synthetic draft CSV")
    common(p, data=False)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--years", type=int, default=5)
    p.add_argument("--picks", type=int, default=210)
    p.add_argument("--teams", type=int, default=30)

    sub.add_parser("reference-chart", help="print the embedded published pick chart")
    return parser


def _run_config(args) -> RunConfig:
    cfg = RunConfig()
    if getattr(args, "config", None):
        cfg = load_config(args.config, cfg)
    if getattr(args, "metric", "all") != "all":
        cfg = dataclasses.replace(cfg, metrics=(Metric(args.metric),))
    if getattr(args, "by_position", False):
        cfg = dataclasses.replace(cfg, by_position=True)
    return cfg


# artifact keys each partial subcommand is expected to produce
_SUBCOMMAND_KEYS = {
    "cescin": ("cescin",),
    "audit": ("audit", "audit_csv"),
    "curves": tuple(),
    "surplus": ("gains",),
    "teams": ("teams", "team_tests"),
    "chart": ("chart",),
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    logging.basicConfig(level=logging.INFO, format="%(levelname)s %(message)s")
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    try:
        if args.command == "reference-chart":
            for sel, value in reference_chart().rows():
                print(f"{sel},{value}")
            return EXIT_OK

        if args.command == "synth":
            config = SynthConfig(
                seed=args.seed, years=args.years, picks_per_year=args.picks, teams=args.teams
            )
            classes = generate_synthetic_draft(config)
            args.out.mkdir(parents=True, exist_ok=True)
            path = args.out / "synthetic.csv"
            write_draft_csv(classes, path)
            print(path)
            return EXIT_OK

        cfg = _run_config(args)
        if args.command == "run" and args.seed is not None:
            classes = generate_synthetic_draft(SynthConfig(seed=args.seed))
        else:
            classes = load_draft_csv(args.data, cfg.imputation)

        if args.command == "ingest-check":
            for dc in classes:
                print(f"year {dc.year}: {len(dc)} records")
            return EXIT_OK

        artifacts = run_pipeline(classes, cfg, args.out)
        if args.command == "run":
            keys = sorted(artifacts)
        else:
            keys = [k for k in _SUBCOMMAND_KEYS[args.command] if k in artifacts]
            if args.command == "curves":
                keys = [k for k in artifacts if k.startswith("curve_")]
        for key in keys:
            print(artifacts[key])
        return EXIT_OK
    except DataError as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except PipelineError as exc:
        print(f"pipeline error: {exc}", file=sys.stderr)
        if isinstance(exc.cause, DataError) or exc.stage == "ingest":
            return EXIT_DATA
        return EXIT_NUMERIC
    except FileNotFoundError as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except (ValueError, ArithmeticError) as exc:
        print(f"numeric error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
