#!/usr/bin/env python3
"""
ridgewalk.py
Exploring the solution space of differentiable games: optimizer phase portraits,
truncated Lyapunov exponents, branching tree search and bifurcation verdicts.

Each subcommand reads one JSON run configuration, writes CSV/JSON artifacts into the
output directory and finishes with a run summary.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from pathlib import Path
from typing import List, Optional

__version__ = "0.1.0"

from utils.commands import COMMANDS
from utils.compute_hash import artifact_digests
from utils.config import RunConfig, load_config_file
from utils.emitters import write_json
from utils.errors import ArtifactWriteError, ConfigError, NumericalError

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERIC = 3
EXIT_IO = 4


def parse_point(text: str) -> List[float]:
    """Accept "0.1,0.2" or a JSON list."""
    text = text.strip()
    try:
        values = json.loads(text) if text.startswith("[") else [float(v) for v in text.split(",") if v.strip()]
    except (ValueError, json.JSONDecodeError):
        raise argparse.ArgumentTypeError(f"invalid point {text!r}; expected comma-separated numbers")
    if not values or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in values):
        raise argparse.ArgumentTypeError(f"invalid point {text!r}; expected comma-separated numbers")
    return [float(v) for v in values]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", metavar="FILE", help="Path to ridgewalk.config.json (otherwise searched for)")
    common.add_argument("--output-dir", metavar="DIR", help="Directory for artifacts (overrides config)")
    common.add_argument("--seed", type=int, help="Random seed (overrides config)")
    common.add_argument("--point", type=parse_point, help="Joint parameters, e.g. 0.1,-0.3 (overrides config)")
    common.add_argument("--threads", type=int, help="Worker threads (default: RIDGEWALK_THREADS or 1)")
    common.add_argument("--verbose", action="store_true", help="Verbose logging")
    common.add_argument("-q", "--quiet", action="store_true", help="Quiet (errors only)")
    common.add_argument("--debug", action="store_true", help="Debug logging")
    common.add_argument("--log-file", metavar="FILE", help="Also write logs to FILE")

    parser = argparse.ArgumentParser(
        description="Find diverse solutions of differentiable games by branching at bifurcations",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)
    helps = {
        "phase-portrait": "SimSGD and LOLA trajectories from a grid of starts",
        "heatmap": "k-step Lyapunov exponent over a grid of starts",
        "tune-start": "Maximize an exponent objective to find a starting point",
        "grr": "Branching tree search from the tuned start",
        "spectrum": "Eigenvalues of the game Hessian and optimizer Jacobian at a point",
        "classify": "Normal-form bifurcation verdict at a point",
        "ipd-table": "Solution diversity table on the iterated prisoner's dilemma",
    }
    for name in COMMANDS:
        sub.add_parser(name, parents=[common], help=helps[name], formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    return parser


def setup_logging(args) -> None:
    level = logging.DEBUG if args.debug else logging.ERROR if args.quiet else logging.INFO
    handlers: List[logging.Handler] = [logging.StreamHandler()]
    if args.log_file:
        try:
            handlers.append(logging.FileHandler(args.log_file, encoding="utf-8"))
        except OSError as e:
            logging.error(f"❌ Failed to set up log file {args.log_file}: {e}")
            sys.exit(EXIT_IO)
    logging.basicConfig(level=level, format="%(asctime)s - %(levelname)s - %(message)s", handlers=handlers, force=True)


def run_command(args) -> int:
    start = time.time()
    cfg = RunConfig.from_dict(load_config_file(args.config)).with_overrides(
        output_dir=args.output_dir, seed=args.seed, point=args.point, threads=args.threads
    )
    if args.verbose:
        logging.info(f"ℹ️ Running {args.command} with output_dir={cfg.output_dir}, seed={cfg.seed}")
    result = COMMANDS[args.command](cfg)

    elapsed = time.time() - start
    summary = {
        "subcommand": args.command,
        "version": __version__,
        "config": cfg.to_dict(),
        "artifacts": [str(p) for p in result.artifacts],
        "sha256": artifact_digests(result.artifacts),
        "results": result.summary,
    }
    summary_path = write_json(Path(cfg.output_dir) / f"{args.command}_summary.json", summary)
    logging.info(f"✅ {args.command} finished in {elapsed:.2f}s; summary at {summary_path}")
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.quiet and args.debug:
        logging.error("❌ Cannot use --quiet and --debug together")
        return EXIT_CONFIG
    setup_logging(args)

    try:
        return run_command(args)
    except ConfigError as e:
        logging.error(f"❌ Configuration error: {e}")
        return EXIT_CONFIG
    except NumericalError as e:
        logging.error(f"❌ Numerical failure: {e}")
        return EXIT_NUMERIC
    except (ArtifactWriteError, OSError) as e:
        logging.error(f"❌ I/O failure: {e}")
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
