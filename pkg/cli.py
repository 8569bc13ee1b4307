"""
tatezeta — command line
=======================
Generate, verify and tabulate the local Tate zeta polynomials p_m^(k).

Usage
-----
  python cli.py gen 4 0 [--format json|csv|text] [--route expansion|recurrence]
  python cli.py verify [--m-max N] [--k K ...] [--precision BITS] [--out PATH]
                       [--format json|csv|text] [--jobs N] [--config PRESET]
  python cli.py ortho --m-max 16 --k 0
  python cli.py weil --degree-bound 12
  python cli.py strip-shrink --trials 500 --seed 42
  python cli.py eval 4 0 --s 0.75,2

Environment
-----------
  TATE_PRECISION_BITS, TATE_JOBS   (also read from .env)

Exit codes: 0 success, 1 verification failure, 2 usage or IO error.
"""

from __future__ import annotations

import argparse
import io
import json
import os
import sys
from typing import List, Optional

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

# ── Load .env if present ──────────────────────────────────────────────────────
try:
    from dotenv import load_dotenv
    load_dotenv()
except ImportError:
    pass

from tate.core.data_types import OutputFormat, Route
from tate.core.exceptions import ConfigError, DomainError, PoleProximityError, ReportError, TateBaseError
from tate.lrh import LocalRHVerifier, RunConfig
from tate.lrh._core.report.tables import render_table, table_row
from tate.lrh._core.report.writers import render_run, render_run_text

EXIT_OK      = 0
EXIT_FAILED  = 1
EXIT_USAGE   = 2


# ── Argument parsing ──────────────────────────────────────────────────────────

def _complex_point(text: str) -> complex:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected RE,IM, got {text!r}")
    try:
        return complex(float(parts[0]), float(parts[1]))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected RE,IM, got {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tatezeta",
        description="Local Tate zeta polynomials for SU(2, C) and their critical-line certificate.",
    )
    parser.add_argument("--config", default=None, help="Preset name or YAML path (default: built-in defaults).")
    parser.add_argument("--precision", type=int, default=None, help="Working precision in bits (>= 64).")
    parser.add_argument("--verbose", action="store_true", help="Echo structured log entries to stderr.")
    sub = parser.add_subparsers(dest="command", required=True)

    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--precision", type=int, default=None, dest="sub_precision",
                         help="Working precision in bits (>= 64); wins over the global flag.")
    shared.add_argument("--config", default=None, dest="sub_config",
                         help="Preset name or YAML path; wins over the global flag.")

    gen = sub.add_parser("gen", parents=[shared], help="Print p_m^(k) with its critical-line zeros.")
    gen.add_argument("m", type=int)
    gen.add_argument("k", type=int)
    gen.add_argument("--format", choices=OutputFormat.ALL, default=OutputFormat.TEXT)
    gen.add_argument("--route", choices=[Route.EXPANSION, Route.RECURRENCE], default=Route.EXPANSION)

    verify = sub.add_parser("verify", parents=[shared], help="Run every enabled suite over the (m, k) grid.")
    verify.add_argument("--m-max", type=int, default=None, dest="m_max")
    verify.add_argument("--k", type=int, action="append", default=None, dest="k_filter",
                        help="Restrict the grid to this k (repeatable).")
    verify.add_argument("--out", default=None, help="Report path.")
    verify.add_argument("--format", choices=OutputFormat.ALL, default=None)
    verify.add_argument("--jobs", type=int, default=None, help="Worker processes for the lrh grid.")

    ortho = sub.add_parser("ortho", parents=[shared], help="Orthogonality of the critical-line restrictions.")
    ortho.add_argument("--m-max", type=int, required=True, dest="m_max")
    ortho.add_argument("--k", type=int, required=True)

    weil = sub.add_parser("weil", parents=[shared], help="Weil-representation identity suite.")
    weil.add_argument("--degree-bound", type=int, required=True, dest="degree_bound")
    weil.add_argument("--pairing-bound", type=int, default=None, dest="pairing_bound",
                      help="Degree bound for the quadratic pairing checks (default: --degree-bound).")

    strip = sub.add_parser("strip-shrink", parents=[shared], help="Seeded strip-shrinking property harness.")
    strip.add_argument("--trials", type=int, required=True)
    strip.add_argument("--seed", type=int, required=True)

    ev = sub.add_parser("eval", parents=[shared], help="Compare the zeta integral with its exact factorization.")
    ev.add_argument("m", type=int)
    ev.add_argument("k", type=int)
    ev.add_argument("--s", type=_complex_point, required=True, help="Point as RE,IM.")

    return parser


# ── Commands ──────────────────────────────────────────────────────────────────

def _run_and_print(verifier: LocalRHVerifier, suites: Optional[List[str]]) -> int:
    cfg = verifier.config
    result = verifier.run_suite(suites)
    if cfg.output_path:
        print(render_run_text(result, cfg.include_timing), end="")
    else:
        print(render_run(result, cfg.output_format, cfg.include_timing), end="")
    return result.exit_code


def cmd_gen(verifier: LocalRHVerifier, args: argparse.Namespace) -> int:
    rec = verifier.generate(args.m, args.k, args.route)
    print(render_table([table_row(verifier.numeric, rec)], args.format), end="")
    return EXIT_OK


def cmd_verify(verifier: LocalRHVerifier, args: argparse.Namespace) -> int:
    verifier.config.override(
        m_max=args.m_max,
        k_filter=args.k_filter,
        output_path=args.out,
        output_format=args.format,
        parallelism=args.jobs,
    )
    return _run_and_print(verifier, None)


def cmd_ortho(verifier: LocalRHVerifier, args: argparse.Namespace) -> int:
    verifier.config.override(m_max=args.m_max, ortho_m_max=args.m_max, ortho_k_values=[args.k])
    return _run_and_print(verifier, ["ortho"])


def cmd_weil(verifier: LocalRHVerifier, args: argparse.Namespace) -> int:
    verifier.config.override(degree_bound=args.degree_bound, pairing_bound=args.pairing_bound)
    return _run_and_print(verifier, ["weil"])


def cmd_strip(verifier: LocalRHVerifier, args: argparse.Namespace) -> int:
    verifier.config.override(strip_trials=args.trials, strip_seed=args.seed)
    return _run_and_print(verifier, ["strip"])


def cmd_eval(verifier: LocalRHVerifier, args: argparse.Namespace) -> int:
    print(json.dumps(verifier.eval(args.m, args.k, args.s), indent=2, sort_keys=True))
    return EXIT_OK


COMMANDS = {
    "gen":          cmd_gen,
    "verify":       cmd_verify,
    "ortho":        cmd_ortho,
    "weil":         cmd_weil,
    "strip-shrink": cmd_strip,
    "eval":         cmd_eval,
}


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig(args.sub_config if args.sub_config is not None else args.config)
        precision = args.sub_precision if args.sub_precision is not None else args.precision
        cfg.override(precision_bits=precision, console_log=True if args.verbose else None)
        verifier = LocalRHVerifier(cfg)
        return COMMANDS[args.command](verifier, args)
    except (ConfigError, DomainError, PoleProximityError, ReportError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except TateBaseError as exc:
        print(f"verification error: {exc}", file=sys.stderr)
        return EXIT_FAILED


if __name__ == "__main__":
    if hasattr(sys.stdout, "buffer"):
        sys.stdout = io.TextIOWrapper(sys.stdout.buffer, encoding="utf-8", errors="replace")
    sys.exit(main())
