#!/usr/bin/env python3
"""
Command-line front end for multi-state imaginarity and coherence analysis.

Subcommands:

- analyze: Gram matrix, rank criteria, third-order witness, optional quantifiers
- invariant: one Bargmann invariant (and its quadratic certificate for qubits)
- quantify: Im_R1 and C_R1 with their bounds
- witness: imaginarity / permutation-equality witnesses for one sequence
- reproduce: named reference fixtures, computed against expected values
- random: reproducible random multi-state documents
- reconstruct: an invariant and its conjugate from an overlap table

Exit codes: 0 success, 1 a fixture check failed, 2 bad input or flags.

Example:
    python3 src/app_cli.py random --dim 2 --count 3 --seed 7 | python3 src/app_cli.py analyze --quantify
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

# Add src/ to the path so the packages import when run directly.
sys.path.insert(0, str(Path(__file__).resolve().parent))

from cli.commands import (
    cmd_analyze,
    cmd_invariant,
    cmd_quantify,
    cmd_random,
    cmd_reconstruct,
    cmd_reproduce,
    cmd_witness,
    render_report,
    render_reproduce,
)
from cli.documents import MultiStateDocument, ReportDocument, dumps, load_document, parse_overlap_table, write_text
from criteria.fixtures import FIXTURE_NAMES
from errors import BadFlagError, MultiStateError
from settings import get_settings

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2


def _print_banner(title: str) -> None:
    bar = "=" * 70
    print(f"\n{bar}\n  {title}\n{bar}\n")


def _parse_seq(raw: Optional[str]) -> Optional[List[str]]:
    if raw is None:
        return None
    labels = [x.strip() for x in raw.split(",")]
    if not all(labels):
        raise BadFlagError(f"--seq must be comma-separated labels, got {raw!r}")
    return labels


def _parse_perm(raw: Optional[str]) -> Optional[List[int]]:
    if raw is None:
        return None
    try:
        return [int(x) for x in raw.split(",")]
    except ValueError as exc:
        raise BadFlagError(f"--perm must be comma-separated 0-based positions, got {raw!r}") from exc


def _check_tolerance(value: Optional[float]) -> Optional[float]:
    if value is not None and not value > 0:
        raise BadFlagError(f"--tolerance must be positive, got {value!r}")
    return value


def _read(args: argparse.Namespace):
    stdin_text = None if args.input else sys.stdin.read()
    return load_document(args.input, stdin_text)


def _multistate_document(args: argparse.Namespace) -> MultiStateDocument:
    return MultiStateDocument.from_json(_read(args))


def _emit(report: ReportDocument, args: argparse.Namespace, title: str) -> None:
    if args.json:
        print(dumps(report.to_json()))
        return
    _print_banner(title)
    print(render_reproduce(report) if report.command == "reproduce" else render_report(report))


def _add_common(p: argparse.ArgumentParser, *, needs_input: bool = True) -> None:
    if needs_input:
        p.add_argument("--input", default=None, help="Path to the input JSON document (default: read stdin).")
    p.add_argument("--json", action="store_true", help="Print the machine-readable report instead of the table.")
    p.add_argument("--verbose", action="store_true", help="Log optimizer and fixture progress to stderr.")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description="Analyze multi-state imaginarity and coherence.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="Rank criteria, witnesses and (optionally) quantifiers for a multi-state.")
    _add_common(p)
    p.add_argument("--tolerance", type=float, default=None, help="Absolute Gram rank tolerance (default: relative).")
    p.add_argument("--quantify", action="store_true", help="Also compute Im_R1 and C_R1 (qubits only).")

    p = sub.add_parser("invariant", help="Tr(rho_i1 ... rho_im) for one label sequence.")
    _add_common(p)
    p.add_argument("--seq", required=True, help="Comma-separated state labels, 1-based or document labels, e.g. 1,2,3.")

    p = sub.add_parser("quantify", help="Im_R1 and C_R1 with their Gram bounds (qubits only).")
    _add_common(p)

    p = sub.add_parser("witness", help="Invariant witnesses for one label sequence.")
    _add_common(p)
    p.add_argument("--seq", required=True, help="Comma-separated state labels, e.g. 1,2,3.")
    p.add_argument(
        "--perm",
        default=None,
        help="Comma-separated 0-based positions; compares the sequence with its reordering (coherence witness).",
    )
    p.add_argument("--tolerance", type=float, default=None, help="Witness tolerance (default from settings).")

    p = sub.add_parser("reproduce", help="Recompute reference fixtures and compare with expected values.")
    _add_common(p, needs_input=False)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--fixture", choices=list(FIXTURE_NAMES), help="Fixture to reproduce.")
    group.add_argument("--all", action="store_true", help="Reproduce every fixture.")

    p = sub.add_parser("random", help="Emit a reproducible random multi-state document.")
    p.add_argument("--dim", type=int, default=2, help="Hilbert space dimension (>= 2).")
    p.add_argument("--count", type=int, default=3, help="Number of states (>= 1).")
    p.add_argument("--pure", action="store_true", help="Draw pure states instead of full-rank mixed states.")
    p.add_argument("--seed", type=int, default=None, help="Random seed (default from settings).")
    p.add_argument("--output", default=None, help="Write the document here instead of stdout.")
    p.add_argument("--verbose", action="store_true", help="Log to stderr.")

    p = sub.add_parser("reconstruct", help="Invariant and its conjugate from a qubit overlap table.")
    _add_common(p)
    p.add_argument("--seq", default=None, help="Comma-separated labels (default: every state in order).")
    return parser


def _run(args: argparse.Namespace) -> int:
    if args.command == "analyze":
        report = cmd_analyze(
            _multistate_document(args), tolerance=_check_tolerance(args.tolerance), quantify=args.quantify
        )
        _emit(report, args, "Multi-state analysis")
    elif args.command == "invariant":
        _emit(cmd_invariant(_multistate_document(args), _parse_seq(args.seq)), args, "Bargmann invariant")
    elif args.command == "quantify":
        _emit(cmd_quantify(_multistate_document(args)), args, "Robustness quantifiers")
    elif args.command == "witness":
        report = cmd_witness(
            _multistate_document(args),
            _parse_seq(args.seq),
            _parse_perm(args.perm),
            _check_tolerance(args.tolerance),
        )
        _emit(report, args, "Invariant witnesses")
    elif args.command == "reproduce":
        report, code = cmd_reproduce(None if args.all else [args.fixture])
        _emit(report, args, "Fixture reproduction")
        return code
    elif args.command == "random":
        seed = get_settings().seed if args.seed is None else args.seed
        text = dumps(cmd_random(args.dim, args.count, pure=args.pure, seed=seed).to_json())
        if args.output:
            write_text(args.output, text)
            logger.info("wrote %d-state document to %s", args.count, args.output)
        else:
            print(text)
    elif args.command == "reconstruct":
        table = parse_overlap_table(_read(args))
        _emit(cmd_reconstruct(table, _parse_seq(args.seq)), args, "Overlap reconstruction")
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(asctime)s %(levelname)s %(message)s",
        stream=sys.stderr,
    )
    try:
        return _run(args)
    except MultiStateError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
