"""Command line entry point: ``qhsing <subcommand> --input job.json``."""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import replace
from pathlib import Path

from .errors import InputError, TruncationError
from .report import parse_job, render_report, run_job

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_UNKNOWN = 3

OUTPUT_DIR_ENV = "QHSING_OUTPUT_DIR"

SUBCOMMANDS = {
    "classify": ("classify",),
    "plurigenera": ("plurigenera",),
    "kodaira": ("kodaira",),
    "hilbert": ("hilbert",),
    "report": ("classify", "plurigenera", "kodaira"),
}


def _truncation(text: str) -> int | None:
    if text == "auto":
        return None
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or 'auto', got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError("truncation must be >= 0")
    return value


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qhsing",
        description="Singularity verdicts, plurigenera and log Kodaira dimension "
        "of quasihomogeneous affine varieties.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in SUBCOMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--input", required=True, help="job document (JSON); '-' reads stdin")
        p.add_argument("--max-m", type=_positive, default=None, help="largest m (overrides the job)")
        p.add_argument(
            "--truncation", type=_truncation, default=argparse.SUPPRESS,
            help="series truncation, an integer or 'auto' (overrides the job)",
        )
        p.add_argument("--format", choices=("human", "machine"), default="human")
        p.add_argument("--strict", action="store_true", help="exit 3 when any verdict is UNKNOWN")
        p.add_argument("--output-dir", default=None, help=f"write the report here (env: {OUTPUT_DIR_ENV})")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.input == "-":
            text = sys.stdin.read()
            stem = "stdin"
        else:
            path = Path(args.input)
            text = path.read_text(encoding="utf-8")
            stem = path.stem
        job = parse_job(text)
        if args.max_m is not None:
            job = replace(job, max_m=args.max_m)
        if hasattr(args, "truncation"):
            job = replace(job, truncation=args.truncation)
        report = run_job(job, SUBCOMMANDS[args.command])
        out = render_report(report, args.format)
    except (InputError, TruncationError, OSError) as e:
        print(f"qhsing: error: {e}", file=sys.stderr)
        return EXIT_INPUT

    out_dir = args.output_dir or os.environ.get(OUTPUT_DIR_ENV)
    if out_dir:
        suffix = "json" if args.format == "machine" else "txt"
        target = Path(out_dir) / f"{stem}.{args.command}.{suffix}"
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text(out, encoding="utf-8")
        print(target)
    else:
        sys.stdout.write(out)

    if args.strict and report.unknowns():
        print(f"qhsing: UNKNOWN verdicts: {', '.join(report.unknowns())}", file=sys.stderr)
        return EXIT_UNKNOWN
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
