"""Command-line entry point: ``reqmine analyze --input survey.csv``.

Exit codes: 0 success, 1 input or validation error, 2 internal
inconsistency between pipeline stages.
"""
from __future__ import annotations

import argparse
import logging
import os
import sys
from pathlib import Path

from .apriori import AprioriParams
from .errors import ReqmineError
from .pipeline import PipelineConfig, check_report, export_dot, export_json, render_text, run_pipeline

EXIT_OK, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2

_ANSI = {"heading": "\033[1m", "warning": "\033[33m", "highlight": "\033[1;32m"}


def _ansi_style(text, kind):
    code = _ANSI.get(kind)
    return f"{code}{text}\033[0m" if code else text


def _use_color(stream) -> bool:
    if os.environ.get("REQMINE_NO_COLOR"):
        return False
    return hasattr(stream, "isatty") and stream.isatty()


def _fraction(text):
    value = float(text)
    if not 0.0 <= value <= 1.0:
        raise argparse.ArgumentTypeError(f"{text} is not in [0, 1]")
    return value


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        # usage mistakes are input errors, not internal ones
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="reqmine",
        description="Mine inter-related, prioritized requirements from yes/no survey responses.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    a = sub.add_parser("analyze", help="run the full analysis on one survey CSV")
    a.add_argument("--input", required=True, type=Path, help="survey CSV (header + 0/1 rows)")
    a.add_argument("--min-support", type=_fraction, default=0.5)
    a.add_argument("--min-confidence", type=_fraction, default=0.75)
    a.add_argument("--max-rule-len", type=int, default=2)
    a.add_argument("--min-lift", type=float, default=1.0)
    a.add_argument(
        "--top-threshold",
        type=float,
        default=None,
        help="frequency cut for top requirements (default: --min-support)",
    )
    a.add_argument(
        "--complete-graph",
        action="store_true",
        help="correlate every pair of requirements, not only rule-linked ones",
    )
    a.add_argument(
        "--all-attributes",
        action="store_true",
        help="use every attribute as a requirement instead of the top ones",
    )
    a.add_argument("--format", choices=("text", "json"), default="text")
    a.add_argument("--dot", type=Path, default=None, help="also write a Graphviz DOT file")
    a.add_argument("--out", type=Path, default=None, help="write the report here instead of stdout")
    return parser


def _write(path: Path, text: str):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.WARNING, format="reqmine: %(levelname)s: %(message)s")

    try:
        config = PipelineConfig(
            input_path=args.input,
            params=AprioriParams(
                min_support=args.min_support,
                min_confidence=args.min_confidence,
                max_rule_length=args.max_rule_len,
                min_lift=args.min_lift,
            ),
            top_threshold=args.top_threshold,
            complete_graph=args.complete_graph,
            all_attributes=args.all_attributes,
            output_format=args.format,
            out_path=args.out,
            dot_path=args.dot,
        )
        report = run_pipeline(config)
    except (ReqmineError, ValueError, TypeError, OSError) as exc:
        print(f"reqmine: error: {exc}", file=sys.stderr)
        return EXIT_INPUT

    try:
        check_report(report)
    except AssertionError as exc:
        print(f"reqmine: internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL

    if config.output_format == "json":
        text = export_json(report)
    else:
        to_tty = config.out_path is None and _use_color(sys.stdout)
        text = render_text(report, style=_ansi_style if to_tty else None)

    if config.out_path is not None:
        _write(config.out_path, text)
    else:
        sys.stdout.write(text)
    if config.dot_path is not None:
        _write(config.dot_path, export_dot(report.graph, report.forest, report.groups))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
