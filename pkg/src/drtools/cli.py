"""Command-line entry point.

Zero-configuration workflow: point the tool at a source root, pick the
contexts and the output format, read the report. Exit codes: 0 success
(diagnostics allowed), 1 usage error, 2 fatal I/O or configuration error,
3 findings present when --fail-on-findings asked for gating.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import __version__
from .errors import ConfigError
from .heuristics import load_thresholds
from .java import scan_project
from .reporting import (
    CONTEXTS,
    build_report,
    render_csv,
    render_json,
    render_pretty,
    utc_timestamp,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FATAL = 2
EXIT_FINDINGS = 3

DEFAULT_OUTPUT_DIR = "drtools-out"


@dataclass
class CliOptions:
    source_root: str
    contexts: list[str] = field(default_factory=lambda: ["summary"])
    top: int | None = None
    format: str = "pretty"
    output_dir: str = DEFAULT_OUTPUT_DIR
    thresholds_path: str | None = None
    no_timestamp: bool = False
    fail_on_findings: bool = False


class _Parser(argparse.ArgumentParser):
    # Usage problems exit 1 (2 is reserved for fatal I/O errors).
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    if value <= 0:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


_CONTEXT_FLAGS = (
    ("-s", "--summary", "summary"),
    ("-n", "--namespaces", "namespaces"),
    ("-t", "--types", "types"),
    ("-m", "--methods", "methods"),
    ("-c", "--coupling", "coupling"),
    (None, "--type-coupling", "type-coupling"),
    ("-d", "--dependencies", "dependencies"),
    (None, "--cycles", "cycles"),
    (None, "--findings", "findings"),
)


def make_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="drtools",
        description="Analyze a Java source tree and report code metrics, "
        "coupling, dependency cycles, and threshold findings.",
    )
    parser.add_argument("source_root", help="root directory of the Java sources")
    parser.add_argument(
        "-a", "--all", action="store_true",
        help="select every context (top 5 rows each unless --top is given)",
    )
    for short, long_flag, context in _CONTEXT_FLAGS:
        flags = [f for f in (short, long_flag) if f]
        parser.add_argument(
            *flags, dest=f"ctx_{context.replace('-', '_')}", action="store_true",
            help=f"include the {context} context",
        )
    parser.add_argument(
        "--top", type=_positive_int, metavar="N",
        help="show only the first N rows per context (pretty format only)",
    )
    parser.add_argument(
        "-f", "--format", choices=("pretty", "csv", "json"), default="pretty",
        help="output format (default: pretty)",
    )
    parser.add_argument(
        "-o", "--output", default=DEFAULT_OUTPUT_DIR, metavar="DIR",
        help=f"output directory for csv/json (default: ./{DEFAULT_OUTPUT_DIR})",
    )
    parser.add_argument(
        "--thresholds", metavar="FILE",
        help="threshold config: 'key = value' lines or a JSON object",
    )
    parser.add_argument(
        "--no-timestamp", action="store_true",
        help="omit the generation timestamp (reproducible output)",
    )
    parser.add_argument(
        "--fail-on-findings", action="store_true",
        help="exit with status 3 when any heuristic finding triggers",
    )
    parser.add_argument("-v", "--version", action="version", version=f"drtools {__version__}")
    return parser


def parse_args(argv) -> CliOptions:
    """Turn raw arguments into validated options (may exit for usage errors)."""
    ns = make_parser().parse_args(argv)
    contexts = [
        context
        for _, _, context in _CONTEXT_FLAGS
        if getattr(ns, f"ctx_{context.replace('-', '_')}")
    ]
    top = ns.top
    if ns.all:
        contexts = list(CONTEXTS)
        if top is None:
            top = 5
    elif not contexts:
        contexts = ["summary"]
    return CliOptions(
        source_root=ns.source_root,
        contexts=contexts,
        top=top,
        format=ns.format,
        output_dir=ns.output,
        thresholds_path=ns.thresholds,
        no_timestamp=ns.no_timestamp,
        fail_on_findings=ns.fail_on_findings,
    )


def run(opts: CliOptions, stdout=None, stderr=None) -> int:
    """Scan, compute, render. Returns the process exit code."""
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr

    try:
        thresholds = load_thresholds(opts.thresholds_path)
    except ConfigError as exc:
        print(f"drtools: {exc}", file=err)
        return EXIT_FATAL

    try:
        model, diagnostics = scan_project(opts.source_root)
    except (FileNotFoundError, NotADirectoryError) as exc:
        print(f"drtools: {exc}", file=err)
        return EXIT_FATAL

    for diag in diagnostics:
        print(str(diag), file=err)

    generated_at = None if opts.no_timestamp else utc_timestamp()
    report = build_report(model, thresholds, generated_at=generated_at)

    try:
        if opts.format == "pretty":
            out.write(render_pretty(report, opts.contexts, opts.top))
        elif opts.format == "csv":
            render_csv(report, opts.output_dir)
        else:
            render_json(report, Path(opts.output_dir) / "report.json")
    except OSError as exc:
        print(f"drtools: cannot write output: {exc}", file=err)
        return EXIT_FATAL

    if opts.fail_on_findings and report.findings:
        return EXIT_FINDINGS
    return EXIT_OK


def main(argv=None) -> int:
    opts = parse_args(argv if argv is not None else sys.argv[1:])
    return run(opts)


if __name__ == "__main__":
    sys.exit(main())
