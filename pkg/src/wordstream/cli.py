"""Batch command line: read a CSV/TSV, write the SVG and/or JSON layout.

Exit codes: 0 on success, 1 on input/pipeline errors, 2 on bad flags or an
invalid configuration.
"""

from __future__ import annotations

import argparse
import sys
from importlib.resources import files
from pathlib import Path

from .errors import ConfigError, WordStreamError
from .layout import LayoutConfig
from .pipeline import run_pipeline
from .render import emit_json, emit_svg
from .types import CategoryMode, Metric, TableFormat, TokenizeMode

SAMPLE_DATASET = "data/sample.csv"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wordstream",
        description="Turn a time-series text table into a WordStream picture.",
    )
    parser.add_argument("--input", required=True, help="input CSV/TSV file")
    parser.add_argument(
        "--format",
        choices=["csv", "tsv"],
        help="input format (default: by file extension)",
    )
    parser.add_argument("--time-col", required=True, help="name of the time column")
    parser.add_argument("--text-col", required=True, help="name of the text column")
    parser.add_argument("--mode", choices=["pos", "ner"], default="pos")
    parser.add_argument(
        "--metric", choices=["frequency", "sudden", "tfidf"], default="frequency"
    )
    parser.add_argument("--min-font", type=float, default=12.0)
    parser.add_argument("--max-font", type=float, default=42.0)
    parser.add_argument("--top-k", type=int, default=8)
    parser.add_argument("--width", type=float, default=1200.0)
    parser.add_argument("--height", type=float, default=600.0)
    parser.add_argument("--tokenize", choices=["word", "chunk"], default="word")
    parser.add_argument("--out-svg", metavar="PATH", help="write SVG here")
    parser.add_argument("--out-json", metavar="PATH", help="write the JSON layout here")
    parser.add_argument(
        "--stats", action="store_true", help="print row/drop/term counts and timings"
    )
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    config = LayoutConfig(
        min_font=args.min_font,
        max_font=args.max_font,
        top_k=args.top_k,
        width=args.width,
        height=args.height,
        mode=CategoryMode(args.mode),
        metric=Metric(args.metric),
        tokenization=TokenizeMode(args.tokenize),
    )
    try:
        config.validate()
    except ConfigError as exc:
        print(f"config: {exc}", file=sys.stderr)
        return 2

    data = _read_input(args.input)
    if data is None:
        print(f"ingest: cannot read input file {args.input!r}", file=sys.stderr)
        return 1
    fmt = TableFormat(args.format) if args.format else _format_for(args.input)

    try:
        outcome = run_pipeline(data, fmt, args.time_col, args.text_col, config)
    except WordStreamError as exc:
        print(f"{exc.stage}: {exc}", file=sys.stderr)
        return 1

    if args.out_svg:
        Path(args.out_svg).write_text(emit_svg(outcome.result), encoding="utf-8")
    if args.out_json:
        Path(args.out_json).write_text(emit_json(outcome.result), encoding="utf-8")
    if args.stats:
        _print_stats(outcome.stats)
    return 0


def _read_input(path: str) -> bytes | None:
    if path == "sample":
        return sample_bytes()
    try:
        return Path(path).read_bytes()
    except OSError:
        return None


def sample_bytes() -> bytes:
    """The bundled demo dataset (also served by the HTTP service)."""
    return files("wordstream").joinpath(SAMPLE_DATASET).read_bytes()


def _format_for(path: str) -> TableFormat:
    return TableFormat.TSV if path.lower().endswith(".tsv") else TableFormat.CSV


def _print_stats(stats) -> None:
    print(f"rows parsed:        {stats.rows}")
    print(f"rows dropped:       {stats.dropped_rows} (ragged: {stats.ragged_rows})")
    print(f"decode repairs:     {stats.decode_replacements}")
    print(f"records kept:       {stats.records}")
    print(f"time boxes:         {stats.boxes}")
    print(f"tokens kept:        {stats.tokens}")
    print(f"terms:              {stats.terms}")
    print(f"words placed:       {stats.placed} (+{stats.dropped_words} dropped)")
    print(f"extract time:       {stats.extract_seconds:.3f}s")
    for stage, seconds in stats.stages.items():
        print(f"  {stage:9s} {seconds:.3f}s")
    print(f"total time:         {stats.total_seconds:.3f}s")


if __name__ == "__main__":
    sys.exit(main())
