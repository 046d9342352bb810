"""Command-line entry point: ``splitapply {summarize,accumarray,bench}``.

Exit codes: 0 success, 2 malformed input, 3 unknown column/aggregator/engine,
4 benchmark engines disagree.
"""

from __future__ import annotations

import argparse
import csv
import sys
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Optional

from splitapply.accum import accumarray, display_lines
from splitapply.bench import BenchMismatch, run_bench
from splitapply.core import OrderPolicy, make_aggregator
from splitapply.csvio import CsvParseError, parse_column, parse_floats, read_rows, write_table, write_text
from splitapply.engines import EngineKind, summarize
from splitapply.errors import NoSuchColumn, SubscriptOutOfBounds
from splitapply.table import Column, table_from_columns

EXIT_OK, EXIT_INPUT, EXIT_LOOKUP, EXIT_MISMATCH = 0, 2, 3, 4


@dataclass
class CliConfig:
    subcommand: str
    input: Optional[str] = None
    output: Optional[str] = None
    key: list = field(default_factory=list)
    value: list = field(default_factory=list)
    agg: str = "mean"
    engine: str = "hash"
    order: str = "sorted"
    format: str = "csv"
    sparse: bool = False
    sz: Optional[tuple] = None
    fillval: float = 0.0
    sizes: list = field(default_factory=lambda: [1000])
    keys: list = field(default_factory=lambda: [10])
    reps: int = 5
    seed: int = 0


def _names(s):
    return [p for p in s.split(",") if p] if s else []


def _ints(s):
    try:
        return [int(p) for p in s.split(",") if p]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {s!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="splitapply", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def io_flags(p, default_format):
        p.add_argument("--input", "-i", help="CSV file (default: stdin)")
        p.add_argument("--output", "-o", help="output file (default: stdout)")
        p.add_argument("--format", default=default_format, help="csv or text")

    p = sub.add_parser("summarize", help="aggregate a value column grouped by a key column")
    io_flags(p, "csv")
    p.add_argument("--key", required=True)
    p.add_argument("--value", required=True, help="value column, or several comma-separated")
    p.add_argument("--agg", default="mean")
    p.add_argument("--engine", default="hash")
    p.add_argument("--order", default="sorted")

    p = sub.add_parser("accumarray", help="accumulate values into an array by 1-based subscripts")
    io_flags(p, "text")
    p.add_argument("--key", help="subscript columns, comma-separated (default: all but the value)")
    p.add_argument("--value", help="value column (default: the last column)")
    p.add_argument("--agg", default="sum")
    p.add_argument("--sparse", action="store_true")
    p.add_argument("--sz", type=_ints, help="output extents, e.g. 10,4")
    p.add_argument("--fillval", type=float, default=0.0)

    p = sub.add_parser("bench", help="time every engine on seeded random workloads")
    p.add_argument("--output", "-o")
    p.add_argument("--sizes", type=_ints, default=[1000])
    p.add_argument("--keys", type=_ints, default=[10])
    p.add_argument("--reps", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--agg", default="mean")
    return parser


def config_from_args(ns) -> CliConfig:
    cfg = CliConfig(ns.subcommand)
    for name, value in vars(ns).items():
        if name in ("key", "value"):
            value = _names(value)
        if value is not None and hasattr(cfg, name):
            setattr(cfg, name, value)
    if cfg.sz is not None:
        cfg.sz = tuple(cfg.sz)
    return cfg


@contextmanager
def _open_in(path):
    if path is None:
        yield sys.stdin
    else:
        with open(path, newline="") as f:
            yield f


@contextmanager
def _open_out(path):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", newline="") as f:
            yield f


def _column(header, rows, name):
    if name not in header:
        raise NoSuchColumn(f"no column named {name!r}; have {', '.join(header)}")
    j = header.index(name)
    return [r[j] for _, r in rows]


def _check_format(fmt):
    if fmt not in ("csv", "text"):
        raise LookupError(f"unknown format {fmt!r}; expected csv or text")


def cmd_summarize(cfg: CliConfig) -> int:
    _check_format(cfg.format)
    agg = make_aggregator(cfg.agg)
    engine = EngineKind.parse(cfg.engine)
    order = OrderPolicy.parse(cfg.order)
    with _open_in(cfg.input) as f:
        header, rows = read_rows(f)
    lines = [ln for ln, _ in rows]
    keys = parse_column(_column(header, rows, cfg.key[0]), as_key=True)
    columns = [Column(cfg.key[0], ())]
    summaries = []
    for name in cfg.value:
        values = parse_floats(_column(header, rows, name), lines)
        summaries.append(summarize(keys, values, agg, engine, order))
        columns.append(Column(f"{name}_{agg.name}", summaries[-1].aggregates))
    columns[0] = Column(cfg.key[0], summaries[0].keys)
    out = table_from_columns(columns)
    with _open_out(cfg.output) as f:
        (write_text if cfg.format == "text" else write_table)(out, f)
    return EXIT_OK


def cmd_accumarray(cfg: CliConfig) -> int:
    _check_format(cfg.format)
    agg = make_aggregator(cfg.agg)
    with _open_in(cfg.input) as f:
        header, rows = read_rows(f)
    value_name = cfg.value[0] if cfg.value else header[-1]
    sub_names = cfg.key or [h for h in header if h != value_name]
    lines = [ln for ln, _ in rows]
    vals = parse_floats(_column(header, rows, value_name), lines)
    sub_cols = []
    for name in sub_names:
        col = []
        for s, line in zip(_column(header, rows, name), lines):
            try:
                col.append(int(s))
            except ValueError:
                raise CsvParseError(
                    f"subscript {s!r} in column {name!r} is not an integer", line=line
                ) from None
        sub_cols.append(col)
    subs = list(zip(*sub_cols))
    try:
        result = accumarray(subs, vals, agg, sz=cfg.sz, fillval=cfg.fillval, sparse=cfg.sparse)
    except SubscriptOutOfBounds as exc:
        if exc.row is not None:
            raise CsvParseError(str(exc), line=lines[exc.row]) from None
        raise
    with _open_out(cfg.output) as f:
        if cfg.format == "text":
            for line in display_lines(result):
                f.write(line + "\n")
        else:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(list(sub_names) + [value_name])
            cells = result.entries if result.sparse else result.cells()
            for coords, v in cells:
                writer.writerow(list(coords) + [repr(v)])
    return EXIT_OK


def cmd_bench(cfg: CliConfig, runners=None) -> int:
    make_aggregator(cfg.agg)
    try:
        rows = run_bench(cfg.sizes, cfg.keys, cfg.reps, cfg.seed, cfg.agg, runners=runners)
    except BenchMismatch as exc:
        print(f"splitapply: error: {exc}; no timings reported", file=sys.stderr)
        return EXIT_MISMATCH
    with _open_out(cfg.output) as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(["engine", "n", "k", "median_ns", "verified"])
        for r in rows:
            writer.writerow([r.engine, r.n, r.k, r.median_ns, str(r.verified).lower()])
    return EXIT_OK


COMMANDS = {"summarize": cmd_summarize, "accumarray": cmd_accumarray, "bench": cmd_bench}


def main(argv=None) -> int:
    ns = build_parser().parse_args(argv)
    cfg = config_from_args(ns)
    try:
        return COMMANDS[cfg.subcommand](cfg)
    except LookupError as exc:
        print(f"splitapply: error: {exc.args[0] if exc.args else exc}", file=sys.stderr)
        return EXIT_LOOKUP
    except (ValueError, OSError) as exc:
        print(f"splitapply: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
