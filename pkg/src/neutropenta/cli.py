"""Command-line front end.

Subcommands::

    neutropenta convert  [INPUT] --space penta --variant 1 --direction forward
    neutropenta tables   [union|intersection|...|all]
    neutropenta sweep    --step 0.1 --space hexa --variant 2
    neutropenta check    --samples 100000 --seed 42

Data goes to stdout (or ``--output``); per-row errors go to stderr so the
data stream stays clean for piping.  Exit codes: 0 success, 1 row
validation failures, 2 usage error, 3 property-check failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import math
import sys
from typing import Iterable, Iterator, TextIO

from . import __version__
from .bipolar import decompose
from .checks import cube_grid, run_checks
from .core import (
    HEXA_FIELDS,
    PENTA_FIELDS,
    NeutroError,
    NeutroTriple,
    Variant,
    validate_penta,
    validate_triple,
)
from .hexa import to_hexa
from .logic5 import BINARY_OPERATORS, UNARY_OPERATORS, format_table
from .penta import TenTermDecomposition, from_penta, ten_term_decomposition, to_penta

logger = logging.getLogger("neutropenta")

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_USAGE = 2
EXIT_CHECK_FAILED = 3

SPACES = ("bipolar", "penta", "hexa", "ten")
TRIPLE_FIELDS = ("mu", "omega", "nu")
BIPOLAR_FIELDS = ("tau_plus", "tau_minus", "alpha", "pi", "kappa")

OUTPUT_FIELDS = {
    "bipolar": BIPOLAR_FIELDS,
    "penta": PENTA_FIELDS,
    "hexa": HEXA_FIELDS,
    "ten": TenTermDecomposition._fields,
}


class UsageError(Exception):
    pass


class InverseUnsupported(UsageError):
    def __init__(self, space: str):
        super().__init__(f"InverseUnsupported: no inverse transform for space {space!r}")


class RowError(Exception):
    def __init__(self, row_id: str, cause: Exception):
        self.row_id = row_id
        self.cause = cause
        super().__init__(f"{cause} at id={row_id}")


def fmt_number(x: float) -> str:
    # shortest repr that round-trips to the same double
    return repr(float(x) + 0.0)


def forward(space: str, x: NeutroTriple, variant: Variant):
    if space == "penta":
        return to_penta(x, variant)
    if space == "hexa":
        return to_hexa(x, variant)
    if space == "bipolar":
        return decompose(x.mu, x.nu)
    if space == "ten":
        return ten_term_decomposition(x)
    raise UsageError(f"unknown space {space!r}")


def columns_for(space: str, direction: str) -> list[str]:
    if direction == "inverse":
        return ["id", *PENTA_FIELDS, *TRIPLE_FIELDS, "partition_sum"]
    return ["id", *TRIPLE_FIELDS, *OUTPUT_FIELDS[space], "partition_sum"]


def _forward_row(row_id: str, x: NeutroTriple, space: str, variant: Variant) -> dict:
    rep = forward(space, x, variant)
    out = {"id": row_id}
    out.update(zip(TRIPLE_FIELDS, x))
    out.update(zip(OUTPUT_FIELDS[space], rep))
    out["partition_sum"] = math.fsum(rep)
    return out


def convert_row(raw: dict, space: str, variant: Variant, direction: str) -> dict:
    """Convert one input record; raises :class:`RowError` on bad data."""
    row_id = str(raw.get("id", ""))
    try:
        if direction == "inverse":
            p = validate_penta(*(_number(raw, k) for k in PENTA_FIELDS))
            x = from_penta(p, variant)
            out = {"id": row_id}
            out.update(zip(PENTA_FIELDS, p))
            out.update(zip(TRIPLE_FIELDS, x))
            out["partition_sum"] = math.fsum(p)
            return out
        x = validate_triple(*(_number(raw, k) for k in TRIPLE_FIELDS))
        return _forward_row(row_id, x, space, variant)
    except NeutroError as exc:
        raise RowError(row_id, exc) from exc


def _number(raw: dict, key: str) -> float:
    if key not in raw or raw[key] in (None, ""):
        raise NeutroError(f"MissingField({key})")
    try:
        return float(raw[key])
    except (TypeError, ValueError):
        raise NeutroError(f"NotANumber({key}={raw[key]!r})") from None


def read_records(stream: TextIO, fmt: str) -> Iterator[dict]:
    if fmt == "csv":
        yield from csv.DictReader(stream)
    else:
        for lineno, line in enumerate(stream, 1):
            if line.strip():
                try:
                    yield json.loads(line)
                except json.JSONDecodeError as exc:
                    yield {"id": f"line{lineno}", "__error__": str(exc)}


class RecordWriter:
    def __init__(self, stream: TextIO, fmt: str, columns: list[str]):
        self.stream = stream
        self.fmt = fmt
        self.columns = columns
        if fmt == "csv":
            self._csv = csv.writer(stream, lineterminator="\n")
            self._csv.writerow(columns)

    def write(self, row: dict) -> None:
        if self.fmt == "csv":
            self._csv.writerow(
                [row[c] if c == "id" else fmt_number(row[c]) for c in self.columns]
            )
        else:
            obj = {c: row[c] if c == "id" else float(row[c]) + 0.0 for c in self.columns}
            self.stream.write(json.dumps(obj) + "\n")


def run_convert(
    records: Iterable[dict],
    out: RecordWriter,
    err: TextIO,
    space: str,
    variant: Variant,
    direction: str,
    fail_fast: bool = False,
) -> int:
    """Convert a record stream row by row.  Returns the number of failed rows."""
    if direction == "inverse" and space != "penta":
        raise InverseUnsupported(space)
    seen: set[str] = set()
    failures = 0
    for index, raw in enumerate(records, 1):
        raw = dict(raw)
        raw.setdefault("id", str(index))
        row_id = str(raw["id"])
        try:
            if "__error__" in raw:
                raise RowError(row_id, NeutroError(f"BadRecord({raw['__error__']})"))
            if row_id in seen:
                raise RowError(row_id, NeutroError("DuplicateId"))
            seen.add(row_id)
            out.write(convert_row(raw, space, variant, direction))
        except RowError as exc:
            failures += 1
            err.write(f"{exc}\n")
            if fail_fast:
                break
    return failures


def sweep_rows(step: float, space: str, variant: Variant) -> Iterator[dict]:
    """Rows for every lattice point of the cube, mu outermost, nu innermost."""
    if not (0.0 < step <= 1.0):
        raise UsageError(f"StepOutOfRange: step must be in (0, 1], got {step!r}")
    for index, x in enumerate(cube_grid(step)):
        yield _forward_row(str(index), x, space, variant)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="neutropenta",
        description="Penta/hexa-valued representations of neutrosophic triples.",
    )
    parser.add_argument("--verbose", "-v", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_space_opts(p, with_direction=False):
        p.add_argument("--space", choices=SPACES, default="penta")
        p.add_argument("--variant", choices=("1", "2"), default=None,
                       help="required for penta and hexa")
        if with_direction:
            p.add_argument("--direction", choices=("forward", "inverse"), default="forward")
        p.add_argument("--format", choices=("csv", "jsonl"), default="csv")
        p.add_argument("--output", "-o", default="-")

    p = sub.add_parser("convert", help="convert a batch of records")
    p.add_argument("input", nargs="?", default="-", help="input file, '-' for stdin")
    add_space_opts(p, with_direction=True)
    p.add_argument("--fail-fast", action="store_true")

    p = sub.add_parser("tables", help="print the five-valued truth tables")
    p.add_argument("which", nargs="?", default="all",
                   choices=(*BINARY_OPERATORS, *UNARY_OPERATORS, "all"))

    p = sub.add_parser("sweep", help="convert every point of a cube lattice")
    p.add_argument("--step", type=float, default=0.1)
    add_space_opts(p)

    p = sub.add_parser("check", help="run the seeded invariant suite")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--show-version", action="store_true",
                   help="put the package version in the report header")
    return parser


def _open_out(path: str) -> TextIO:
    return sys.stdout if path == "-" else open(path, "w", newline="", encoding="utf-8")


def _open_in(path: str) -> TextIO:
    return sys.stdin if path == "-" else open(path, newline="", encoding="utf-8")


def _variant(args) -> Variant:
    if args.variant is None:
        if args.space in ("penta", "hexa"):
            raise UsageError(f"--variant is required for space {args.space!r}")
        return Variant.I  # unused by bipolar/ten
    return Variant.parse(args.variant)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        if args.command == "tables":
            names = [*BINARY_OPERATORS, *UNARY_OPERATORS] if args.which == "all" else [args.which]
            sys.stdout.write("\n".join(f"# {n}\n{format_table(n)}" for n in names))
            return EXIT_OK

        if args.command == "check":
            if args.samples < 1:
                parser.error("--samples must be >= 1")
            report = run_checks(args.samples, args.seed)
            sys.stdout.write(report.format(__version__ if args.show_version else None))
            return EXIT_OK if report.ok else EXIT_CHECK_FAILED

        variant = _variant(args)
        if args.command == "sweep":
            rows = sweep_rows(args.step, args.space, variant)
            first = next(rows)  # validates step before anything is written
            out_stream = _open_out(args.output)
            try:
                writer = RecordWriter(out_stream, args.format, columns_for(args.space, "forward"))
                writer.write(first)
                for row in rows:
                    writer.write(row)
            finally:
                if out_stream is not sys.stdout:
                    out_stream.close()
            return EXIT_OK

        # convert
        if args.direction == "inverse" and args.space != "penta":
            raise InverseUnsupported(args.space)
        in_stream = _open_in(args.input)
        out_stream = _open_out(args.output)
        try:
            writer = RecordWriter(out_stream, args.format, columns_for(args.space, args.direction))
            failures = run_convert(read_records(in_stream, args.format), writer, sys.stderr,
                                   args.space, variant, args.direction, args.fail_fast)
        finally:
            for s in (in_stream, out_stream):
                if s not in (sys.stdin, sys.stdout):
                    s.close()
        logger.debug("convert finished with %d failed rows", failures)
        return EXIT_VALIDATION if failures else EXIT_OK
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        sys.stderr.write(f"{parser.prog}: error: {exc}\n")
        return EXIT_USAGE
    except OSError as exc:
        sys.stderr.write(f"{parser.prog}: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
