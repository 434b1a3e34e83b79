"""``lingloop`` command line.

Exit codes: 0 success, 1 I/O failure, 2 validation failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from lingloop.corpus import DEFAULT_ROUNDS, initial_distribution, iterate_distribution, read_wordlist
from lingloop.dynamics import Classification, Cycle, classify, trajectory
from lingloop.errors import DomainError, ValidationError
from lingloop.letters import LetterCountPolicy
from lingloop.numerals import (
    NumeralTable, bundled_dir, bundled_languages, load_bundled, load_table, read_table,
)
from lingloop.svg import stacked_bars

EXIT_OK, EXIT_IO, EXIT_INVALID = 0, 1, 2

GROUP_ORDER = {"Positive": 0, "BiPositive": 1, "TriPositive": 2, "MultiPositive": 3, "Negative": 4}


@dataclass(frozen=True)
class ReportRow:
    language: str
    label: str
    constants: tuple[int, ...]
    cycles: tuple[str, ...]
    basin_sizes: tuple[tuple[str, int], ...]

    @classmethod
    def from_classification(cls, c: Classification) -> "ReportRow":
        return cls(
            language=c.language,
            label=str(c.label),
            constants=c.fixed_points,
            cycles=tuple(str(x) for x in c.cycles),
            basin_sizes=tuple((str(a), n) for a, n in c.basin_sizes.items()),
        )

    def as_json(self) -> dict:
        return {
            "language": self.language,
            "label": self.label,
            "constants": list(self.constants),
            "cycles": list(self.cycles),
            "basin_sizes": {a: n for a, n in self.basin_sizes},
        }

    def as_csv(self) -> list[str]:
        return [
            self.language,
            self.label,
            " ".join(map(str, self.constants)),
            " ".join(self.cycles),
            " ".join(f"{a}={n}" for a, n in self.basin_sizes),
        ]


CSV_HEADER = ["language", "label", "constants", "cycles", "basin_sizes"]


class Colors:
    def __init__(self, stream):
        self.on = stream.isatty() and "NO_COLOR" not in os.environ

    def paint(self, text: str, positive: bool) -> str:
        if not self.on:
            return text
        return f"\x1b[1;{32 if positive else 31}m{text}\x1b[0m"


def _policy(args) -> LetterCountPolicy:
    return LetterCountPolicy(count_hyphens=args.count_hyphens, count_spaces=args.count_spaces)


def _table(args) -> NumeralTable:
    """``--table`` is a file path, or the tag of a bundled table."""
    path = Path(args.table)
    policy = _policy(args)
    if not path.exists() and args.table in bundled_languages():
        table = load_bundled(args.table, policy)
        return table if not args.language else NumeralTable(args.language, table.entries, table.nmax)
    return read_table(path, policy, args.language)


def _csv_text(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _json_text(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, indent=2) + "\n"


def _cycle_text(c: Cycle) -> str:
    s = c.states
    return f"{s[0]}↔{s[1]}" if len(s) == 2 else "→".join(map(str, s + s[:1]))


def _label_line(row: ReportRow) -> str:
    if row.label == "Negative":
        return "Negative; cycles: " + " ".join(row.cycles)
    return row.label


def render_classification(c: Classification, fmt: str, colors: Colors | None = None) -> str:
    row = ReportRow.from_classification(c)
    if fmt == "json":
        return _json_text({**row.as_json(), "nmax": c.nmax})
    if fmt == "csv":
        return _csv_text([CSV_HEADER, row.as_csv()])
    label = _label_line(row)
    if colors:
        label = colors.paint(label, c.label.positive)
    lines = [
        f"{c.language}: {label}",
        f"nmax: {c.nmax}",
        "fixed points: " + (", ".join(map(str, c.fixed_points)) or "none"),
        "cycles: " + (", ".join(_cycle_text(x) for x in c.cycles) or "none"),
        "basins: " + ", ".join(f"{a}={n}" for a, n in row.basin_sizes),
    ]
    return "\n".join(lines) + "\n"


def cmd_classify(args) -> int:
    table = _table(args)
    c = classify(table, _policy(args))
    sys.stdout.write(render_classification(c, args.format, Colors(sys.stdout)))
    return EXIT_OK


def render_trajectory(table: NumeralTable, start: int, policy: LetterCountPolicy, fmt: str = "text") -> str:
    t = trajectory(start, table, policy)
    if fmt == "json":
        return _json_text({
            "language": table.language,
            "start": t.start,
            "states": list(t.states),
            "spellings": [table[s] for s in t.states[:-1]],
            "tail_index": t.tail_index,
            "attractor": str(t.attractor),
        })
    parts = [str(t.start)] + [f"{table[s]}({nxt})" for s, nxt in zip(t.states, t.states[1:])]
    if isinstance(t.attractor, Cycle):
        end = f"[cycle {_cycle_text(t.attractor)}]"
    else:
        end = f"[fixed point {t.attractor.k}]"
    tail = t.tail
    mark = "tail: " + (" → ".join(map(str, tail)) if tail else "none") + f"; enters at step {t.tail_index}"
    return " → ".join(parts) + f" {end}\n{mark}\n"


def cmd_trajectory(args) -> int:
    table = _table(args)
    sys.stdout.write(render_trajectory(table, args.start, _policy(args), args.format))
    return EXIT_OK


ITERATE_HEADER = ["iteration", "length", "count", "proportion", "converged_at"]


def render_iteration_csv(report) -> str:
    conv = "" if report.converged_at is None else str(report.converged_at)
    rows = [ITERATE_HEADER]
    for d in report.series:
        for length, count in d.counts.items():
            rows.append([d.iteration, length, count, f"{count / d.total:.12f}", conv])
    return _csv_text(rows)


def cmd_iterate(args) -> int:
    policy = _policy(args)
    table = _table(args)
    words = read_wordlist(args.words, policy, dedup=args.dedup)
    longest, n = max(words, key=lambda w: w[1])
    if n > table.nmax:
        raise DomainError(
            f"word {longest!r} has {n} letters, more than nmax={table.nmax} of table {table.language!r}"
        )
    report = iterate_distribution(initial_distribution(words), table, policy, args.rounds)
    text = render_iteration_csv(report)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    if args.svg:
        title = f"{table.language}: word-length proportions per routine"
        Path(args.svg).write_text(stacked_bars(report.series, title), encoding="utf-8")
    if args.out:
        conv = "never" if report.converged_at is None else str(report.converged_at)
        print(f"{table.language}: {len(words)} words, {args.rounds} routines, converged at: {conv}")
    return EXIT_OK


def group_key(row: ReportRow):
    kind = row.label.split("(")[0]
    if kind == "Positive":
        return (0, row.constants[0]), row.label
    return (GROUP_ORDER[kind], 0), kind


def render_report(rows: list[ReportRow], fmt: str) -> str:
    rows = sorted(rows, key=lambda r: r.language)
    groups: dict = {}
    for r in rows:
        order, name = group_key(r)
        groups.setdefault((order, name), []).append(r)
    ordered = sorted(groups.items())
    if fmt == "json":
        return _json_text({
            "groups": [{"label": name, "count": len(rs), "languages": [r.language for r in rs]}
                       for (_, name), rs in ordered],
            "rows": [r.as_json() for r in rows],
        })
    if fmt == "csv":
        return _csv_text([CSV_HEADER] + [r.as_csv() for r in rows])
    lines = []
    for (_, name), rs in ordered:
        lines.append(f"{name}\tcount={len(rs)}")
        for r in rs:
            detail = f"constants={' '.join(map(str, r.constants)) or '-'}"
            if r.cycles:
                detail += f" cycles={' '.join(r.cycles)}"
            lines.append(f"  {r.language}\t{r.label}\t{detail}")
    return "\n".join(lines) + "\n"


def cmd_report(args) -> int:
    policy = _policy(args)
    directory = Path(args.tables_dir) if args.tables_dir else None
    if directory is None:
        paths = [(lang, bundled_dir() / f"{lang}.tsv") for lang in bundled_languages()]
    else:
        if not directory.is_dir():
            print(f"lingloop: {directory}: not a directory", file=sys.stderr)
            return EXIT_IO
        paths = [(p.stem, p) for p in sorted(directory.glob("*.tsv"))]
    if not paths:
        print(f"lingloop: no tables found in {directory}", file=sys.stderr)
        return EXIT_INVALID
    rows, status = [], EXIT_OK
    for lang, path in paths:
        try:
            table = load_table(path.read_bytes(), policy, lang)
            rows.append(ReportRow.from_classification(classify(table, policy)))
        except ValidationError as exc:
            print(f"lingloop: {path.name}: {exc}", file=sys.stderr)
            status = EXIT_INVALID
        except OSError as exc:
            print(f"lingloop: {path.name}: {exc}", file=sys.stderr)
            status = max(status, EXIT_IO)
    if rows:
        sys.stdout.write(render_report(rows, args.format))
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lingloop", description="Letter-count loops over numeral spellings.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--count-hyphens", action="store_true", help="count hyphens as letters")
    common.add_argument("--count-spaces", action="store_true", help="count whitespace as letters")
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "csv", "json"), default="text")
    table_opts = argparse.ArgumentParser(add_help=False)
    table_opts.add_argument("--table", required=True, help="numeral table file, or a bundled tag (en, de, ...)")
    table_opts.add_argument("--language", help="language tag (default: filename stem)")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common, fmt, table_opts], help="classify one table")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("trajectory", parents=[common, table_opts], help="print the orbit of one number")
    p.add_argument("start", type=int)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_trajectory)

    p = sub.add_parser("iterate", parents=[common, table_opts], help="iterate a wordlist's length distribution")
    p.add_argument("--words", required=True)
    p.add_argument("--rounds", type=int, default=DEFAULT_ROUNDS)
    p.add_argument("--out", help="CSV output path (default stdout)")
    p.add_argument("--svg", help="also write a stacked-bar SVG here")
    p.add_argument("--dedup", action="store_true", help="drop repeated words")
    p.set_defaults(func=cmd_iterate)

    p = sub.add_parser("report", parents=[common, fmt], help="classify every table in a directory")
    p.add_argument("tables_dir", nargs="?", help="directory of *.tsv tables (default: bundled set)")
    p.set_defaults(func=cmd_report)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"lingloop: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"lingloop: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
