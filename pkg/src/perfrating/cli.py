"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 domain error, 3 table check mismatch.
"""

from __future__ import annotations

import argparse
import sys
from collections.abc import Sequence
from pathlib import Path

from .errors import DomainError
from .figures import write_figures
from .ingest import build_query, extract_streaks, group_records, parse_games
from .report import FORMATS, ReportRow, render
from .scores import ScoreLine
from .systems import DEFAULT_THRESHOLD, Objective, PerformanceQuery, estimated_performance_rating
from .tables import NEEDS_DATA, TABLES, MissingFixtureError, build_table, summary

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_MISMATCH = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit with status 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _threshold(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not 0.0 < value < 1.0:
        raise argparse.ArgumentTypeError(f"threshold must lie in (0, 1), got {text}")
    return value


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {value}")
    return value


def _common(p: argparse.ArgumentParser, output: bool = True) -> None:
    p.add_argument("--threshold", type=_threshold, default=DEFAULT_THRESHOLD,
                   help="probability cap t in (0, 1) (default 0.75)")
    p.add_argument("--objective", choices=[o.value for o in Objective], default=Objective.EXACT.value)
    p.add_argument("--format", choices=FORMATS, default="table")
    if output:
        p.add_argument("--output", type=Path, help="write here instead of standard output")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="perfrating", description="Tournament, FIDE and estimated performance ratings.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    rate = sub.add_parser("rate", help="rate a single score line")
    rate.add_argument("--ra", type=float, required=True, help="average opponent rating")
    rate.add_argument("--score", type=float, required=True, help="points scored (multiple of 0.5)")
    rate.add_argument("--games", type=int, required=True, help="games played")
    rate.add_argument("--side", choices=["lower", "upper"],
                      help="root to take when the threshold binds on both sides of an interior peak")
    _common(rate, output=False)

    batch = sub.add_parser("batch", help="rate every group of a game-record CSV")
    batch.add_argument("--input", type=Path, required=True)
    batch.add_argument("--group-by", choices=["player,event", "player"], default="player,event")
    _common(batch)

    streaks = sub.add_parser("streaks", help="rate every win streak in a game-record CSV")
    streaks.add_argument("--input", type=Path, required=True)
    streaks.add_argument("--min-len", type=_positive_int, required=True)
    _common(streaks)

    figures = sub.add_parser("figures", help="write plot data fig1.csv and fig2.csv")
    figures.add_argument("--out", type=Path, required=True)
    figures.add_argument("--ra", type=float, default=2700.0)
    figures.add_argument("--nmax", type=_positive_int, default=30)

    tables = sub.add_parser("tables", help="rebuild the published tables")
    tables.add_argument("--which", choices=[*map(str, TABLES), "all"], required=True)
    tables.add_argument("--data", type=Path, help="fixture directory (needed for tables 2, 3 and 6)")
    tables.add_argument("--check", action="store_true", help="compare against the published values")
    tables.add_argument("--format", choices=FORMATS, default="table")
    return parser


def _emit(text: str, output: Path | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        output.write_text(text, encoding="utf-8")


def _rate_slices(slices, args) -> list[ReportRow]:
    rows = []
    for sl in slices:
        rep = estimated_performance_rating(build_query(sl, args.threshold, args.objective))
        rows.append(ReportRow.from_report(rep, sl.player, sl.event or ""))
    # stable: ties keep input order
    return sorted(rows, key=lambda r: -r.pre)


def cmd_rate(args) -> int:
    query = PerformanceQuery(args.ra, ScoreLine(args.score, args.games), args.threshold, args.objective, args.side)
    row = ReportRow.from_report(estimated_performance_rating(query))
    _emit(render([row], args.format, single=True), None)
    return EXIT_OK


def cmd_batch(args) -> int:
    records = parse_games(args.input)
    slices = group_records(records, tuple(args.group_by.split(",")))
    _emit(render(_rate_slices(slices, args), args.format), args.output)
    return EXIT_OK


def cmd_streaks(args) -> int:
    records = sorted(parse_games(args.input), key=lambda r: (r.player, r.sequence))
    slices = extract_streaks(records, args.min_len)
    _emit(render(_rate_slices(slices, args), args.format), args.output)
    return EXIT_OK


def cmd_figures(args) -> int:
    fig1, fig2 = write_figures(args.out, args.ra, args.nmax)
    sys.stdout.write(f"wrote {fig1}\nwrote {fig2}\n")
    return EXIT_OK


def cmd_tables(args) -> int:
    numbers = sorted(TABLES) if args.which == "all" else [int(args.which)]
    if args.data is None and NEEDS_DATA.intersection(numbers):
        raise UsageError(f"--data is required for table(s) {sorted(NEEDS_DATA.intersection(numbers))}")
    if args.data is not None and not args.data.is_dir():
        raise UsageError(f"--data {args.data} is not a directory")
    try:
        results = [build_table(n, args.data) for n in numbers]
    except MissingFixtureError as exc:
        raise UsageError(str(exc)) from None
    sys.stdout.write("\n".join(r.render(args.format, args.check) for r in results))
    if args.check:
        sys.stdout.write("\n" + summary(results))
        if not all(r.ok for r in results):
            return EXIT_MISMATCH
    return EXIT_OK


COMMANDS = {
    "rate": cmd_rate,
    "batch": cmd_batch,
    "streaks": cmd_streaks,
    "figures": cmd_figures,
    "tables": cmd_tables,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"perfrating: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"perfrating: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"perfrating: I/O error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
