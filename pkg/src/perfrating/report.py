"""Report rows and their json / csv / table renderings."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal

from .systems import PerformanceReport

COLUMNS = ("player", "event", "ra", "ra_rounded", "m", "n", "t", "w_star", "s_at_w_star", "tpr", "fpr", "pre")
FORMATS = ("table", "csv", "json")


def round_half_away(x: float, ndigits: int = 0) -> float:
    """Round to `ndigits` decimals, ties away from zero (on the decimal repr)."""
    quantum = Decimal(1).scaleb(-ndigits)
    return float(Decimal(repr(float(x))).quantize(quantum, rounding=ROUND_HALF_UP))


def round_rating(x: float) -> int:
    return int(round_half_away(x))


@dataclass(frozen=True)
class ReportRow:
    player: str
    event: str
    ra_exact: float
    ra_rounded: int
    m: float
    n: int
    t: float
    tpr: int | None
    fpr: int
    pre: int
    w_star: float
    s_at_w_star: float

    @classmethod
    def from_report(cls, report: PerformanceReport, player: str = "", event: str = "") -> ReportRow:
        q = report.query
        return cls(
            player=player,
            event=event,
            ra_exact=q.ra,
            ra_rounded=round_rating(q.ra),
            m=q.score.points,
            n=q.score.games,
            t=q.threshold,
            tpr=None if report.tpr is None else round_rating(report.tpr),
            fpr=round_rating(report.fpr),
            pre=round_rating(report.pre),
            w_star=round_half_away(report.w_star, 4),
            s_at_w_star=round_half_away(report.s_at_w_star, 2),
        )

    def as_dict(self) -> dict[str, object]:
        m = int(self.m) if float(self.m).is_integer() else self.m
        return {
            "player": self.player,
            "event": self.event,
            "ra": self.ra_exact,
            "ra_rounded": self.ra_rounded,
            "m": m,
            "n": self.n,
            "t": self.t,
            "w_star": self.w_star,
            "s_at_w_star": self.s_at_w_star,
            "tpr": self.tpr,
            "fpr": self.fpr,
            "pre": self.pre,
        }


def _cell(value: object, missing: str) -> str:
    if value is None:
        return missing
    if isinstance(value, str):
        return value
    # json.dumps gives the same number text in every format
    return json.dumps(value)


def render(rows: list[ReportRow], fmt: str = "table", *, single: bool = False) -> str:
    """Render rows; with `single`, json emits one object instead of a list."""
    if fmt == "json":
        payload = [r.as_dict() for r in rows]
        return json.dumps(payload[0] if single and payload else payload, indent=2) + "\n"
    if fmt == "csv":
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(COLUMNS)
        for r in rows:
            d = r.as_dict()
            writer.writerow([_cell(d[c], "") for c in COLUMNS])
        return out.getvalue()
    if fmt == "table":
        return format_table([[_cell(r.as_dict()[c], "N/A") for c in COLUMNS] for r in rows], COLUMNS)
    raise ValueError(f"unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")


def format_table(cells: list[list[str]], header: tuple[str, ...] | list[str]) -> str:
    widths = [len(h) for h in header]
    for row in cells:
        widths = [max(w, len(c)) for w, c in zip(widths, row)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    for row in cells:
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
    return "\n".join(lines) + "\n"
