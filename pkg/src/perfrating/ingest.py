"""Game-record CSV parsing, per-slice aggregation and win-streak extraction.

The on-disk format is UTF-8 CSV with the header::

    player,event,sequence,opponent,opponent_rating,result

One row per game.  ``result`` is ``1``, ``0.5`` or ``0`` (or ``W``/``D``/``L``)
from the player's point of view; ``sequence`` orders a player's games and may
run across events, which is what lets a win streak span several tournaments.
"""

from __future__ import annotations

import csv
import io
import math
import os
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from typing import BinaryIO, TextIO

from .elo import average_rating
from .errors import DomainError, ParseError
from .scores import ScoreLine
from .systems import DEFAULT_THRESHOLD, Objective, PerformanceQuery

FIELDS = ("player", "event", "sequence", "opponent", "opponent_rating", "result")

_RESULTS = {"1": 1.0, "0.5": 0.5, "0": 0.0, "w": 1.0, "d": 0.5, "l": 0.0}


@dataclass(frozen=True)
class GameRecord:
    player: str
    event: str
    sequence: int
    opponent: str
    opponent_rating: float
    result: float

    def __post_init__(self) -> None:
        if self.result not in (0.0, 0.5, 1.0):
            raise DomainError(f"result must be 0, 0.5 or 1, got {self.result!r}")
        if not math.isfinite(self.opponent_rating):
            raise DomainError(f"opponent rating must be finite, got {self.opponent_rating!r}")
        if self.sequence < 1:
            raise DomainError(f"sequence must be a positive integer, got {self.sequence!r}")


@dataclass(frozen=True)
class QuerySlice:
    """A non-empty run of one player's games, optionally tied to an event."""

    player: str
    event: str | None
    records: tuple[GameRecord, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "records", tuple(self.records))
        if not self.records:
            raise DomainError("a query slice needs at least one game record")
        others = {r.player for r in self.records} - {self.player}
        if others:
            raise DomainError(f"slice for {self.player!r} contains games of {sorted(others)}")

    @property
    def half_points(self) -> int:
        return sum(int(2 * r.result) for r in self.records)

    @property
    def games(self) -> int:
        return len(self.records)

    @property
    def score(self) -> ScoreLine:
        return ScoreLine(self.half_points / 2, self.games)


def _parse_int(text: str, line: int, source: str | None) -> int:
    try:
        value = int(text)
    except ValueError:
        raise ParseError(f"sequence {text!r} is not an integer", line, source) from None
    if value < 1:
        raise ParseError(f"sequence must be positive, got {value}", line, source)
    return value


def _parse_rating(text: str, line: int, source: str | None) -> float:
    try:
        value = float(text)
    except ValueError:
        raise ParseError(f"opponent_rating {text!r} is not a number", line, source) from None
    if not math.isfinite(value):
        raise ParseError(f"opponent_rating {text!r} is not finite", line, source)
    return value


def _parse_result(text: str, line: int, source: str | None) -> float:
    key = text.strip().lower()
    if key in ("1.0", "0.0", "1/2", ".5"):
        key = {"1.0": "1", "0.0": "0", "1/2": "0.5", ".5": "0.5"}[key]
    try:
        return _RESULTS[key]
    except KeyError:
        raise ParseError(
            f"result {text!r} is not one of 1, 0.5, 0, W, D, L", line, source
        ) from None


def _read_text(source: str | bytes | os.PathLike | BinaryIO | TextIO) -> tuple[str, str | None]:
    if isinstance(source, bytes):
        return source.decode("utf-8"), None
    if isinstance(source, (str, os.PathLike)):
        with open(source, encoding="utf-8", newline="") as fh:
            return fh.read(), os.fspath(source)
    data = source.read()
    name = getattr(source, "name", None)
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    return data, name if isinstance(name, str) else None


def parse_games(source: str | bytes | os.PathLike | BinaryIO | TextIO) -> list[GameRecord]:
    """Parse a game-record CSV into records, in file order.

    `source` may be a path, raw bytes, or an open binary or text stream.  A
    completely empty file yields no records.

    Raises:
        ParseError: naming the offending line for a bad header or row.
    """
    text, name = _read_text(source)
    if text.startswith("\ufeff"):
        text = text[1:]
    if not text.strip():
        return []
    reader = csv.reader(io.StringIO(text, newline=""))
    header = [h.strip() for h in next(reader)]
    missing = [f for f in FIELDS if f not in header]
    if missing:
        raise ParseError(f"missing column(s): {', '.join(missing)}", 1, name)
    index = {f: header.index(f) for f in FIELDS}

    records = []
    for row in reader:
        line = reader.line_num
        if not any(cell.strip() for cell in row):
            continue
        if len(row) != len(header):
            raise ParseError(f"expected {len(header)} fields, got {len(row)}", line, name)
        cell = {f: row[i].strip() for f, i in index.items()}
        records.append(
            GameRecord(
                player=cell["player"],
                event=cell["event"],
                sequence=_parse_int(cell["sequence"], line, name),
                opponent=cell["opponent"],
                opponent_rating=_parse_rating(cell["opponent_rating"], line, name),
                result=_parse_result(cell["result"], line, name),
            )
        )
    return records


def _number(value: float) -> str:
    return str(int(value)) if float(value).is_integer() else repr(float(value))


def serialize_games(records: Iterable[GameRecord]) -> str:
    """Write records back to the canonical CSV form read by :func:`parse_games`."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(FIELDS)
    for r in records:
        writer.writerow(
            [r.player, r.event, r.sequence, r.opponent, _number(r.opponent_rating), _number(r.result)]
        )
    return out.getvalue()


def group_records(records: Iterable[GameRecord], by: Sequence[str] = ("player", "event")) -> list[QuerySlice]:
    """Split records into slices keyed by player, or by player and event.

    Slices come out in order of first appearance; records inside a slice keep
    their input order.
    """
    by = tuple(by)
    if by not in (("player",), ("player", "event")):
        raise DomainError(f"can only group by 'player' or 'player,event', got {','.join(by)!r}")
    groups: dict[tuple[str, str | None], list[GameRecord]] = {}
    for r in records:
        key = (r.player, r.event if "event" in by else None)
        groups.setdefault(key, []).append(r)
    return [QuerySlice(player, event, tuple(rs)) for (player, event), rs in groups.items()]


def build_query(
    slice_: QuerySlice,
    t: float = DEFAULT_THRESHOLD,
    objective: Objective | str = Objective.EXACT,
) -> PerformanceQuery:
    """Aggregate a slice into the opponents' mean rating and the score line."""
    if not slice_.records:
        raise DomainError("cannot build a query from an empty slice")
    ra = average_rating(r.opponent_rating for r in slice_.records)
    return PerformanceQuery(ra, slice_.score, t, Objective(objective))


def _join_events(records: Sequence[GameRecord]) -> str:
    events: list[str] = []
    for r in records:
        if r.event not in events:
            events.append(r.event)
    return "+".join(events)


def extract_streaks(records: Sequence[GameRecord], min_length: int = 1) -> list[QuerySlice]:
    """Maximal runs of consecutive wins per player, at least `min_length` long.

    `records` must be sorted by ``(player, sequence)`` with no repeated
    sequence number for a player.  Runs may cross event boundaries; the slice
    event is the ``+``-joined list of events the run touches.
    """
    if isinstance(min_length, bool) or int(min_length) != min_length or min_length < 1:
        raise DomainError(f"min_length must be a positive integer, got {min_length!r}")
    for prev, cur in zip(records, records[1:]):
        if (cur.player, cur.sequence) <= (prev.player, prev.sequence):
            raise DomainError(
                "records must be sorted by (player, sequence) without duplicates; "
                f"{cur.player!r}#{cur.sequence} follows {prev.player!r}#{prev.sequence}"
            )

    streaks: list[QuerySlice] = []
    run: list[GameRecord] = []

    def close() -> None:
        if len(run) >= min_length:
            streaks.append(QuerySlice(run[0].player, _join_events(run), tuple(run)))
        run.clear()

    for r in records:
        if run and r.player != run[0].player:
            close()
        if r.result == 1.0:
            run.append(r)
        else:
            close()
    close()
    return streaks
