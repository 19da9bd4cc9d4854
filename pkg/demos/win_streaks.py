"""
Ranking historical win streaks
==============================

Game records live in plain CSV, one row per game.  Streaks are maximal runs
of wins in a player's ``sequence`` order and may cross event boundaries, as
Fischer's 1970-71 run does.
"""

from perfrating import build_query, estimated_performance_rating, extract_streaks, parse_games
from perfrating.tables import DATA_DIR

records = sorted(parse_games(DATA_DIR / "chess_streaks.csv"), key=lambda r: (r.player, r.sequence))
streaks = extract_streaks(records, min_length=5)

rated = []
for s in streaks:
    rep = estimated_performance_rating(build_query(s))
    rated.append((rep.pre, s.player, s.event, s.games, rep.query.ra))

for pre, player, event, games, ra in sorted(rated, reverse=True):
    print(f"{player:<9} {games:>2}-win  R_a {ra:7.1f}  PR^e {pre:7.1f}  ({event})")

###############################################################################
# The same file can be grouped by event instead, which gives per-tournament
# results (all perfect here, so every TPR is undefined).

from perfrating import group_records

for s in group_records(records, ("player", "event")):
    rep = estimated_performance_rating(build_query(s))
    print(f"{s.player:<9} {s.event:<18} {s.score!s:>6}  PR^e {rep.pre:7.1f}")
