"""
Grand Slam champions, 2023
==========================

A tennis champion wins all seven matches, which is exactly where the TPR
breaks down.  Averaging the opponents' Elo ratings and applying the estimated
rating gives a comparable number for each title run.
"""

from perfrating import build_query, estimated_performance_rating, group_records, parse_games
from perfrating.report import ReportRow, render
from perfrating.tables import DATA_DIR

rows = []
for s in group_records(parse_games(DATA_DIR / "tennis_2023.csv")):
    rows.append(ReportRow.from_report(estimated_performance_rating(build_query(s)), s.player, s.event))
rows.sort(key=lambda r: -r.pre)
print(render(rows, "table"))

###############################################################################
# The at-least objective rates the chance of scoring *at least* the observed
# points.  For a perfect score the two objectives coincide.

s = group_records(parse_games(DATA_DIR / "tennis_2023.csv"))[0]
exact = estimated_performance_rating(build_query(s))
tail = estimated_performance_rating(build_query(s, objective="at-least"))
print(f"{s.player}: exact-score {exact.pre:.1f}, at-least {tail.pre:.1f}")
