import pytest

from perfrating import PerformanceQuery, ReportRow, ScoreLine, estimated_performance_rating, render, round_half_away
from perfrating.figures import figure1_rows, figure2_rows


@pytest.mark.parametrize("x, nd, expected", [
    (2.5, 0, 3), (-2.5, 0, -3), (3071.45, 0, 3071), (0.125, 2, 0.13), (0.8660254, 4, 0.866), (1926.57, 0, 1927),
])
def test_round_half_away(x, nd, expected):
    assert round_half_away(x, nd) == expected


def test_row_from_report():
    rep = estimated_performance_rating(PerformanceQuery(2700, ScoreLine(0.5, 2)))
    row = ReportRow.from_report(rep, "P", "E")
    assert (row.ra_rounded, row.m, row.n, row.tpr, row.fpr, row.pre) == (2700, 0.5, 2, 2509, 2507, 2509)
    assert (row.w_star, row.s_at_w_star) == (0.25, 0.42)


def test_unknown_format():
    with pytest.raises(ValueError):
        render([], "xml")


def test_figure1_theorem_holds_on_every_row():
    rows = figure1_rows(2700, 30)
    assert len(rows) == 435
    assert max(abs(t - p) for _, _, t, p in rows) < 1e-6


def test_figure2_peak():
    rows = figure2_rows(30)
    interior = [(f, m, n) for m, n, _, f in rows if 0 < m < n]
    assert max(interior) == (0.5, 1, 2)
    assert (2, 2, 1.0, 1.0) in rows
