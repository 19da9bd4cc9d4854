"""Plot data: TPR against PR^e over the interior score grid, and the peak
exact-score probability over every score line."""

from __future__ import annotations

import csv
from pathlib import Path

from .scores import ScoreLine, peak_score_probability
from .systems import PerformanceQuery, estimated_performance_rating, tpr


def figure1_rows(ra: float = 2700.0, nmax: int = 30) -> list[tuple[int, int, float, float]]:
    """``(m, n, tpr, pre)`` for every integer score ``0 < m < n <= nmax``."""
    rows = []
    for n in range(2, nmax + 1):
        for m in range(1, n):
            score = ScoreLine(m, n)
            pre = estimated_performance_rating(PerformanceQuery(ra, score)).pre
            rows.append((m, n, tpr(ra, score), pre))
    return rows


def figure2_rows(nmax: int = 30) -> list[tuple[int, int, float, float]]:
    """``(m, n, m / n, f)`` for every ``0 <= m <= n <= nmax`` with ``n >= 1``."""
    return [(m, n, m / n, peak_score_probability(m, n)) for n in range(1, nmax + 1) for m in range(n + 1)]


def write_figures(out_dir: Path | str, ra: float = 2700.0, nmax: int = 30) -> tuple[Path, Path]:
    """Write ``fig1.csv`` and ``fig2.csv`` into `out_dir` (created if needed)."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    fig1, fig2 = out / "fig1.csv", out / "fig2.csv"
    with fig1.open("w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(("m", "n", "tpr", "pre"))
        w.writerows((m, n, repr(t), repr(p)) for m, n, t, p in figure1_rows(ra, nmax))
    with fig2.open("w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(("m", "n", "ratio", "f"))
        w.writerows((m, n, repr(r), repr(f)) for m, n, r, f in figure2_rows(nmax))
    return fig1, fig2
