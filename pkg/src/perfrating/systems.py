"""Tournament, FIDE and estimated performance ratings.

* :func:`tpr` solves ``m / n = W(TPR, ra)`` in closed form.
* :func:`fpr` adds FIDE's tabulated rating difference to the opponents' mean.
* :func:`estimated_performance_rating` picks the win probability that
  maximises the probability of the achieved score, capped by a threshold
  ``t``, and converts it back to a rating.  On interior scores this equals
  the TPR; unlike the TPR it stays finite for zero and perfect scores.
"""

from __future__ import annotations

import enum
import math
from collections.abc import Callable
from dataclasses import dataclass
from fractions import Fraction

from .elo import rating_for_win_probability
from .errors import AmbiguousArgmaxError, DomainError, InfeasibleError, NoRootError, UndefinedTPRError
from .scores import (
    NormalizedScore,
    ScoreLine,
    at_least_probability,
    normalize_score,
    peak_score_probability,
    score_probability,
)

DEFAULT_THRESHOLD = 0.75

# FIDE rating difference dp indexed by percentage score in hundredths (0.00 .. 1.00).
DP_TABLE: tuple[int, ...] = (
    -800, -677, -589, -538, -501, -470, -444, -422, -401, -383,  # .00-.09
    -366, -351, -336, -322, -309, -296, -284, -273, -262, -251,  # .10-.19
    -240, -230, -220, -211, -202, -193, -184, -175, -166, -158,  # .20-.29
    -149, -141, -133, -125, -117, -110, -102, -95, -87, -80,  # .30-.39
    -72, -65, -57, -50, -43, -36, -29, -21, -14, -7,  # .40-.49
    0, 7, 14, 21, 29, 36, 43, 50, 57, 65,  # .50-.59
    72, 80, 87, 95, 102, 110, 117, 125, 133, 141,  # .60-.69
    149, 158, 166, 175, 184, 193, 202, 211, 220, 230,  # .70-.79
    240, 251, 262, 273, 284, 296, 309, 322, 336, 351,  # .80-.89
    366, 383, 401, 422, 444, 470, 501, 538, 589, 677,  # .90-.99
    800,  # 1.00
)  # fmt: skip


class Objective(str, enum.Enum):
    """Which score probability the optimiser maximises."""

    EXACT = "exact"
    AT_LEAST = "at-least"


class Side(str, enum.Enum):
    """Which root to take when the threshold binds on both sides of the peak."""

    LOWER = "lower"
    UPPER = "upper"


def _as_score(score: ScoreLine | tuple[float, int]) -> ScoreLine:
    if isinstance(score, ScoreLine):
        return score
    points, games = score
    return ScoreLine(points, games)


def tpr(ra: float, score: ScoreLine | tuple[float, int]) -> float:
    """Tournament performance rating.

    Raises:
        UndefinedTPRError: for a zero or perfect score.
    """
    s = _as_score(score)
    if s.half_points == 0 or s.half_points == 2 * s.games:
        raise UndefinedTPRError(f"TPR is undefined for a score of {s}")
    ratio = s.ratio
    return ra - 400.0 * math.log10(float((1 - ratio) / ratio))


def _hundredths(ps: float | Fraction) -> int:
    if isinstance(ps, Fraction):
        exact = ps
    else:
        try:
            exact = Fraction(str(ps))
        except ValueError:
            raise DomainError(f"percentage score must be finite, got {ps!r}") from None
    if not 0 <= exact <= 1:
        raise DomainError(f"percentage score must lie in [0, 1], got {ps!r}")
    # ps >= 0, so rounding half up is rounding half away from zero.
    return math.floor(exact * 100 + Fraction(1, 2))


def dp_lookup(ps: float | Fraction) -> int:
    """FIDE rating difference for a percentage score, rounded to hundredths."""
    return DP_TABLE[_hundredths(ps)]


def fpr(ra: float, score: ScoreLine | tuple[float, int]) -> float:
    """FIDE performance rating ``ra + dp(points / games)``."""
    s = _as_score(score)
    return ra + dp_lookup(s.ratio)


def bisection_root(
    f: Callable[[float], float],
    target: float,
    lo: float = 0.0,
    hi: float = 1.0,
    *,
    ftol: float = 1e-12,
    xtol: float = 1e-14,
    max_iter: int = 200,
) -> float:
    """Solve ``f(w) = target`` for monotone `f` on ``[lo, hi]`` by bisection.

    Works for increasing and decreasing `f`.  Stops when the residual drops
    below `ftol`, the bracket is narrower than `xtol`, or after `max_iter`
    halvings.

    Raises:
        NoRootError: if `target` is not between ``f(lo)`` and ``f(hi)``.
    """
    f_lo, f_hi = f(lo), f(hi)
    if f_lo == target:
        return lo
    if f_hi == target:
        return hi
    if not (min(f_lo, f_hi) <= target <= max(f_lo, f_hi)):
        raise NoRootError(
            f"target {target!r} not bracketed: f({lo!r})={f_lo!r}, f({hi!r})={f_hi!r}"
        )
    increasing = f_hi > f_lo
    mid = 0.5 * (lo + hi)
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        value = f(mid)
        if abs(value - target) < ftol or hi - lo < xtol:
            break
        if (value < target) == increasing:
            lo = mid
        else:
            hi = mid
    return mid


def _check_threshold(t: float) -> None:
    if not (0.0 < t < 1.0):
        raise DomainError(f"threshold must lie in the open interval (0, 1), got {t!r}")


def optimal_win_probability(
    m: int,
    n: int,
    t: float = DEFAULT_THRESHOLD,
    objective: Objective | str = Objective.EXACT,
    side: Side | str | None = None,
) -> tuple[float, bool]:
    """Win probability maximising the score probability subject to it not exceeding `t`.

    `m` and `n` must already be integers (see :func:`normalize_score`).
    Returns ``(w_star, binding)`` where `binding` tells whether the threshold
    constraint is active at the optimum.
    """
    _check_threshold(t)
    objective = Objective(objective)
    score_probability(0.5, m, n)  # validates m and n

    if objective is Objective.AT_LEAST:
        if m == 0:
            raise InfeasibleError(
                "at-least objective is infeasible for m = 0: the probability is 1 for every w"
            )
        w = bisection_root(lambda x: at_least_probability(x, m, n), t)
        return w, True

    if m == n:
        return t ** (1.0 / n), True
    if m == 0:
        return 1.0 - t ** (1.0 / n), True

    peak = peak_score_probability(m, n)
    if peak <= t:
        return m / n, math.isclose(peak, t, rel_tol=0.0, abs_tol=1e-12)
    if side is None:
        raise AmbiguousArgmaxError(
            f"peak probability {peak:.6g} of {m}/{n} exceeds threshold {t}; "
            "the constraint binds on both sides, pass side='lower' or side='upper'"
        )
    mode = m / n
    if Side(side) is Side.LOWER:
        w = bisection_root(lambda x: score_probability(x, m, n), t, 0.0, mode)
    else:
        w = bisection_root(lambda x: score_probability(x, m, n), t, mode, 1.0)
    return w, True


@dataclass(frozen=True)
class PerformanceQuery:
    """Inputs shared by every rating system."""

    ra: float
    score: ScoreLine
    threshold: float = DEFAULT_THRESHOLD
    objective: Objective = Objective.EXACT
    side: Side | None = None

    def __post_init__(self) -> None:
        if not math.isfinite(self.ra):
            raise DomainError(f"ra must be finite, got {self.ra!r}")
        _check_threshold(self.threshold)
        object.__setattr__(self, "score", _as_score(self.score))
        object.__setattr__(self, "objective", Objective(self.objective))
        if self.side is not None:
            object.__setattr__(self, "side", Side(self.side))


@dataclass(frozen=True)
class PerformanceReport:
    query: PerformanceQuery
    normalized: NormalizedScore
    w_star: float
    s_at_w_star: float
    tpr: float | None
    fpr: float
    pre: float
    constraint_binding: bool

    @property
    def tpr_defined(self) -> bool:
        return self.tpr is not None


def estimated_performance_rating(q: PerformanceQuery) -> PerformanceReport:
    """Evaluate all three performance ratings for one query.

    ``s_at_w_star`` holds the value of the optimised objective at the optimum:
    the exact-score probability by default, the at-least probability when
    ``q.objective`` is ``"at-least"``.
    """
    norm = normalize_score(q.score)
    m, n = norm.points, norm.games
    w_star, binding = optimal_win_probability(m, n, q.threshold, q.objective, q.side)
    if q.objective is Objective.AT_LEAST:
        s_star = at_least_probability(w_star, m, n)
    else:
        s_star = score_probability(w_star, m, n)
    try:
        tpr_value: float | None = tpr(q.ra, q.score)
    except UndefinedTPRError:
        tpr_value = None
    return PerformanceReport(
        query=q,
        normalized=norm,
        w_star=w_star,
        s_at_w_star=s_star,
        tpr=tpr_value,
        fpr=fpr(q.ra, q.score),
        pre=rating_for_win_probability(w_star, q.ra),
        constraint_binding=binding,
    )


def performance_rating(
    ra: float,
    points: float,
    games: int,
    t: float = DEFAULT_THRESHOLD,
    objective: Objective | str = Objective.EXACT,
) -> float:
    """Shortcut returning only the estimated performance rating."""
    query = PerformanceQuery(ra, ScoreLine(points, games), t, Objective(objective))
    return estimated_performance_rating(query).pre
