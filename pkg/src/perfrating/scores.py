"""Score lines and binomial scoring probabilities.

A score line is ``points`` out of ``games`` with half-point granularity.  The
binomial model needs integer counts, so fractional scores are doubled once
before any probability is evaluated.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError

# Above this many games the binomial coefficient is evaluated via lgamma.
LOG_DOMAIN_MIN_GAMES = 51


@dataclass(frozen=True)
class ScoreLine:
    """``points`` scored in ``games`` games (wins 1, draws 0.5, losses 0)."""

    points: float
    games: int

    def __post_init__(self) -> None:
        if isinstance(self.games, bool) or int(self.games) != self.games or self.games < 1:
            raise DomainError(f"games must be a positive integer, got {self.games!r}")
        object.__setattr__(self, "games", int(self.games))
        try:
            doubled = 2 * Fraction(str(self.points))
        except ValueError:
            raise DomainError(f"points must be a finite number, got {self.points!r}") from None
        if doubled.denominator != 1:
            raise DomainError(f"points must be a multiple of 0.5, got {self.points!r}")
        if not 0 <= doubled <= 2 * self.games:
            raise DomainError(f"points must lie in [0, {self.games}], got {self.points!r}")
        object.__setattr__(self, "points", float(doubled) / 2)

    @property
    def half_points(self) -> int:
        """Twice the score, as an exact integer."""
        return int(round(2 * self.points))

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.half_points, 2 * self.games)

    def __str__(self) -> str:
        pts = int(self.points) if self.points.is_integer() else self.points
        return f"{pts}/{self.games}"


@dataclass(frozen=True)
class NormalizedScore:
    """Integer (points, games) pair with the same ratio as its score line."""

    points: int
    games: int


def normalize_score(s: ScoreLine) -> NormalizedScore:
    """Make the score integral, doubling both counts only for half-point scores.

    >>> normalize_score(ScoreLine(1.5, 2))
    NormalizedScore(points=3, games=4)
    >>> normalize_score(ScoreLine(1, 1))
    NormalizedScore(points=1, games=1)
    """
    if s.half_points % 2 == 0:
        return NormalizedScore(s.half_points // 2, s.games)
    return NormalizedScore(s.half_points, 2 * s.games)


def _check_counts(w: float, m: int, n: int) -> None:
    for name, v in (("m", m), ("n", n)):
        if isinstance(v, bool) or int(v) != v:
            raise DomainError(f"{name} must be an integer, got {v!r}")
    if n < 1:
        raise DomainError(f"n must be at least 1, got {n!r}")
    if m < 0 or m > n:
        raise DomainError(f"m must lie in [0, n={n}], got {m!r}")
    if not (0.0 <= w <= 1.0):
        raise DomainError(f"win probability must lie in [0, 1], got {w!r}")


def _log_comb(n: int, k: int) -> float:
    return math.lgamma(n + 1) - math.lgamma(k + 1) - math.lgamma(n - k + 1)


def _pmf(w: float, m: int, n: int) -> float:
    # 0**0 == 1 covers the boundary conventions S(0, 0, n) = S(1, n, n) = 1.
    if n < LOG_DOMAIN_MIN_GAMES:
        return math.comb(n, m) * w**m * (1.0 - w) ** (n - m)
    if w == 0.0:
        return 1.0 if m == 0 else 0.0
    if w == 1.0:
        return 1.0 if m == n else 0.0
    return math.exp(_log_comb(n, m) + m * math.log(w) + (n - m) * math.log1p(-w))


def score_probability(w: float, m: int, n: int) -> float:
    """Probability of scoring exactly `m` points in `n` games at win probability `w`."""
    _check_counts(w, m, n)
    return _pmf(w, int(m), int(n))


def at_least_probability(w: float, m: int, n: int) -> float:
    """Probability of scoring `m` or more points in `n` games."""
    _check_counts(w, m, n)
    m, n = int(m), int(n)
    if m == 0:
        return 1.0
    return min(1.0, math.fsum(_pmf(w, k, n) for k in range(m, n + 1)))


def peak_score_probability(m: int, n: int) -> float:
    """Exact-score probability at its unconstrained maximiser ``w = m / n``."""
    _check_counts(0.0, m, n)
    return _pmf(m / n, int(m), int(n))
