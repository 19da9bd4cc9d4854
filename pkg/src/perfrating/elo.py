"""Elo win probabilities and their inverse."""

import math
from collections.abc import Iterable

from .errors import DomainError, UnboundedRatingError

SCALE = 400.0


def _check_finite(**values: float) -> None:
    for name, value in values.items():
        if not math.isfinite(value):
            raise DomainError(f"{name} must be finite, got {value!r}")


def win_probability(a: float, b: float) -> float:
    """Probability that a player rated `a` scores against one rated `b`."""
    _check_finite(a=a, b=b)
    return 1.0 / (1.0 + 10.0 ** ((b - a) / SCALE))


def rating_for_win_probability(w: float, ra: float) -> float:
    """Rating whose win probability against `ra` is `w`.

    This is the inverse of :func:`win_probability` in its first argument.

    Raises:
        UnboundedRatingError: if `w` is 0 or 1 (the rating would be infinite).
        DomainError: if `w` is outside [0, 1] or `ra` is not finite.
    """
    _check_finite(w=w, ra=ra)
    if w < 0.0 or w > 1.0:
        raise DomainError(f"win probability must lie in [0, 1], got {w!r}")
    if w == 0.0 or w == 1.0:
        raise UnboundedRatingError(
            f"win probability {w!r} maps to an unbounded rating; "
            "use a constrained optimum instead of a raw zero or perfect score"
        )
    return ra - SCALE * math.log10((1.0 - w) / w)


def average_rating(opponents: Iterable[float]) -> float:
    """Unrounded arithmetic mean of opponent ratings."""
    ratings = [float(r) for r in opponents]
    if not ratings:
        raise DomainError("cannot average an empty list of opponent ratings")
    _check_finite(**{f"opponents[{i}]": r for i, r in enumerate(ratings)})
    return math.fsum(ratings) / len(ratings)
