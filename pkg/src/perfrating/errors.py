"""Exception hierarchy.

Every error raised for bad numeric input derives from :class:`DomainError`,
which is itself a :class:`ValueError`, so callers that only care about
"invalid input" can catch either.
"""


class DomainError(ValueError):
    """An input lies outside the domain of the requested operation."""


class UnboundedRatingError(DomainError):
    """A win probability of exactly 0 or 1 has no finite rating."""


class UndefinedTPRError(DomainError):
    """Tournament performance rating is undefined for zero or perfect scores."""


class AmbiguousArgmaxError(DomainError):
    """The threshold binds on both sides of an interior peak."""


class InfeasibleError(DomainError):
    """No win probability satisfies the threshold constraint."""


class NoRootError(DomainError):
    """The bisection target is not bracketed by the search interval."""


class ParseError(DomainError):
    """A game-record file could not be parsed."""

    def __init__(self, message: str, line: int | None = None, source: str | None = None):
        self.line = line
        self.source = source
        where = ""
        if source is not None:
            where += f"{source}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}" if where else message)
