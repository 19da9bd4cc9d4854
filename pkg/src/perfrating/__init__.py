"""Performance ratings from game results and opponent Elo ratings.

Three systems are provided: the tournament performance rating (TPR), FIDE's
table-based performance rating (FPR) and the estimated performance rating
(PR^e), which stays finite for zero and perfect scores.

>>> from perfrating import performance_rating
>>> round(performance_rating(2700, 3, 3))
3099
"""

from .elo import average_rating, rating_for_win_probability, win_probability
from .errors import (
    AmbiguousArgmaxError,
    DomainError,
    InfeasibleError,
    NoRootError,
    ParseError,
    UnboundedRatingError,
    UndefinedTPRError,
)
from .ingest import (
    GameRecord,
    QuerySlice,
    build_query,
    extract_streaks,
    group_records,
    parse_games,
    serialize_games,
)
from .report import ReportRow, render, round_half_away
from .scores import (
    NormalizedScore,
    ScoreLine,
    at_least_probability,
    normalize_score,
    peak_score_probability,
    score_probability,
)
from .systems import (
    DEFAULT_THRESHOLD,
    DP_TABLE,
    Objective,
    PerformanceQuery,
    PerformanceReport,
    Side,
    bisection_root,
    dp_lookup,
    estimated_performance_rating,
    fpr,
    optimal_win_probability,
    performance_rating,
    tpr,
)

__version__ = "0.1.0"
