"""
Rating a perfect score
======================

A player who wins every game has no tournament performance rating: the
equation ``m / n = W(TPR, R_a)`` has no finite solution when ``m = n``.  FIDE
papers over this with a flat +800.  The estimated performance rating instead
caps the probability of the observed score at ``t`` and reports the rating
that reaches that cap, so longer streaks earn higher ratings.
"""

from perfrating import PerformanceQuery, ScoreLine, estimated_performance_rating

# Perfect scores of growing length against a 2700 field.
for n in (1, 3, 5, 10, 20):
    rep = estimated_performance_rating(PerformanceQuery(2700, ScoreLine(n, n)))
    print(f"{n:>2}/{n:<2}  TPR {'N/A':>5}  FPR {rep.fpr:6.0f}  PR^e {rep.pre:7.1f}  w* {rep.w_star:.4f}")

###############################################################################
# The cap ``t`` sets how confident the rating is.  A looser cap lets the
# implied win probability climb higher, so a perfect score rates higher.

for t in (0.5, 0.75, 0.9):
    rep = estimated_performance_rating(PerformanceQuery(2700, ScoreLine(5, 5), t))
    print(f"t = {t:<4}  5/5 -> {rep.pre:7.1f}")

###############################################################################
# Interior scores are untouched: there the optimum is ``w* = m / n`` and the
# estimated rating is exactly the TPR.

rep = estimated_performance_rating(PerformanceQuery(2700, ScoreLine(1.5, 2)))
print(f"1.5/2: TPR {rep.tpr:.2f}  PR^e {rep.pre:.2f}  P(score) {rep.s_at_w_star:.3f}")
