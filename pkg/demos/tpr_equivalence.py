"""
TPR and PR^e agree on every interior score
==========================================

For ``0 < m < n`` the exact-score probability peaks at ``w = m / n`` and that
peak never exceeds 0.5, so with the default cap of 0.75 the constraint is idle
and the estimated rating coincides with the TPR.  This script regenerates the
comparison grid and the peak landscape, then plots them if matplotlib is
installed.
"""

from perfrating.figures import figure1_rows, figure2_rows

grid = figure1_rows(ra=2700, nmax=30)
worst = max(abs(t - p) for _, _, t, p in grid)
print(f"{len(grid)} interior scores, largest |TPR - PR^e| = {worst:.2e}")

peaks = figure2_rows(nmax=30)
best = max((f, m, n) for m, n, _, f in peaks if 0 < m < n)
print(f"highest interior peak probability {best[0]:.3f} at {best[1]}/{best[2]}")

###############################################################################
# Plot the peak probability against the score ratio.  Points for longer
# series sit lower: any single score becomes less likely as n grows.

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:  # plotting is optional
    plt = None

if plt is not None:
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(10, 4))
    ax1.scatter([t for *_, t, _ in grid], [p for *_, p in grid], s=4)
    ax1.set_xlabel("TPR")
    ax1.set_ylabel("PR^e")
    ax2.scatter([r for _, _, r, _ in peaks], [f for *_, f in peaks], c=[n for _, n, _, _ in peaks], s=6)
    ax2.set_xlabel("m / n")
    ax2.set_ylabel("peak probability")
    fig.tight_layout()
    fig.savefig("tpr_equivalence.png", dpi=100)
    print("saved tpr_equivalence.png")
