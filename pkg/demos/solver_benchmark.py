"""Solver scaling benchmark.

Times the tree matcher on random trees from a hundred nodes to a hundred
thousand and fits a straight line to the medians: runtime should grow
linearly in node count, with microseconds-level cost at MAC-timescale sizes.
"""

import numpy as np

from iabsim import bench_tmwm

sizes = [100, 1_000, 10_000, 100_000]
rows = bench_tmwm(sizes, seed=7)

print("%10s %8s %12s %12s %12s" % ("nodes", "reps", "q1 (us)", "median (us)", "q3 (us)"))
for r in rows:
    print("%10d %8d %12.1f %12.1f %12.1f" % (r.n_nodes, r.reps, r.q1_us, r.median_us, r.q3_us))

###############################################################################
# Least-squares fit of median runtime against node count. The slope is the
# marginal cost per node; R^2 close to 1 means the medians sit on a line.

x = np.array([r.n_nodes for r in rows], dtype=float)
y = np.array([r.median_us for r in rows], dtype=float)
slope, intercept = np.polyfit(x, y, 1)
pred = slope * x + intercept
r2 = 1.0 - np.sum((y - pred) ** 2) / np.sum((y - np.mean(y)) ** 2)

print("fit: t(n) = %.4f us/node * n + %.1f us   (R^2 = %.4f)" % (slope, intercept, r2))

###############################################################################
# The size that matters in the allocation loop is tiny: one donor, a few
# relay nodes, one reduced cluster per gNB. Per-call cost there must be
# negligible next to a 100 us subframe.

small = bench_tmwm([8], seed=7)[0]
print("8-node tree: median %.1f us over %d calls" % (small.median_us, small.reps))
