"""From integer partitions to supports, ranks, and stalk dimensions.

A rank-n, degree-d instance on a genus-g curve assigns to every integer
partition of n a dual graph (with n_i * n_j * (2g-2) edges between parts)
and a translation vector (d * n_i / n).  The translated zonotope of the
dual graph counts irreducible components of the corresponding degenerate
fibre; the signed factorial sum over integral partitions gives the rank
of the local system, which decides which strata support summands.
"""

from zonolat import (
    HitchinInstance, branch_count, dual_graph, gcd_invariance, partitions_of,
    stalk_dimension, supports,
)
from zonolat.zonotopes import Budget

budget = Budget(max_generators=80)

# Supports for n = 4 across degrees: degree 0 keeps only the full
# stratum, coprime degrees keep everything, and degree 2 drops exactly
# the partition {2,2} whose translation vector is integral.
for d in (0, 1, 2):
    report = supports(HitchinInstance(4, d, 2))
    print("n=4, d=%d:" % d)
    for row in report.rows:
        print("  {%-8s integral=%-5s rank=%d supports=%s"
              % (",".join(map(str, row.parts)) + "}", row.d_integral,
                 row.rank, row.supports))

# The stalk over the deepest stratum: the dual graph of {1,1,1,1} at
# genus 2 is the complete graph with doubled edges, and its translated
# zonotope has 128 interior points in degree 1.
print()
print("dual graph of {1,1,1,1} at genus 2:", dual_graph((1, 1, 1, 1), 2))
for d in (0, 1, 2):
    value = stalk_dimension((1, 1, 1, 1), HitchinInstance(4, d, 2), budget)
    print("degree %d: %d fibre components" % (d, value))

# Branch counts weight the strata when the count is expanded over
# partition shapes.
print()
print("branch counts for n=4:",
      {"{%s}" % ",".join(map(str, p)): branch_count(p) for p in partitions_of(4)})

# Counts only depend on gcd(d, n), across every partition of n.
print()
for n in (4, 5, 6):
    ok = all(gcd_invariance(HitchinInstance(n, d, 2), budget)
             for d in range(n + 1))
    print("gcd invariance for n=%d: %s" % (n, ok))
