"""Sphere counts of partition posets through a lexicographic labelling.

Fix a graph and a rational weight per vertex with integral total.  A
partition of the vertices is integral when every block's weights sum to
an integer.  The non-integral flats form a poset whose order complex is
a wedge of spheres; the number of spheres is computed here as a signed
Möbius sum and re-derived by counting the maximal chains that are never
locally least for a lexicographic edge labelling.
"""

from fractions import Fraction

from zonolat import (
    EdgeOrder, Multigraph, SetPartition, lex_labelling,
    mediocre_maximal_chains, rank_formula, sphere_count,
)

HALF = Fraction(1, 2)

# The four-cycle with edges ordered a=12, b=23, c=34, d=14 and weight 1/2
# on every vertex.
square = Multigraph.from_edges(4, [(1, 2), (2, 3), (3, 4), (1, 4)])
order = EdgeOrder([(1, 2), (2, 3), (3, 4), (1, 4)])
lab = lex_labelling(square, [HALF] * 4, order)

zero = SetPartition.singletons(4)
print("minimal spanning forest at the bottom flat:",
      sorted(tuple(sorted(min(b) for b in e)) for e in lab.forest(zero)))
print("minimal integral flat of that forest:", lab.min_integral_flat(zero))
print("local edge order (block minima):",
      [tuple(sorted(min(b) for b in e)) for e in lab.local_order(zero)])

print()
print("spheres (Möbius form):   ", sphere_count(square, [HALF] * 4))
print("spheres (chain counting):", mediocre_maximal_chains(square, [HALF] * 4, order))
print("labelling axiom violations:", len(lab.check_axiom()))

# On complete graphs the Möbius sum collapses to a signed factorial sum
# over the integral partitions; the same number is the rank of the local
# system attached to an integer partition with the matching weights.
print()
shapes = [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
print("shape      d=0  d=1  d=2")
for shape in shapes:
    ranks = [rank_formula(shape, d) for d in (0, 1, 2)]
    print("%-9s  %3d  %3d  %3d" % ("{%s}" % ",".join(map(str, shape)), *ranks))

# Weight vectors with a common denominator k on r vertices: positive
# sphere counts appear exactly when the weights are non-integral.
print()
for r in (3, 4, 5):
    row = []
    for d in range(r + 1):
        row.append(sphere_count(Multigraph.complete(r), [Fraction(d, r)] * r))
    print("r=%d:" % r, row)
