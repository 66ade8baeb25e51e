"""Counting lattice points in translated graphical zonotopes.

The zonotope of a graph is the Minkowski sum of one segment per edge,
joining the basis vectors of the edge's endpoints.  Translating it by a
rational vector changes which lattice points fall in its interior, and
the package computes that count three independent ways: brute-force
enumeration, Ehrhart reciprocity, and Möbius inversion over the flats.
"""

from fractions import Fraction

from zonolat import (
    Multigraph, count_via_reciprocity, ehrhart_complete, ehrhart_qp,
    graphical_zonotope, interior_lattice_points, mobius_count,
    tutte_complete,
)

# The complete graph on four vertices gives a three-dimensional zonotope
# sitting on the hyperplane x1 + x2 + x3 + x4 = 6 (one unit per edge).
k4 = Multigraph.complete(4)

for d in (0, 1, 2):
    omega = [Fraction(d, 4)] * 4
    z = graphical_zonotope(k4, omega)
    points = interior_lattice_points(z)
    total, rows = mobius_count(z)
    print("translation d/4 with d=%d:" % d)
    print("  enumerated interior points: %d" % len(points))
    print("  via reciprocity:            %d" % count_via_reciprocity(z))
    print("  via Möbius inversion:       %d" % total)

# The untranslated counts for any edge multiplicity follow from the
# Ehrhart polynomial, which for complete graphs comes out of the Tutte
# polynomial.  Both routes must agree.
print()
print("Tutte polynomial of K_4:", tutte_complete(3))
print("Ehrhart polynomial of Z(K_4):", ehrhart_complete(4))
print("same from the flat expansion:",
      ehrhart_qp(graphical_zonotope(k4)).as_polynomial())

# Dilating the graph by an edge multiplicity e dilates the zonotope, so
# interior counts become polynomials in e.
print()
for e in (1, 2, 3):
    z = graphical_zonotope(Multigraph.complete(4, e))
    print("C(Z of K(4,%d)) = %3d   (16e^3-15e^2+6e-1 gives %3d)"
          % (e, z.interior_count(), 16 * e ** 3 - 15 * e ** 2 + 6 * e - 1))

# Translations only matter through the gcd of the numerator with the
# vertex count: d and gcd(d, n) give the same counts.
print()
g = Multigraph.complete(4, 2)
for d in (1, 3, 5):
    z = graphical_zonotope(g, [Fraction(d, 4)] * 4)
    print("d=%d: %d interior points" % (d, z.interior_count()))
