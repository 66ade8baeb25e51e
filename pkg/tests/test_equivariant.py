from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from zonolat import (
    Multigraph, Permutation, SetPartition, a_sets, alpha_character,
    automorphisms, face_lattice_feasibility, fixed_interior_count,
    fixed_zonotope, forest_coefficient_identity, homology_character,
    orientation_character, permutation_character, restrict,
    verify_decomposition,
)
from zonolat.equivariant import block_permutation, quotient_image
from zonolat.posets import FlatPoset, Poset

HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)


def triangle(e, f):
    return Multigraph.from_edges(3, [(1, 2, e), (1, 3, f), (2, 3, f)])


def multigraphs(max_r=5, max_mult=3):
    @st.composite
    def build(draw):
        r = draw(st.integers(1, max_r))
        y = [[0] * (r + 1) for _ in range(r + 1)]
        for a in range(1, r + 1):
            for b in range(a + 1, r + 1):
                y[a][b] = y[b][a] = draw(st.integers(0, max_mult))
        return Multigraph(r, y)
    return build()


def test_orientation_identity_and_odd_cycles():
    g = triangle(1, 2)
    assert orientation_character(g, Permutation.identity(3)) == 1
    g5 = Multigraph.complete(5)
    five_cycle = Permutation((2, 3, 4, 5, 1))
    assert orientation_character(g5, five_cycle) == 1
    three_cycle = Permutation((2, 3, 1, 4, 5))
    assert orientation_character(g5, three_cycle) == 1


def test_orientation_triangle_example():
    swap = Permutation((2, 1, 3))
    for e in (1, 2, 3):
        g = triangle(e, e + 1)
        expected = -1 if e % 2 else 1
        assert orientation_character(g, swap) == expected
        # twist at the bottom flat: sign of the swap times the orientation
        assert alpha_character(g, SetPartition.singletons(3), swap) == \
            -expected


@settings(max_examples=30, deadline=None)
@given(multigraphs(max_r=5))
def test_orientation_multiplicative(g):
    perms = automorphisms(g)
    for p in perms[:6]:
        for q in perms[:6]:
            assert orientation_character(g, p) * orientation_character(g, q) \
                == orientation_character(g, p * q)


def test_alpha_top_flat_trivial():
    g = Multigraph.complete(4)
    for sigma in automorphisms(g):
        assert alpha_character(g, SetPartition.top(4), sigma) == 1


def test_fixed_zonotope_k4_transposition():
    g4 = Multigraph.complete(4)
    sigma = Permutation((2, 1, 3, 4))
    fz = fixed_zonotope(g4, sigma)
    assert set(fz.zonotope.generators) == {(-1, 2, 0), (-1, 0, 2), (0, -1, 1)}
    assert fz.zonotope.omega == (HALF, 0, 0)
    assert fz.interior_count() == 2


def test_fixed_zonotope_identity_matches_plain_count():
    g4 = Multigraph.complete(4)
    ident = Permutation.identity(4)
    assert fixed_interior_count(g4, ident) == 6
    assert fixed_interior_count(g4, ident, [QUARTER] * 4) == 16


def test_fixed_zonotope_translated_double_count():
    # the double-count assertion lives inside permutation_character
    char = permutation_character(Multigraph.complete(4), [QUARTER] * 4)
    assert char.dimension == 16
    char0 = permutation_character(Multigraph.complete(4))
    assert char0[Permutation((2, 1, 3, 4))] == 2


def test_k3_every_automorphism_fixes_the_center():
    char = permutation_character(Multigraph.complete(3))
    assert all(v == 1 for v in char.values.values())
    assert char.orbit_count() == 1


def test_burnside_orbit_count():
    g4 = Multigraph.complete(4)
    char = permutation_character(g4, [QUARTER] * 4)
    points = __import__("zonolat").graphical_zonotope(g4, [QUARTER] * 4)\
        .lattice_points(interior=True)
    orbits = set()
    aut = automorphisms(g4)
    for x in points:
        orbit = frozenset(tuple(x[p.inverse()(i) - 1] for i in range(1, 5))
                          for p in aut)
        orbits.add(orbit)
    assert char.orbit_count() == len(orbits)


def test_a_sets_odd_cycles_empty():
    g5 = Multigraph.complete(5)
    sigma = Permutation((2, 3, 1, 5, 4))   # cycle type (3, 2)
    data = a_sets(g5, sigma, [])
    # only even cycles contribute, and the five-cycle graph has odd
    # multiplicities exactly on the 2-cycle
    assert data.levels == (0, 1)
    three_cycle = Permutation((2, 3, 1, 4, 5))
    data = a_sets(g5, three_cycle, [])
    assert all(not s for s in data.by_block[:1])


def test_a_sets_k4_double_transposition():
    g4 = Multigraph.complete(4)
    sigma = Permutation((2, 1, 4, 3))
    data = a_sets(g4, sigma, [])
    assert data.block_partition == SetPartition.singletons(2)
    assert data.levels == (1, 1)
    assert {str(p) for p in data.joins} == {"12|3|4", "1|2|34"}
    assert data.r_flat == SetPartition.singletons(4)
    # choosing one orbit between the two cycles
    data = a_sets(g4, sigma, [(1, 3)])
    assert data.block_partition == SetPartition.top(2)
    assert data.r_flat == SetPartition.from_string("13|24")
    with pytest.raises(ValueError):
        a_sets(g4, sigma, [(1, 3), (1, 4)])   # two parallel orbits close a cycle


def test_face_feasibility_identity_automorphism():
    g4 = Multigraph.complete(4)
    ident = Permutation.identity(4)
    top = SetPartition.top(4)
    assert face_lattice_feasibility(g4, ident, top, SetPartition.top(4))
    assert face_lattice_feasibility(g4, ident, top, SetPartition.top(4),
                                    [QUARTER] * 4)


def test_face_feasibility_k4_cases():
    g4 = Multigraph.complete(4)
    sigma = Permutation((2, 1, 3, 4))
    top = SetPartition.top(4)
    assert face_lattice_feasibility(g4, sigma, top, SetPartition.top(3))
    # strict-half block with mismatched halving sets is infeasible
    dbl = Permutation((2, 1, 4, 3))
    assert not face_lattice_feasibility(g4, dbl, top, SetPartition.top(2),
                                        [QUARTER] * 4)
    # restriction decides feasibility: keeping the odd antipodal edges
    # inside a block blocks the face, separating them frees it
    assert not face_lattice_feasibility(g4, dbl, SetPartition.from_string("12|34"),
                                        SetPartition.singletons(2))
    assert face_lattice_feasibility(g4, dbl, SetPartition.from_string("13|24"),
                                    SetPartition.singletons(2))


def test_quotient_image():
    from zonolat import quotient
    g4 = Multigraph.complete(4)
    dbl = Permutation((2, 1, 4, 3))
    q = quotient(g4, dbl)
    assert quotient_image(SetPartition.from_string("12|34"), q) == \
        SetPartition.singletons(2)
    assert quotient_image(SetPartition.from_string("13|24"), q) == \
        SetPartition.top(2)
    with pytest.raises(ValueError):
        quotient_image(SetPartition.from_string("13|2|4"), q)


def test_alpha_closed_form():
    # whenever no halving join sits below the flat, the twist equals the
    # block-permutation sign times the parity of the image halving set
    for g in (Multigraph.complete(4), triangle(2, 4),
              Multigraph.from_edges(4, [(1, 2), (2, 3), (3, 4), (1, 4)])):
        fp = FlatPoset(g)
        for sigma in automorphisms(g):
            from zonolat import quotient
            q = quotient(g, sigma)
            for flat in fp.elements:
                if flat.apply(sigma) != flat:
                    continue
                from zonolat.equivariant import _block_a_data
                image = quotient_image(flat, q)
                joins_total = _block_a_data(g, q, image, None)[2]
                if any(p.refines(flat) for p in joins_total):
                    continue
                expected = block_permutation(flat, sigma).sign() \
                    * (-1 if len(joins_total) % 2 else 1)
                assert alpha_character(g, flat, sigma) == expected


def test_decomposition_triangle_report():
    g = triangle(2, 4)
    report = verify_decomposition(g, [HALF, HALF, 0])
    assert report.ok
    assert report.dimension_gap() == 7
    swap = Permutation((2, 1, 3))
    dims = sorted(s.dimension for s in report.summands)
    assert dims == [1, 6]
    for s in report.summands:
        if s.dimension == 1:
            assert s.orbit_size == 1 and s.stabilizer_order == 2
            assert s.induced[swap] == 1
        else:
            assert s.orbit_size == 2 and s.stabilizer_order == 1
            assert s.induced[swap] == 0
    row = next(r for r in report.rows if r.sigma == swap)
    assert row.lhs == row.rhs == 1


def test_decomposition_integral_translation_is_trivial():
    report = verify_decomposition(Multigraph.complete(3), [0, 0, 0])
    assert report.ok
    assert report.dimension_gap() == 0
    assert not report.summands
    assert all(r.lhs == r.rhs == 0 for r in report.rows)


def test_decomposition_k4():
    g4 = Multigraph.complete(4)
    for d in (1, 2):
        report = verify_decomposition(g4, [Fraction(d, 4)] * 4)
        assert report.ok
        assert len(report.rows) == 24


def test_decomposition_k5():
    g5 = Multigraph.complete(5)
    for d in (1, 2):
        report = verify_decomposition(g5, [Fraction(d, 5)] * 5)
        assert report.ok
        assert len(report.rows) == 120


def test_decomposition_multiedge_complete():
    for e in (2, 3):
        report = verify_decomposition(Multigraph.complete(4, e),
                                      [Fraction(1, 2)] * 4)
        assert report.ok


def test_homology_character_identity_is_sphere_count():
    from zonolat import sphere_count
    g4 = Multigraph.complete(4)
    for d in (1, 2):
        omega = [Fraction(d, 4)] * 4
        assert homology_character(g4, omega, Permutation.identity(4)) == \
            sphere_count(g4, omega)


def brute_fixed_mobius(g, omega, sigma):
    """Test-local recomputation: Möbius value of the invariant reduced
    poset, written directly from the definition."""
    fp = FlatPoset(g, omega)
    from zonolat.posets import is_omega_integral
    elems = [p for p in fp.elements
             if p.apply(sigma) == p and not is_omega_integral(p, omega)]
    zero = SetPartition.singletons(g.r)
    top = SetPartition.top(g.r)
    universe = sorted({zero, top, *elems}, key=str)

    def mob(x, y):
        if x == y:
            return 1
        return -sum(mob(x, z) for z in universe
                    if (z == x or x.refines(z)) and z != y and z.refines(y))

    return mob(zero, top)


def test_homology_character_k4_half():
    g4 = Multigraph.complete(4)
    omega = [HALF] * 4
    for images in ((2, 1, 3, 4), (2, 1, 4, 3), (2, 3, 4, 1), (1, 2, 3, 4)):
        sigma = Permutation(images)
        expected = -brute_fixed_mobius(g4, omega, sigma)   # (-1)^(r-3) with r=4
        assert homology_character(g4, omega, sigma) == expected


def test_homology_character_triangle():
    g = triangle(2, 4)
    omega = [HALF, HALF, 0]
    assert homology_character(g, omega, Permutation.identity(3)) == 1
    assert homology_character(g, omega, Permutation((2, 1, 3))) == -1


def test_forest_coefficient_identity():
    g4 = Multigraph.complete(4)
    for images in ((1, 2, 3, 4), (2, 1, 3, 4), (2, 1, 4, 3), (2, 3, 1, 4),
                   (2, 3, 4, 1)):
        sigma = Permutation(images)
        for d in (1, 2):
            rows = forest_coefficient_identity(g4, sigma, [Fraction(d, 4)] * 4)
            assert rows and all(ok for _, _, _, ok in rows)
    g = triangle(2, 4)
    rows = forest_coefficient_identity(g, Permutation((2, 1, 3)), [HALF, HALF, 0])
    assert rows and all(ok for _, _, _, ok in rows)


def test_restricted_fixed_counts_multiply():
    # the fixed count of a restriction splits over the invariant blocks
    g = triangle(2, 4)
    swap = Permutation((2, 1, 3))
    flat = SetPartition.from_string("12|3")
    assert fixed_interior_count(restrict(g, flat), swap) == \
        fixed_interior_count(Multigraph.from_edges(2, [(1, 2, 2)]),
                             Permutation((2, 1)))
