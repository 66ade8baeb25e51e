"""Acceptance criteria, one test per criterion.

Every expected value is exact; each test prints a PASS line with its
runtime when it completes.
"""

import time
from fractions import Fraction
from math import factorial, gcd

from zonolat import (
    EdgeOrder, Multigraph, Permutation, branch_count,
    count_via_reciprocity, ehrhart_complete, gcd_invariance,
    graphical_zonotope, interior_lattice_points, lex_labelling,
    mediocre_maximal_chains, mobius_count, partitions_of, rank_formula,
    sphere_count, stalk_dimension, supports, tutte_complete,
    verify_decomposition, HitchinInstance,
)
from zonolat.suites import oracle_suite, square_graph
from zonolat.zonotopes import Budget

HALF = Fraction(1, 2)


def _report(name, t0):
    print("PASS %s (%.2fs)" % (name, time.time() - t0))


def test_criterion_1_polynomial_tables():
    t0 = time.time()
    assert tutte_complete(1).coeffs == {(1, 0): 1}
    assert tutte_complete(2).coeffs == {(2, 0): 1, (1, 0): 1, (0, 1): 1}
    assert tutte_complete(3).coeffs == {(3, 0): 1, (2, 0): 3, (1, 0): 2,
                                        (1, 1): 4, (0, 1): 2, (0, 2): 3,
                                        (0, 3): 1}
    assert ehrhart_complete(2).coeffs == (1, 1)
    assert ehrhart_complete(3).coeffs == (1, 3, 3)
    assert ehrhart_complete(4).coeffs == (1, 6, 15, 16)
    _report("criterion 1: polynomial tables", t0)


def test_criterion_2_figure_counts():
    t0 = time.time()
    g4 = Multigraph.complete(4)
    for d, expected in ((0, 6), (1, 16), (2, 13)):
        z = graphical_zonotope(g4, [Fraction(d, 4)] * 4)
        assert len(interior_lattice_points(z)) == expected
        assert count_via_reciprocity(z) == expected
        total, _ = mobius_count(z)
        assert total == expected
    _report("criterion 2: figure counts 6/16/13", t0)


def test_criterion_3_table_one():
    t0 = time.time()
    shapes = [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert [branch_count(s) for s in shapes] == [1, 4, 3, 6, 1]
    expected = {0: [1, 0, 0, 0, 0], 1: [1, 1, 1, 2, 6], 2: [1, 1, 0, 1, 3]}
    for d, row in expected.items():
        got = [rank_formula(s, d) for s in shapes]
        assert got == row
        for shape, value in zip(shapes, row):
            if len(shape) == 1:
                continue
            omega = [Fraction(d * p, 4) for p in shape]
            g = Multigraph.complete(len(shape))
            assert sphere_count(g, omega) == value
            assert mediocre_maximal_chains(g, omega) == value
    _report("criterion 3: table of b and l values", t0)


def test_criterion_4_closed_forms():
    t0 = time.time()
    for e in (1, 2, 3):
        g = Multigraph.complete(4, e)
        plain = len(interior_lattice_points(graphical_zonotope(g)))
        assert plain == 16 * e ** 3 - 15 * e ** 2 + 6 * e - 1
        quarter = len(interior_lattice_points(
            graphical_zonotope(g, [Fraction(1, 4)] * 4)))
        assert quarter == 16 * e ** 3
        half = len(interior_lattice_points(graphical_zonotope(g, [HALF] * 4)))
        assert half == 16 * e ** 3 - 3 * e ** 2
    _report("criterion 4: closed forms 16e^3, 16e^3-3e^2, 16e^3-15e^2+6e-1", t0)


def test_criterion_5_equivariant_identity():
    t0 = time.time()
    instances = []
    for d in range(4):
        instances.append((Multigraph.complete(3), [Fraction(d, 3)] * 3))
        instances.append((Multigraph.complete(4), [Fraction(d, 4)] * 4))
    for e in (2, 3):
        for d in range(3):
            instances.append((Multigraph.complete(3, e), [Fraction(d, 3)] * 3))
    instances.append((square_graph(), [HALF] * 4))
    triangle = Multigraph.from_edges(3, [(1, 2, 2), (1, 3, 4), (2, 3, 4)])
    instances.append((triangle, [HALF, HALF, 0]))
    for g, omega in instances:
        report = verify_decomposition(g, omega)
        assert report.ok, (g, omega)
    report = verify_decomposition(triangle, [HALF, HALF, 0])
    assert report.dimension_gap() == 7
    swap = Permutation((2, 1, 3))
    assert sorted(s.dimension for s in report.summands) == [1, 6]
    small = next(s for s in report.summands if s.dimension == 1)
    big = next(s for s in report.summands if s.dimension == 6)
    assert small.induced[swap] == 1 and big.induced[swap] == 0
    assert small.stabilizer_order == 2 and big.stabilizer_order == 1
    _report("criterion 5: equivariant identity and triangle report", t0)


def test_criterion_6_oracle_equivalence():
    t0 = time.time()
    ok, rows = oracle_suite(trials=200, seed=20240229)
    summary = rows[-1]["detail"]
    assert ok, [r for r in rows if not r["ok"]][:3]
    assert "count instances=200" in summary
    _report("criterion 6: oracle equivalence on 200 random instances "
            "(%s)" % summary, t0)


def test_criterion_7_shelling_suite():
    t0 = time.time()
    # labelling axiom on every interval: complete graphs r <= 5 and the square
    for r in range(3, 6):
        for d in (1, 2, r - 1):
            lab = lex_labelling(Multigraph.complete(r), [Fraction(d, r)] * r)
            assert lab.check_axiom() == []
    lab = lex_labelling(square_graph(), [HALF] * 4,
                        EdgeOrder([(1, 2), (2, 3), (3, 4), (1, 4)]))
    assert lab.check_axiom() == []
    # chain count vs Möbius count for r <= 6, denominators <= 6
    for r in range(2, 7):
        for den in range(1, 7):
            for num in range(0, den + 1):
                omega = [Fraction(num, den)] * r
                if sum(omega).denominator != 1:
                    continue
                assert mediocre_maximal_chains(Multigraph.complete(r), omega) \
                    == sphere_count(Multigraph.complete(r), omega)
    # positivity: nonzero exactly off the integral vectors
    for r in range(2, 6):
        for den in (1, 2, 3, 4):
            for num in range(0, den + 1):
                omega = [Fraction(num, den)] * r
                if sum(omega).denominator != 1:
                    continue
                count = sphere_count(Multigraph.complete(r), omega)
                assert (count > 0) == (Fraction(num, den).denominator != 1)
    _report("criterion 7: shelling suite", t0)


def test_criterion_8_hitchin_layer():
    t0 = time.time()
    report = supports(HitchinInstance(4, 0, 2))
    assert report.supported_partitions() == [(4,)]
    report = supports(HitchinInstance(4, 1, 2))
    assert report.supported_partitions() == partitions_of(4)
    report = supports(HitchinInstance(4, 2, 2))
    assert report.supported_partitions() == [(4,), (3, 1), (2, 1, 1),
                                             (1, 1, 1, 1)]
    for n in range(2, 7):
        for d in range(0, n + 1):
            if gcd(n, d) == 1:
                for parts in partitions_of(n):
                    assert rank_formula(parts, d) == factorial(len(parts) - 1)
    budget = Budget(max_generators=80)
    for n in range(2, 7):
        for d in range(0, n + 1):
            assert gcd_invariance(HitchinInstance(n, d, 2), budget)
    assert stalk_dimension((1, 1, 1, 1), HitchinInstance(4, 1, 2),
                           check_oracle=True) == 128
    _report("criterion 8: spectral layer", t0)
