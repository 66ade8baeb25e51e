from fractions import Fraction
from math import factorial, gcd

import pytest

from zonolat import (
    HitchinInstance, branch_count, gcd_invariance, is_d_integral,
    omega_vector, partitions_of, stalk_dimension, supports,
)
from zonolat.hitchin import refines
from zonolat.zonotopes import Budget


def test_omega_vector():
    assert omega_vector((1, 1, 1, 1), 1) == (Fraction(1, 4),) * 4
    assert omega_vector((3, 2), 0) == (0, 0)
    assert omega_vector((2, 1, 1), 2) == (1, Fraction(1, 2), Fraction(1, 2))


def test_d_integrality():
    assert is_d_integral((4,), 3)
    assert not is_d_integral((3, 1), 3)       # gcd(4,3)=1: only the trivial one
    assert all(is_d_integral(p, 0) for p in partitions_of(5))
    assert is_d_integral((2, 2), 2)
    assert not is_d_integral((3, 1), 2)


def test_partitions_of():
    assert partitions_of(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_refinement_order():
    assert refines((4,), (2, 1, 1))
    assert refines((2, 2), (2, 1, 1))
    assert not refines((3, 1), (2, 2))
    assert refines((3, 1), (1, 1, 1, 1))


def test_branch_count():
    assert branch_count((3, 1)) == 4
    assert branch_count((2, 2)) == 3
    assert branch_count((2, 1, 1)) == 6
    assert branch_count((4,)) == 1
    assert branch_count((1, 1, 1, 1)) == 1


def test_supports_degree_zero():
    report = supports(HitchinInstance(4, 0, 2))
    assert report.supported_partitions() == [(4,)]
    assert [row.rank for row in report.rows] == [1, 0, 0, 0, 0]


def test_supports_degree_one():
    report = supports(HitchinInstance(4, 1, 2))
    assert report.supported_partitions() == partitions_of(4)
    assert [row.rank for row in report.rows] == [1, 1, 1, 2, 6]


def test_supports_degree_two():
    report = supports(HitchinInstance(4, 2, 2))
    assert (2, 2) not in report.supported_partitions()
    assert [row.rank for row in report.rows] == [1, 1, 0, 1, 3]


def test_supports_degree_three_matches_degree_one():
    # gcd(4, 3) = gcd(4, 1) = 1: the rank rows coincide
    three = [row.rank for row in supports(HitchinInstance(4, 3, 2)).rows]
    one = [row.rank for row in supports(HitchinInstance(4, 1, 2)).rows]
    assert three == one == [1, 1, 1, 2, 6]


def test_support_dichotomy():
    for n in range(2, 7):
        for d in range(0, n + 1):
            report = supports(HitchinInstance(n, d, 2))
            for row in report.rows:
                trivial = len(row.parts) == 1
                assert row.supports == (trivial or not row.d_integral)
                assert (row.rank > 0) == (trivial or not row.d_integral)


def test_coprime_ranks_are_factorials():
    for n in (2, 3, 4, 5, 6):
        for d in range(0, n + 1):
            if gcd(n, d) != 1:
                continue
            for row in supports(HitchinInstance(n, d, 2)).rows:
                assert row.rank == factorial(len(row.parts) - 1)


def test_stalk_dimensions():
    assert stalk_dimension((1, 1, 1, 1), HitchinInstance(4, 1, 2),
                           check_oracle=True) == 128
    assert stalk_dimension((1, 1, 1, 1), HitchinInstance(4, 2, 2)) == 116
    assert stalk_dimension((4,), HitchinInstance(4, 1, 2)) == 1
    assert stalk_dimension((5,), HitchinInstance(5, 3, 3)) == 1
    with pytest.raises(ValueError):
        stalk_dimension((2, 1), HitchinInstance(4, 0, 2))


def test_stalk_matches_oracle_small():
    budget = Budget(max_generators=40)
    for n in (2, 3, 4):
        for parts in partitions_of(n):
            if len(parts) == 1:
                continue
            for d in (0, 1, 2):
                stalk_dimension(parts, HitchinInstance(n, d, 2), budget,
                                check_oracle=True)


def test_gcd_invariance():
    budget = Budget(max_generators=80)
    for n in range(2, 7):
        for d in range(0, n + 1):
            assert gcd_invariance(HitchinInstance(n, d, 2), budget)


def test_instance_validation():
    with pytest.raises(ValueError):
        HitchinInstance(0, 1, 2)
    with pytest.raises(ValueError):
        HitchinInstance(4, 1, 1)
