"""Combinatorial layer over spectral data: integer partitions translate
into dual graphs, translation vectors, local-system ranks, supports, and
stalk dimensions.

For a rank-n, degree-d instance on a genus-g base (g >= 2), each integer
partition of n contributes a dual graph whose translated zonotope counts
the irreducible components of the corresponding degenerate fibre, and a
signed factorial sum giving the rank of the attached local system.  A
stratum supports a summand exactly when that rank is positive, with the
trivial partition always present.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, gcd

from .graphs import dual_graph
from .posets import rank_formula
from .zonotopes import graphical_count


def normalize_partition(parts):
    parts = tuple(sorted((int(p) for p in parts), reverse=True))
    if not parts or parts[-1] < 1:
        raise ValueError("parts must be positive integers")
    return parts


def partitions_of(n):
    """Integer partitions of n in reverse lexicographic order, as weakly
    decreasing tuples."""
    if n < 1:
        raise ValueError("n must be positive")
    out = []

    def rec(remaining, maxpart, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for p in range(min(maxpart, remaining), 0, -1):
            prefix.append(p)
            rec(remaining - p, p, prefix)
            prefix.pop()

    rec(n, n, [])
    return out


def refines(coarse, fine):
    """Whether the parts of ``fine`` can be grouped to produce ``coarse``
    (so coarse >= fine in the dominance-by-merging order)."""
    coarse = normalize_partition(coarse)
    fine = normalize_partition(fine)
    if sum(coarse) != sum(fine):
        return False

    def match(targets, pool):
        if not targets:
            return not pool
        t, rest = targets[0], targets[1:]

        def pick(needed, start, chosen):
            if needed == 0:
                remaining = list(pool)
                for c in chosen:
                    remaining.remove(c)
                return match(rest, tuple(remaining))
            for i in range(start, len(pool)):
                if pool[i] <= needed:
                    if pick(needed - pool[i], i + 1, chosen + [pool[i]]):
                        return True
            return False

        return pick(t, 0, [])

    return match(list(coarse), tuple(fine))


def omega_vector(parts, d):
    """Translation vector (d*n_1/n, ..., d*n_r/n) of an integer partition."""
    parts = normalize_partition(parts)
    n = sum(parts)
    return tuple(Fraction(d * p, n) for p in parts)


def is_d_integral(parts, d):
    """Whether d * p / n is an integer for every part p."""
    parts = normalize_partition(parts)
    n = sum(parts)
    return all((d * p) % n == 0 for p in parts)


def branch_count(parts):
    """Number of set partitions of 1..n whose block sizes realize the
    given integer partition."""
    parts = normalize_partition(parts)
    n = sum(parts)
    out = factorial(n)
    for p in parts:
        out //= factorial(p)
    mult = {}
    for p in parts:
        mult[p] = mult.get(p, 0) + 1
    for m in mult.values():
        out //= factorial(m)
    return out


@dataclass(frozen=True)
class HitchinInstance:
    n: int
    d: int
    g: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("rank must be positive")
        if self.g < 2:
            raise ValueError("genus must be at least 2")


@dataclass(frozen=True)
class SupportRow:
    parts: tuple
    d_integral: bool
    rank: int
    supports: bool


@dataclass(frozen=True)
class SupportReport:
    instance: HitchinInstance
    rows: tuple

    def supported_partitions(self):
        return [row.parts for row in self.rows if row.supports]


def supports(instance):
    """One row per integer partition of n: whether it is d-integral, the
    rank of its local system, and whether its stratum supports a summand.

    The trivial partition always supports; a nontrivial one supports
    exactly when its rank is positive, which happens exactly when it is
    not d-integral.
    """
    rows = []
    for parts in partitions_of(instance.n):
        trivial = len(parts) == 1
        integral = is_d_integral(parts, instance.d)
        rank = rank_formula(parts, instance.d)
        supp = trivial or rank > 0
        if supp != (trivial or not integral):
            raise AssertionError(
                "support dichotomy failed for %s, d=%d" % (parts, instance.d))
        rows.append(SupportRow(parts, integral, rank, supp))
    return SupportReport(instance, tuple(rows))


def stalk_dimension(parts, instance, budget=None, check_oracle=False):
    """Number of irreducible components of the fibre over a general point
    of the stratum of ``parts``: the interior count of the dual graph's
    zonotope translated by the degree vector."""
    parts = normalize_partition(parts)
    if sum(parts) != instance.n:
        raise ValueError("partition does not sum to the instance rank")
    omega = omega_vector(parts, instance.d)
    if len(parts) == 1:
        return 1
    graph = dual_graph(parts, instance.g)
    total, _ = graphical_count(graph, omega, budget)
    if check_oracle:
        from .zonotopes import graphical_zonotope, interior_lattice_points
        oracle = len(interior_lattice_points(graphical_zonotope(graph, omega, budget)))
        if oracle != total:
            raise AssertionError("stalk count disagrees with the oracle")
    return total


def gcd_invariance(instance, budget=None):
    """Check that every stratum count only depends on gcd(d, n): compares
    the count at degree d with the count at degree gcd(d, n) for every
    partition of n.  Returns True when all agree."""
    d = instance.d
    e = gcd(d, instance.n) if d else 0
    reduced = HitchinInstance(instance.n, e if e else 0, instance.g)
    for parts in partitions_of(instance.n):
        a = stalk_dimension(parts, instance, budget)
        b = stalk_dimension(parts, reduced, budget)
        if a != b:
            return False
    return True
