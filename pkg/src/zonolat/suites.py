"""Batch verification suites: each driver runs one family of
cross-checks (shelling counts, the equivariant decomposition identity,
the spectral-data layer, or randomized oracle agreement) and reports a
pass flag with per-check detail rows suitable for machine output."""

import random
from fractions import Fraction

from .equivariant import forest_coefficient_identity, permutation_character, \
    verify_decomposition
from .graphs import Multigraph, automorphisms
from .hitchin import HitchinInstance, gcd_invariance, partitions_of, \
    stalk_dimension, supports
from .posets import LexLabelling, SetPartition, flats, \
    mediocre_maximal_chains, sphere_count
from .zonotopes import count_via_reciprocity, graphical_zonotope, \
    interior_lattice_points, mobius_count


def _result(ok, name, detail=""):
    return {"check": name, "ok": bool(ok), "detail": detail}


def square_graph():
    """Four-cycle with the labelled-square edge order 12, 23, 34, 14."""
    return Multigraph.from_edges(4, [(1, 2), (2, 3), (3, 4), (1, 4)])


def shelling_instances(r_max=5):
    """Complete graphs with constant weight vectors of every residue,
    plus the four-cycle with the half-integral weight."""
    out = []
    for r in range(2, r_max + 1):
        for d in range(0, r + 1):
            out.append((Multigraph.complete(r),
                        tuple(Fraction(d, r) for _ in range(r))))
        if r % 2 == 0:
            out.append((Multigraph.complete(r),
                        tuple(Fraction(1, 2) for _ in range(r))))
    out.append((square_graph(), tuple(Fraction(1, 2) for _ in range(4))))
    return out


def shelling_suite(r_max=5, axiom_r_max=5, mediocre_r_max=6):
    """Sphere-count consistency (Möbius form, reduced-poset form, and
    chain count), positivity, labelling functoriality, and the labelling
    axiom, over the standard instance battery."""
    rows = []
    for g, omega in shelling_instances(r_max):
        name = "r=%d mult=%d omega=%s" % (g.r, g.y[1][2] if g.r > 1 else 0,
                                          ",".join(str(w) for w in omega))
        spheres = sphere_count(g, omega)
        fp = flats(g, omega)
        if fp.non_integral():
            reduced = fp.bounded_nonintegral()
            sign = -1 if (g.r - 1) % 2 else 1
            hall = sign * reduced.mobius(fp.zero, SetPartition.top(g.r))
            rows.append(_result(hall == spheres, "hall " + name,
                                "mobius=%d hall=%d" % (spheres, hall)))
        else:
            rows.append(_result(spheres == 0, "empty " + name,
                                "count=%d" % spheres))
        if g.r <= mediocre_r_max:
            med = mediocre_maximal_chains(g, omega)
            rows.append(_result(med == spheres, "mediocre " + name,
                                "mobius=%d chains=%d" % (spheres, med)))
        integral = all(Fraction(w).denominator == 1 for w in omega)
        positive = spheres > 0
        rows.append(_result(positive == (not integral and g.r > 1),
                            "positivity " + name, "count=%d" % spheres))
        if g.r <= axiom_r_max:
            lab = LexLabelling(g, omega)
            bad = lab.check_axiom()
            rows.append(_result(not bad, "axiom " + name,
                                "%d violations" % len(bad)))
            rows.append(_result(not _functoriality_violations(lab),
                                "functoriality " + name))
    return all(r["ok"] for r in rows), rows


def _functoriality_violations(lab):
    """Joining a forest edge must drop exactly that edge from the forest
    and join the minimal integral flat accordingly."""
    bad = []
    for flat in lab.flat_poset.elements:
        forest = lab.forest(flat)
        f_flat = lab.min_integral_flat(flat)
        for edge in forest:
            p, q = tuple(edge)
            joined = flat.merge_blocks(p, q)
            merge = {}
            for b in joined.blocks:
                for b0 in flat.blocks:
                    if b0 <= b:
                        merge[b0] = b
            expected_forest = {frozenset((merge[x], merge[y]))
                               for e in forest - {edge}
                               for x, y in [tuple(e)]}
            if lab.forest(joined) != frozenset(expected_forest):
                bad.append((flat, edge, "forest"))
            atom = SetPartition(
                [b for b in flat.blocks if b != p and b != q] + [p | q])
            if lab.min_integral_flat(joined) != f_flat.join(atom):
                bad.append((flat, edge, "integral flat"))
    return bad


def decomposition_instances():
    """The worked verification battery: complete graphs, uniform
    multigraphs on three vertices, the four-cycle, and the asymmetric
    triangle."""
    out = []
    for d in range(0, 4):
        out.append(("K3 d=%d" % d, Multigraph.complete(3),
                    tuple(Fraction(d, 3) for _ in range(3))))
        out.append(("K4 d=%d" % d, Multigraph.complete(4),
                    tuple(Fraction(d, 4) for _ in range(4))))
    for e in (2, 3):
        for d in range(0, 3):
            out.append(("K(3,%d) d=%d" % (e, d), Multigraph.complete(3, e),
                        tuple(Fraction(d, 3) for _ in range(3))))
    out.append(("square", square_graph(), tuple(Fraction(1, 2) for _ in range(4))))
    out.append(("triangle(2,4,4)",
                Multigraph.from_edges(3, [(1, 2, 2), (1, 3, 4), (2, 3, 4)]),
                (Fraction(1, 2), Fraction(1, 2), Fraction(0))))
    return out


def decomposition_suite(instances=None, forests=True):
    """Invariant-count identity, dimension bookkeeping and characters for
    every instance; optionally also the per-forest coefficient identity
    for every automorphism."""
    rows = []
    for name, g, omega in (instances or decomposition_instances()):
        report = verify_decomposition(g, omega)
        rows.append(_result(report.ok, "decomposition " + name,
                            "gap=%d summands=%d" % (report.dimension_gap(),
                                                    len(report.summands))))
        for srow in report.rows:
            if not srow.ok:
                rows.append(_result(False, "identity %s sigma=%r" % (name, srow.sigma),
                                    "lhs=%d rhs=%d" % (srow.lhs, srow.rhs)))
        if forests:
            for sigma in automorphisms(g):
                res = forest_coefficient_identity(g, sigma, omega)
                ok = all(entry[3] for entry in res)
                if not ok:
                    rows.append(_result(False, "forest %s sigma=%r" % (name, sigma)))
    return all(r["ok"] for r in rows), rows


def hitchin_suite(n_max=6, g=2, d_max=None, stalk_n_max=5, budget=None):
    """Support dichotomy, coprime factorial ranks, gcd invariance, and
    stalk-count consistency against the enumeration oracle."""
    from math import factorial, gcd as _gcd
    from .zonotopes import Budget
    budget = budget or Budget(max_generators=80)
    rows = []
    for n in range(2, n_max + 1):
        top = n if d_max is None else d_max
        for d in range(0, top + 1):
            inst = HitchinInstance(n, d, g)
            report = supports(inst)
            ok = all(row.supports == (len(row.parts) == 1 or not row.d_integral)
                     for row in report.rows)
            rows.append(_result(ok, "dichotomy n=%d d=%d" % (n, d)))
            if _gcd(n, d) == 1:
                ok = all(row.rank == factorial(len(row.parts) - 1)
                         for row in report.rows)
                rows.append(_result(ok, "coprime ranks n=%d d=%d" % (n, d)))
            rows.append(_result(gcd_invariance(inst, budget), "gcd n=%d d=%d" % (n, d)))
        if n <= stalk_n_max:
            for parts in partitions_of(n):
                if len(parts) == 1:
                    continue
                for d in (0, 1, 2):
                    inst = HitchinInstance(n, d, g)
                    value = stalk_dimension(parts, inst, budget, check_oracle=True)
                    rows.append(_result(value >= 0, "stalk n=%d d=%d %s" % (n, d, parts),
                                        "count=%d" % value))
    return all(r["ok"] for r in rows), rows


def random_graph(rng, r_max=4, mult_max=3):
    r = rng.randint(1, r_max)
    y = [[0] * (r + 1) for _ in range(r + 1)]
    for a in range(1, r + 1):
        for b in range(a + 1, r + 1):
            y[a][b] = y[b][a] = rng.randint(0, mult_max)
    return Multigraph(r, y)


def random_omega(rng, r, max_den=4):
    omega = [Fraction(rng.randint(-2, 2), rng.choice(range(1, max_den + 1)))
             for _ in range(r)]
    total = sum(omega)
    omega[-1] -= total - int(total)
    return tuple(omega)


def invariant_omega(rng, g, max_den=4, tries=40):
    """Random automorphism-invariant weight vector with integral total,
    constant on vertex orbits; None when rejection sampling fails."""
    aut = automorphisms(g)
    orbits = []
    seen = set()
    for v in range(1, g.r + 1):
        if v not in seen:
            orbit = {p(v) for p in aut}
            seen |= orbit
            orbits.append(sorted(orbit))
    for _ in range(tries):
        omega = [None] * g.r
        for orbit in orbits:
            val = Fraction(rng.randint(-2, 2), rng.choice(range(1, max_den + 1)))
            for v in orbit:
                omega[v - 1] = val
        if sum(omega).denominator == 1:
            return tuple(omega)
    return None


def oracle_suite(trials=200, seed=20240229, r_max=4, mult_max=3, max_den=4):
    """Randomized agreement of the three counting routes, plus the
    fixed-point double count for every automorphism on instances with an
    invariant weight vector."""
    rng = random.Random(seed)
    rows = []
    count_checked = 0
    char_checked = 0
    for trial in range(trials):
        g = random_graph(rng, r_max, mult_max)
        omega = random_omega(rng, g.r, max_den)
        z = graphical_zonotope(g, omega)
        oracle = len(interior_lattice_points(z))
        rec = count_via_reciprocity(z)
        mob, _ = mobius_count(z)
        if not (oracle == rec == mob):
            rows.append(_result(False, "counts trial=%d" % trial,
                                "%r omega=%s oracle=%d rec=%d mob=%d"
                                % (g, omega, oracle, rec, mob)))
        count_checked += 1
        inv = invariant_omega(rng, g, max_den)
        if inv is not None:
            char = permutation_character(g, inv)   # double count asserted inside
            char.orbit_count()
            char_checked += 1
    rows.append(_result(True, "summary",
                        "count instances=%d character instances=%d"
                        % (count_checked, char_checked)))
    ok = all(r["ok"] for r in rows) and count_checked >= trials \
        and char_checked >= trials // 2
    return ok, rows
