"""Automorphism actions on the lattice points of translated graphical
zonotopes: fixed-locus zonotopes, orientation and sign twists, the
halving-set combinatorics of faces of fixed loci, and a character-level
verification that the permutation representation on interior lattice
points of a translated zonotope decomposes into induced summands indexed
by orbits of non-integral flats.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .graphs import Multigraph, Permutation, automorphisms, contract, \
    is_automorphism, quotient, restrict
from .posets import FlatPoset, Poset, SetPartition, is_omega_integral
from .zonotopes import Zonotope, graphical_zonotope


def _two_adic(n):
    v = 0
    while n % 2 == 0:
        n //= 2
        v += 1
    return v


def _check_invariant_omega(omega, perms, r):
    omega = tuple(Fraction(v) for v in omega)
    if len(omega) != r:
        raise ValueError("translation vector has wrong length")
    for p in perms:
        if any(omega[p(a) - 1] != omega[a - 1] for a in range(1, r + 1)):
            raise ValueError("translation vector is not invariant under %r" % p)
    return omega


def orientation_character(g, sigma):
    """Sign recording whether the automorphism reverses an odd number of
    edge orientations.

    Closed form: the product over even cycles of (-1) raised to the
    multiplicity between antipodal vertices of the cycle; equivalently -1
    exactly when the total cycle translation is a strict half-integer.
    The closed form is checked against a direct orientation count.
    """
    if not is_automorphism(g, sigma):
        raise ValueError("permutation is not an automorphism")
    exponent = 0
    for cyc in sigma.cycles():
        l = len(cyc)
        if l % 2 == 0:
            a = cyc[0]
            b = a
            for _ in range(l // 2):
                b = sigma(b)
            exponent += g.y[a][b]
    closed = -1 if exponent % 2 else 1
    direct_exp = sum(g.y[a][b] for a, b in g.edge_pairs() if sigma(a) > sigma(b))
    direct = -1 if direct_exp % 2 else 1
    if closed != direct:
        raise AssertionError("orientation character mismatch")
    return closed


def block_permutation(flat, sigma):
    """Permutation induced on the blocks of a sigma-stable partition,
    with blocks numbered by their minimum element order."""
    blocks = flat.blocks
    index = {b: i + 1 for i, b in enumerate(blocks)}
    images = []
    for b in blocks:
        image = sigma.apply_set(b)
        if image not in index:
            raise ValueError("permutation does not stabilize the partition")
        images.append(index[image])
    return Permutation(images)


def alpha_character(g, flat, sigma):
    """Sign twist of a stabilized flat: the sign of the induced block
    permutation times the orientation character of the contracted graph."""
    induced = block_permutation(flat, sigma)
    contracted = contract(g, flat)
    return induced.sign() * orientation_character(contracted, induced)


@dataclass(frozen=True)
class FixedZonotope:
    """Image of the fixed locus of a graphical zonotope under cycle
    averaging: a zonotope in the quotient coordinates whose lattice points
    correspond bijectively to the invariant lattice points upstairs."""

    base: Multigraph
    sigma: Permutation
    quotient: object
    zonotope: Zonotope

    def interior_count(self):
        return self.zonotope.interior_count()

    def closed_count(self):
        return self.zonotope.closed_count()


def fixed_zonotope(g, sigma, omega=None, budget=None):
    """Fixed locus of the (translated) graphical zonotope under an
    automorphism, in quotient coordinates.

    For cycles i < j of lengths l_i, l_j joined by x_ij quotient edges the
    generators are x_ij copies of the segment from (l_j/gcd) e_i to
    (l_i/gcd) e_j, and the whole sum is shifted by the half-integral cycle
    translation plus the averaged input translation.
    """
    q = quotient(g, sigma)
    k = len(q.cycles)
    if omega is not None:
        omega_sigma = q.project_omega(omega)
    else:
        omega_sigma = tuple(Fraction(0) for _ in range(k))
    gens = []
    offset = [0] * k
    for i in range(1, k + 1):
        for j in range(i + 1, k + 1):
            m = q.graph.y[i][j]
            if not m:
                continue
            li, lj = q.lengths[i - 1], q.lengths[j - 1]
            d = gcd(li, lj)
            vec = [0] * k
            vec[i - 1] = -(lj // d)
            vec[j - 1] = li // d
            gens.extend([tuple(vec)] * m)
            offset[i - 1] += m * (lj // d)
    translation = tuple(t + w for t, w in zip(q.t, omega_sigma))
    zono = Zonotope(gens, translation, offset, budget)
    return FixedZonotope(g, sigma, q, zono)


def fixed_interior_count(g, sigma, omega=None, budget=None):
    return fixed_zonotope(g, sigma, omega, budget).interior_count()


class CharacterVector:
    """Integer-valued class function on an explicit permutation group."""

    def __init__(self, group, values):
        self.group = tuple(group)
        self.values = dict(values)
        if set(self.values) != set(self.group):
            raise ValueError("values must cover the group exactly")
        if len(self.group) <= 200:
            for g in self.group:
                for h in self.group:
                    conj = (h * g) * h.inverse()
                    if self.values[conj] != self.values[g]:
                        raise AssertionError("character is not a class function")

    def __getitem__(self, perm):
        return self.values[perm]

    @property
    def dimension(self):
        ident = next(p for p in self.group if p.is_identity())
        return self.values[ident]

    def orbit_count(self):
        """Average value over the group (Burnside); must be an integer."""
        total = sum(self.values.values())
        if total % len(self.group):
            raise AssertionError("Burnside average is not an integer")
        return total // len(self.group)


def _fixed_filter_count(points, sigma):
    cycles = sigma.cycles()
    count = 0
    for x in points:
        if all(len({x[a - 1] for a in cyc}) == 1 for cyc in cycles):
            count += 1
    return count


def permutation_character(g, omega=None, budget=None):
    """Character of the automorphism group acting on interior lattice
    points of the translated graphical zonotope.

    Each value is computed twice: by filtering the enumerated point list
    for invariance, and as the interior count of the fixed-locus zonotope;
    the two must agree.
    """
    aut = automorphisms(g)
    if omega is not None:
        omega = _check_invariant_omega(omega, aut, g.r)
    points = graphical_zonotope(g, omega, budget).lattice_points(interior=True)
    values = {}
    for sigma in aut:
        filtered = _fixed_filter_count(points, sigma)
        via_quotient = fixed_interior_count(g, sigma, omega, budget)
        if filtered != via_quotient:
            raise AssertionError(
                "fixed-point counts disagree for %r: %d vs %d"
                % (sigma, filtered, via_quotient))
        values[sigma] = filtered
    return CharacterVector(aut, values)


# -- halving sets of quotient faces -----------------------------------


def half_power_partition(sigma, cycle):
    """Partition of the vertex set pairing each vertex of an even cycle
    with its antipode under the half-power of the automorphism."""
    r = sigma.r
    l = len(cycle)
    if l % 2:
        raise ValueError("cycle has odd length")
    half = {}
    for a in cycle:
        b = a
        for _ in range(l // 2):
            b = sigma(b)
        half[a] = b
    blocks = []
    used = set()
    for a in cycle:
        if a not in used:
            blocks.append({a, half[a]})
            used |= {a, half[a]}
    for v in range(1, r + 1):
        if v not in used:
            blocks.append({v})
    return SetPartition(blocks)


def _join_partitions(parts, r):
    out = SetPartition.singletons(r)
    for p in parts:
        out = out.join(p)
    return out


@dataclass(frozen=True)
class ASetData:
    """Per-block halving data of a quotient flat: the 2-adic levels, the
    antipodal pairing partitions with odd multiplicity, their odd joins,
    the blocks whose averaged translation is a strict half-integer, and
    the finest invariant flat over a forest."""

    quotient: object
    block_partition: SetPartition          # flat of the quotient graph
    levels: tuple                          # min 2-adic valuation per block
    by_block: tuple                        # frozenset of pairings per block
    joins: frozenset                       # odd-size joins, one per block
    half_set: frozenset                    # joins with strict-half weight
    omega_blocks: tuple                    # summed weights per block
    r_flat: object                         # finest flat over the forest (or None)
    forest: tuple

    def joins_below(self, flat):
        return frozenset(p for p in self.joins if p.refines(flat))


def _block_a_data(g, q, block_partition, omega):
    """Halving data of a quotient flat computed in the graph g (whose
    automorphism quotient is q)."""
    sigma = q.sigma
    lengths = q.lengths
    levels = []
    by_block = []
    joins = set()
    half_set = set()
    omega_blocks = []
    omega_sigma = q.project_omega(omega) if omega is not None else None
    for block in block_partition.blocks:
        m = min(_two_adic(lengths[i - 1]) for i in block)
        levels.append(m)
        pairings = set()
        if m > 0:
            for i in sorted(block):
                l = lengths[i - 1]
                if _two_adic(l) != m:
                    continue
                cyc = q.cycles[i - 1]
                parities = set()
                for a in cyc:
                    b = a
                    for _ in range(l // 2):
                        b = sigma(b)
                    parities.add(g.y[a][b] % 2)
                if len(parities) != 1:
                    raise AssertionError("antipodal parity depends on the representative")
                if parities.pop() == 1:
                    pairings.add(half_power_partition(sigma, cyc))
        by_block.append(frozenset(pairings))
        if pairings and len(pairings) % 2 == 1:
            joins.add(_join_partitions(pairings, g.r))
        if omega_sigma is not None:
            wb = sum(lengths[i - 1] * omega_sigma[i - 1] for i in block)
            omega_blocks.append(wb)
            d = gcd(*(lengths[i - 1] for i in block))
            if (wb / d).denominator == 2:
                half_set.add(_join_partitions(pairings, g.r))
        else:
            omega_blocks.append(Fraction(0))
    return levels, by_block, frozenset(joins), frozenset(half_set), tuple(omega_blocks)


def edge_orbit(g, sigma, a, b):
    """Orbit of a vertex pair under powers of an automorphism."""
    if not g.y[a][b]:
        raise ValueError("pair (%d, %d) carries no edge" % (a, b))
    orbit = set()
    x, y = a, b
    while (min(x, y), max(x, y)) not in orbit:
        orbit.add((min(x, y), max(x, y)))
        x, y = sigma(x), sigma(y)
    return frozenset(orbit)


def quotient_orbit_edges(g, sigma):
    """Edges of the quotient graph as orbits of base edges: one record
    (i, j, orbit of pairs) per orbit joining distinct cycles i < j."""
    q = quotient(g, sigma)
    cycle_of = {}
    for idx, cyc in enumerate(q.cycles, start=1):
        for v in cyc:
            cycle_of[v] = idx
    seen = set()
    out = []
    for a, b in g.edge_pairs():
        if cycle_of[a] == cycle_of[b] or (a, b) in seen:
            continue
        orbit = edge_orbit(g, sigma, a, b)
        seen |= orbit
        i, j = sorted((cycle_of[a], cycle_of[b]))
        out.append((i, j, orbit))
    return out


def a_sets(g, sigma, forest, omega=None):
    """Halving data attached to a forest of the quotient graph.

    The quotient graph's edges are orbits of base edges; each forest
    element is a base vertex pair designating its orbit.  The connected
    components of the chosen orbits give the quotient flat whose
    per-block data is computed, together with the finest invariant flat
    containing the chosen lifts.  The block-count law (each quotient
    block lifts to exactly gcd of its cycle lengths blocks, permuted
    transitively) is asserted.
    """
    q = quotient(g, sigma)
    k = len(q.cycles)
    cycle_of = {}
    for idx, cyc in enumerate(q.cycles, start=1):
        for v in cyc:
            cycle_of[v] = idx
    orbits = []
    edges = []
    for pair in forest:
        a, b = pair
        if cycle_of.get(a) is None or cycle_of.get(b) is None \
                or cycle_of[a] == cycle_of[b]:
            raise ValueError("pair %r does not join two distinct cycles" % (pair,))
        orbit = edge_orbit(g, sigma, a, b)
        if orbit in orbits:
            raise ValueError("duplicate forest edges")
        orbits.append(orbit)
        edges.append(tuple(sorted((cycle_of[a], cycle_of[b]))))
    # acyclicity (parallel orbits between the same cycles already cycle)
    parent = list(range(k + 1))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i, j in edges:
        ri, rj = find(i), find(j)
        if ri == rj:
            raise ValueError("edge set contains a cycle; not a forest")
        parent[rj] = ri
    groups = {}
    for i in range(1, k + 1):
        groups.setdefault(find(i), set()).add(i)
    block_partition = SetPartition(groups.values())

    # finest invariant flat containing the chosen lifts
    lift_parent = list(range(g.r + 1))

    def lfind(a):
        while lift_parent[a] != a:
            lift_parent[a] = lift_parent[lift_parent[a]]
            a = lift_parent[a]
        return a

    for orbit in orbits:
        for a, b in orbit:
            ra, rb = lfind(a), lfind(b)
            if ra != rb:
                lift_parent[rb] = ra
    lifted = {}
    for v in range(1, g.r + 1):
        lifted.setdefault(lfind(v), set()).add(v)
    r_flat = SetPartition(lifted.values())

    levels, by_block, joins, half_set, omega_blocks = \
        _block_a_data(g, q, block_partition, omega)

    # block-count law: over each quotient block, the lifted flat has
    # exactly gcd(cycle lengths) blocks forming one sigma-orbit
    for block in block_partition.blocks:
        vertices = {a for i in block for a in q.cycles[i - 1]}
        r_blocks = {b for b in r_flat.blocks if b <= vertices}
        if {v for b in r_blocks for v in b} != vertices:
            raise AssertionError("lifted flat does not respect quotient blocks")
        d = gcd(*(q.lengths[i - 1] for i in block))
        if len(r_blocks) != d:
            raise AssertionError("block-count law fails: %d blocks, gcd %d"
                                 % (len(r_blocks), d))
        images = {frozenset(sigma(v) for v in b) for b in r_blocks}
        if images != r_blocks:
            raise AssertionError("automorphism does not permute the lifted blocks")
    return ASetData(q, block_partition, tuple(levels), tuple(by_block),
                    joins, half_set, omega_blocks, r_flat, tuple(orbits))


def quotient_image(flat, q):
    """Image of an invariant flat in the quotient: the partition of the
    quotient vertices by the blocks' cycle supports."""
    images = set()
    for b in flat.blocks:
        images.add(frozenset(i + 1 for i, cyc in enumerate(q.cycles)
                             if any(v in b for v in cyc)))
    total = sum(len(i) for i in images)
    if total != len(q.cycles):
        raise ValueError("flat is not invariant under the automorphism")
    return SetPartition(images)


def _direct_face_feasibility(g, q, flat, block_partition, omega):
    """Integer solvability of the supporting system of the quotient face:
    for every block, sum of l_i x_i must hit the block's translation
    (edge mass inside the restricted graph plus the averaged weights)."""
    sigma = q.sigma
    omega_sigma = q.project_omega(omega) if omega is not None else None
    lookup = {}
    for b in flat.blocks:
        for v in b:
            lookup[v] = b
    for block in block_partition.blocks:
        rhs = Fraction(0)
        coeffs = []
        for i in sorted(block):
            l = q.lengths[i - 1]
            coeffs.append(l)
            cyc = q.cycles[i - 1]
            inside = sum(g.y[a][b] for ai, a in enumerate(cyc)
                         for b in cyc[ai + 1:] if lookup[a] is lookup[b])
            rhs += inside
            if omega_sigma is not None:
                rhs += l * omega_sigma[i - 1]
        if rhs.denominator != 1:
            return False
        if int(rhs) % gcd(*coeffs):
            return False
    return True


def face_lattice_feasibility(g, sigma, flat, block_partition, omega=None):
    """Whether the affine span of the quotient face indexed by a flat of
    the quotient graph contains a lattice point, for the fixed locus of
    the zonotope of the restriction of g to ``flat`` (translated by
    ``omega`` when given).

    Decided by direct integer solvability of the supporting system and
    cross-checked against the halving-set criterion: without translation
    the face is integral exactly when no odd join sits below the flat;
    with translation exactly when every block's doubled weight is
    divisible by its cycle-length gcd and the odd joins of the restricted
    graph coincide with the strict-half blocks.
    """
    q = quotient(g, sigma)
    image = quotient_image(flat, q)
    if not block_partition.refines(image):
        raise ValueError("quotient image of the flat must coarsen the block partition")
    direct = _direct_face_feasibility(g, q, flat, block_partition, omega)

    if omega is None:
        _, _, joins, _, _ = _block_a_data(g, q, block_partition, None)
        criterion = not any(p.refines(flat) for p in joins)
    else:
        restricted = restrict(g, flat)
        _, _, joins, half_set, omega_blocks = \
            _block_a_data(restricted, quotient(restricted, sigma),
                          block_partition, omega)
        ok = True
        for block, wb in zip(block_partition.blocks, omega_blocks):
            d = gcd(*(q.lengths[i - 1] for i in block))
            if (2 * wb / d).denominator != 1:
                ok = False
        criterion = ok and joins == half_set
    if criterion != direct:
        raise AssertionError("halving-set criterion disagrees with direct solve")
    return direct


# -- the decomposition report ------------------------------------------


def homology_character(g, omega, sigma):
    """Trace of an automorphism on the top reduced homology of the order
    complex of proper non-integral flats: the signed Möbius value of the
    invariant subposet."""
    omega = _check_invariant_omega(omega, [sigma], g.r)
    fp = FlatPoset(g, omega)
    poset = fp.bounded_nonintegral(sigma)
    sign = -1 if (g.r - 3) % 2 else 1
    return sign * poset.mobius(poset.bottom(), poset.top())


def _upper_fixed_poset(fp, base, tau):
    elems = {t for t in fp.non_integral() if base.refines(t) and t.apply(tau) == t}
    elems.add(base)
    elems.add(SetPartition.top(fp.graph.r))
    ordered = [p for p in fp.elements if p in elems]
    return Poset(ordered, lambda x, y: x.refines(y))


@dataclass(frozen=True)
class FlatTerm:
    flat: SetPartition
    alpha: int
    mobius: int
    fixed_count: int
    value: int


@dataclass(frozen=True)
class SigmaRow:
    sigma: Permutation
    lhs: int
    rhs: int
    terms: tuple
    ok: bool


@dataclass(frozen=True)
class Summand:
    representative: SetPartition
    orbit_size: int
    stabilizer_order: int
    alpha: dict            # character of the sign twist on the stabilizer
    homology: dict         # character of the top homology on the stabilizer
    factor: dict           # fixed interior counts of the restricted zonotope
    dimension: int
    induced: dict          # induced character on the full group


@dataclass(frozen=True)
class DecompositionReport:
    graph: Multigraph
    omega: tuple
    translated_count: int
    base_count: int
    rows: tuple
    summands: tuple
    dimension_ok: bool
    characters_ok: bool

    @property
    def ok(self):
        return self.dimension_ok and self.characters_ok and all(r.ok for r in self.rows)

    def dimension_gap(self):
        return self.translated_count - self.base_count


def verify_decomposition(g, omega, budget=None):
    """Character-level verification that the interior lattice points of a
    translated graphical zonotope decompose, as a representation of the
    automorphism group, into the untranslated points plus one induced
    summand per orbit of non-integral flats.

    For every automorphism the invariant-count identity is checked:
    the difference of fixed interior counts (translated minus plain)
    must equal the signed sum over invariant non-integral flats of
    alpha * (-1)^(blocks-3) * mobius(flat, top) * fixed count of the
    restricted zonotope.  The summand list carries stabilizers, twist and
    homology characters, factor counts, and dimension bookkeeping.
    """
    if not g.is_connected():
        raise ValueError("decomposition verification needs a connected graph")
    aut = automorphisms(g)
    omega = _check_invariant_omega(omega, aut, g.r)
    if sum(omega).denominator != 1:
        raise ValueError("total weight must be an integer")
    fp = FlatPoset(g, omega)
    nonintegral = fp.non_integral()
    top = SetPartition.top(g.r)

    rows = []
    for sigma in aut:
        poset_sigma = fp.bounded_nonintegral(sigma)
        lhs = fixed_interior_count(g, sigma, omega, budget) \
            - fixed_interior_count(g, sigma, None, budget)
        terms = []
        rhs = 0
        for flat in poset_sigma.elements:
            if flat == top or is_omega_integral(flat, omega):
                continue
            alpha = alpha_character(g, flat, sigma)
            mob = poset_sigma.mobius(flat, top)
            sign = -1 if (flat.ell - 3) % 2 else 1
            fixed = fixed_interior_count(restrict(g, flat), sigma, None, budget)
            value = alpha * sign * mob * fixed
            terms.append(FlatTerm(flat, alpha, mob, fixed, value))
            rhs += value
        rows.append(SigmaRow(sigma, lhs, rhs, tuple(terms), lhs == rhs))

    # orbit summands
    seen = set()
    summands = []
    for flat in nonintegral:
        if flat in seen:
            continue
        orbit = {flat.apply(p) for p in aut}
        seen |= orbit
        rep = min(orbit, key=str)
        stab = [p for p in aut if rep.apply(p) == rep]
        alpha = {p: alpha_character(g, rep, p) for p in stab}
        sign = -1 if (rep.ell - 3) % 2 else 1
        homology = {}
        for p in stab:
            upper = _upper_fixed_poset(fp, rep, p)
            homology[p] = sign * upper.mobius(rep, top)
        factor = {p: fixed_interior_count(restrict(g, rep), p, None, budget)
                  for p in stab}
        ident = next(p for p in stab if p.is_identity())
        dim = (len(aut) // len(stab)) * homology[ident] * factor[ident]
        induced = {}
        for sigma in aut:
            total = 0
            for h in aut:
                conj = (h.inverse() * sigma) * h
                if conj in alpha:
                    total += alpha[conj] * homology[conj] * factor[conj]
            if total % len(stab):
                raise AssertionError("induced character is not integral")
            induced[sigma] = total // len(stab)
        summands.append(Summand(rep, len(orbit), len(stab), alpha, homology,
                                factor, dim, induced))

    char = permutation_character(g, omega, budget)
    base_char = permutation_character(g, None, budget)
    translated_count = char.dimension
    base_count = base_char.dimension
    dimension_ok = translated_count == base_count + sum(s.dimension for s in summands)
    characters_ok = all(
        char[sigma] == base_char[sigma] + sum(s.induced[sigma] for s in summands)
        for sigma in aut)
    return DecompositionReport(g, omega, translated_count, base_count,
                               tuple(rows), tuple(summands),
                               dimension_ok, characters_ok)


def forest_coefficient_identity(g, sigma, omega, budget=None):
    """Per-forest coefficient identity behind the invariant-count proof:
    for every forest of the quotient graph whose lifted flat is
    non-integral, the translated-minus-plain face feasibility difference
    equals the signed Möbius sum over invariant non-integral flats above
    the lifted flat, weighted by the face feasibility of their
    restrictions.  Returns (forest, lhs, rhs, ok) tuples.
    """
    if not is_automorphism(g, sigma):
        raise ValueError("permutation is not an automorphism")
    omega = _check_invariant_omega(omega, [sigma], g.r)
    q = quotient(g, sigma)
    fp = FlatPoset(g, omega)
    poset_sigma = fp.bounded_nonintegral(sigma)
    top = SetPartition.top(g.r)

    forests = [[]]
    for _, _, orbit in quotient_orbit_edges(g, sigma):
        rep = min(orbit)
        extended = []
        for f in forests:
            candidate = f + [rep]
            try:
                a_sets(g, sigma, candidate, omega)
            except ValueError:
                continue
            extended.append(candidate)
        forests.extend(extended)

    results = []
    for forest in forests:
        data = a_sets(g, sigma, forest, omega)
        if is_omega_integral(data.r_flat, omega):
            continue
        block_partition = data.block_partition
        lhs = int(_direct_face_feasibility(g, q, top, block_partition, omega)) \
            - int(_direct_face_feasibility(g, q, top, block_partition, None))
        rhs = 0
        for flat in poset_sigma.elements:
            if flat == top or is_omega_integral(flat, omega):
                continue
            if not data.r_flat.refines(flat):
                continue
            image = quotient_image(flat, q)
            a_image = _block_a_data(g, q, image, None)[2]
            feas = _direct_face_feasibility(g, q, flat, block_partition, None)
            if not feas:
                continue
            mob = poset_sigma.mobius(flat, top)
            rhs += (-1 if len(a_image) % 2 else 1) * mob
        results.append((tuple(forest), lhs, rhs, lhs == rhs))
    return results
