"""Zonotopes from integer vector configurations, exact lattice-point
enumeration, Ehrhart quasi-polynomials, and Möbius-inverted interior
counts.

A zonotope is the Minkowski sum of the segments [0, u] over a finite
multiset of nonzero integer vectors, optionally shifted by an integer
offset and a rational translation.  Interior always means the relative
interior inside the affine span.  All counts are exact; the brute-force
enumerator doubles as the oracle every formula is checked against.
"""

from fractions import Fraction
from itertools import product
from math import factorial, gcd

from . import lattices
from .posets import partitions_of_set


class Budget:
    """Enumeration limits: generator count for subset expansions and
    candidate-point volume for box scans."""

    __slots__ = ("max_generators", "max_points")

    def __init__(self, max_generators=24, max_points=10 ** 7):
        self.max_generators = max_generators
        self.max_points = max_points


DEFAULT_BUDGET = Budget()


class BudgetError(Exception):
    """Raised when an enumeration would exceed the configured budget."""


class ConfigFlat:
    """A flat of a vector configuration: all vectors lying in a common
    subspace, keyed by the reduced row echelon form of that subspace."""

    __slots__ = ("key", "rank", "members", "rref", "pivots")

    def __init__(self, key, rank, members, rref, pivots):
        self.key = key
        self.rank = rank
        self.members = members
        self.rref = rref
        self.pivots = pivots

    def contains_flat(self, other):
        return all(lattices.in_row_span(row, self.rref, self.pivots)
                   for row in other.rref)

    def describe(self):
        return "rank %d flat on %d vectors" % (self.rank, len(self.members))


class VectorConfig:
    """A finite multiset of nonzero integer vectors with flat data.

    Vectors are grouped into lines (primitive directions); a flat of rank
    k is a maximal subset spanning a k-dimensional subspace.
    """

    def __init__(self, vectors):
        self.vectors = tuple(tuple(int(x) for x in v) for v in vectors)
        if any(not any(v) for v in self.vectors):
            raise ValueError("zero vectors are not allowed")
        self.r = len(self.vectors[0]) if self.vectors else 0
        for v in self.vectors:
            if len(v) != self.r:
                raise ValueError("mixed dimensions")
        weights = {}
        for v in self.vectors:
            p = lattices.primitive(v)
            scale = next(abs(a) // abs(b) for a, b in zip(v, p) if b)
            weights[p] = weights.get(p, 0) + scale
        self.lines = sorted(weights)                 # primitive directions
        self.line_weight = weights                   # sum of |scales| per line
        self._flats = None
        self._dim = None
        self._independent = None

    @property
    def dim(self):
        if self._dim is None:
            rref, _ = lattices.rational_rref(self.vectors) if self.vectors else ((), ())
            self._dim = len(rref)
        return self._dim

    def independent_line_sets(self):
        """All linearly independent subsets of lines with their span data."""
        if self._independent is not None:
            return self._independent
        out = []

        def extend(subset, rows):
            rref, pivots = lattices.rational_rref(rows) if rows else ((), ())
            out.append((tuple(subset), rref, pivots))
            start = subset[-1] + 1 if subset else 0
            for j in range(start, len(self.lines)):
                if not lattices.in_row_span(self.lines[j], rref, pivots):
                    extend(subset + [j], rows + [self.lines[j]])

        extend([], [])
        self._independent = out
        return out

    def flats(self):
        """All flats, sorted by (rank, key).  The empty flat has rank 0."""
        if self._flats is not None:
            return self._flats
        spans = {}
        for subset, rref, pivots in self.independent_line_sets():
            if rref in spans:
                continue
            members = tuple(i for i, v in enumerate(self.vectors)
                            if lattices.in_row_span(v, rref, pivots))
            spans[rref] = ConfigFlat(rref, len(rref), members, rref, pivots)
        self._flats = sorted(spans.values(), key=lambda f: (f.rank, f.key))
        return self._flats


class Zonotope:
    """Minkowski sum of segments [0, u] over integer generators, shifted
    by an integer offset plus a rational translation."""

    def __init__(self, generators, omega=None, offset=None, budget=None):
        self.generators = tuple(tuple(int(x) for x in v) for v in generators)
        if self.generators:
            self.r = len(self.generators[0])
        elif omega is not None:
            self.r = len(tuple(omega))
        elif offset is not None:
            self.r = len(tuple(offset))
        else:
            raise ValueError("cannot infer the ambient dimension")
        self.omega = tuple(Fraction(v) for v in (omega if omega is not None
                                                 else [0] * self.r))
        self.offset = tuple(int(v) for v in (offset if offset is not None
                                             else [0] * self.r))
        if len(self.omega) != self.r or len(self.offset) != self.r:
            raise ValueError("translation length mismatch")
        self.budget = budget or DEFAULT_BUDGET
        self._config = None
        self._facets = None

    @property
    def config(self):
        if self._config is None:
            self._config = _shared_config(self.generators)
        return self._config

    @property
    def dim(self):
        return self.config.dim

    @property
    def translation(self):
        return tuple(Fraction(o) + w for o, w in zip(self.offset, self.omega))

    def translated(self, omega):
        return Zonotope(self.generators, omega, self.offset, self.budget)

    def facets(self):
        """Facet functionals: triples (normal, lo, hi) of an integer
        normal and the exact rational extremes of its values over the
        zonotope.  One entry per hyperplane flat of the configuration."""
        if self._facets is not None:
            return self._facets
        cfg = self.config
        d = cfg.dim
        out = []
        if d >= 1:
            hyperplanes = {}
            for subset, rref, pivots in cfg.independent_line_sets():
                if len(subset) == d - 1 and rref not in hyperplanes:
                    hyperplanes[rref] = self._normal_through(rref)
            for rref in sorted(hyperplanes):
                normal = hyperplanes[rref]
                base = lattices.dot(normal, self.translation)
                lo = base + sum(min(0, lattices.dot(normal, u)) for u in self.generators)
                hi = base + sum(max(0, lattices.dot(normal, u)) for u in self.generators)
                out.append((normal, lo, hi))
        self._facets = out
        return out

    def _normal_through(self, rref):
        # integer functional vanishing on the hyperplane flat but not on
        # the whole configuration
        for cand in lattices.nullspace(list(rref), self.r) if rref else \
                [tuple(Fraction(int(i == j)) for i in range(self.r))
                 for j in range(self.r)]:
            if any(lattices.dot(cand, u) for u in self.config.lines):
                return lattices.primitive(cand)
        raise AssertionError("no transverse normal found")

    # -- lattice point enumeration -------------------------------------

    def lattice_points(self, interior=False):
        """All lattice points of the zonotope (relative interior points
        when ``interior``), sorted lexicographically."""
        if len(self.generators) > self.budget.max_generators:
            raise BudgetError("too many generators (%d > %d)"
                              % (len(self.generators), self.budget.max_generators))
        data = lattices.affine_lattice(self.translation, list(self.generators), self.r)
        if data is None:
            return []
        x0, basis, dual = data
        if not basis:
            return [x0]
        ranges = []
        total = 1
        for row in dual:
            base = lattices.dot(row, self.translation)
            lo = base + sum(min(0, lattices.dot(row, u)) for u in self.generators)
            hi = base + sum(max(0, lattices.dot(row, u)) for u in self.generators)
            z0 = lattices.dot(row, x0)
            lo_i = -((-lo.numerator) // lo.denominator) - z0     # ceil(lo) - z0
            hi_i = (hi.numerator // hi.denominator) - z0         # floor(hi) - z0
            if hi_i < lo_i:
                return []
            ranges.append(range(lo_i, hi_i + 1))
            total *= len(ranges[-1])
            if total > self.budget.max_points:
                raise BudgetError("bounding box has %d candidates (budget %d)"
                                  % (total, self.budget.max_points))
        checks = []
        for normal, lo, hi in self.facets():
            if interior:
                lo_i = (lo.numerator // lo.denominator) + 1       # floor + 1
                hi_i = -((-hi.numerator) // hi.denominator) - 1   # ceil - 1
            else:
                lo_i = -((-lo.numerator) // lo.denominator)
                hi_i = hi.numerator // hi.denominator
            checks.append((normal, lo_i, hi_i))
        points = []
        for zs in product(*ranges):
            x = list(x0)
            for z, col in zip(zs, basis):
                if z:
                    for i in range(self.r):
                        x[i] += z * col[i]
            ok = True
            for normal, lo_i, hi_i in checks:
                v = sum(n * xi for n, xi in zip(normal, x) if n)
                if v < lo_i or v > hi_i:
                    ok = False
                    break
            if ok:
                points.append(tuple(x))
        points.sort()
        return points

    def interior_count(self):
        return len(self.lattice_points(interior=True))

    def closed_count(self):
        return len(self.lattice_points(interior=False))


_CONFIG_CACHE = {}


def _shared_config(generators):
    key = tuple(sorted(generators))
    cfg = _CONFIG_CACHE.get(key)
    if cfg is None:
        cfg = VectorConfig(generators)
        if len(_CONFIG_CACHE) > 512:
            _CONFIG_CACHE.clear()
        _CONFIG_CACHE[key] = cfg
    return cfg


def rvol(vectors):
    """Relative volume of the parallelepiped of independent integer
    vectors: the index of the lattice they generate inside the full
    lattice of their span."""
    return lattices.rvol(vectors)


def graphical_zonotope(g, omega=None, budget=None):
    """Zonotope of a multigraph: one segment per edge joining the two
    endpoint basis vectors.

    Generators are the differences e_b - e_a over edges (a < b); the sum
    of the lower endpoints is kept as an integer offset so the polytope
    is the genuine Minkowski sum of the segments [e_a, e_b].  A single
    vertex yields the point e_1.
    """
    gens = []
    offset = [0] * g.r
    for a, b in g.edge_pairs():
        m = g.y[a][b]
        vec = [0] * g.r
        vec[a - 1] = -1
        vec[b - 1] = 1
        gens.extend([tuple(vec)] * m)
        offset[a - 1] += m
    if g.r == 1:
        offset[0] = 1
    return Zonotope(gens, omega, offset, budget)


def inequality_description(g):
    """Exact halfspace description of a graphical zonotope: a pair
    (total, bounds) so that its points are exactly the x with
    sum(x) == total and sum(x over K) >= bounds[K] for every proper
    vertex subset K, where bounds[K] counts the edges inside K."""
    verts = list(g.vertices())
    total = g.edge_count()
    bounds = {}
    for mask in range(1, 2 ** len(verts) - 1):
        subset = frozenset(v for i, v in enumerate(verts) if mask >> i & 1)
        bounds[subset] = sum(g.y[a][b] for a in subset for b in subset if a < b)
    return total, bounds


def interior_lattice_points(z):
    """Brute-force enumeration of the interior lattice points; this is the
    oracle all counting formulas are measured against."""
    return z.lattice_points(interior=True)


class QuasiPolynomial:
    """Ehrhart quasi-polynomial of a translated zonotope, stored as one
    term per flat: a coefficient, the flat's rank as the degree, and the
    period of the dilation classes in which the dilated translation keeps
    the flat's affine span on the lattice."""

    __slots__ = ("terms", "r")

    def __init__(self, terms, r):
        self.terms = tuple(terms)     # (flat_key, rank, coeff, period)
        self.r = r

    def evaluate(self, t):
        t = int(t)
        return sum(c * t ** rank for _, rank, c, period in self.terms
                   if t % period == 0)

    def period(self):
        out = 1
        for _, _, _, p in self.terms:
            out = out * p // gcd(out, p)
        return out

    def is_polynomial(self):
        return all(p == 1 for _, _, _, p in self.terms)

    def as_polynomial(self):
        from .graphs import Polynomial
        if not self.is_polynomial():
            raise ValueError("quasi-polynomial has a nontrivial period")
        deg = max((rank for _, rank, _, _ in self.terms), default=0)
        coeffs = [0] * (deg + 1)
        for _, rank, c, _ in self.terms:
            coeffs[rank] += c
        return Polynomial(coeffs)


def ehrhart_qp(z):
    """Ehrhart quasi-polynomial of the dilations t*(Z + omega): the sum
    over independent generator subsets W of rvol(W) * t^|W|, kept only in
    dilations where t*omega plus W's span meets the lattice.  Terms are
    grouped by the flat spanned by W; integral offsets are dropped as
    they never change lattice counts."""
    cfg = z.config
    if len(z.generators) > z.budget.max_generators:
        raise BudgetError("too many generators (%d > %d)"
                          % (len(z.generators), z.budget.max_generators))
    coeff = {}
    for subset, rref, pivots in cfg.independent_line_sets():
        vectors = [cfg.lines[i] for i in subset]
        weight = 1
        for i in subset:
            weight *= cfg.line_weight[cfg.lines[i]]
        volume = lattices.rvol(vectors) if vectors else 1
        coeff[rref] = coeff.get(rref, 0) + weight * volume
    flats_by_key = {f.key: f for f in cfg.flats()}
    terms = []
    for key in sorted(coeff):
        flat = flats_by_key[key]
        span_vectors = [cfg.vectors[i] for i in flat.members]
        period = lattices.delta_period(z.omega, span_vectors, z.r)
        terms.append((key, flat.rank, coeff[key], period))
    return QuasiPolynomial(terms, z.r)


def count_via_reciprocity(z):
    """Interior count through reciprocity: (-1)^dim times the Ehrhart
    quasi-polynomial evaluated at -1."""
    qp = ehrhart_qp(z)
    sign = -1 if z.dim % 2 else 1
    return sign * qp.evaluate(-1)


def mobius_count(z):
    """Interior count by Möbius inversion over the flat poset.

    Returns (total, rows); each row holds (flat, coefficient, interior
    count of the flat's untranslated sub-zonotope).  The coefficient of a
    flat S is (-1)^(rank U - rank S) times the sum of mu(S, T) over the
    flats T >= S whose span translated by omega meets the lattice.
    """
    cfg = z.config
    qp = ehrhart_qp(z)
    coeff_by_key = {key: c for key, _, c, _ in qp.terms}
    period_by_key = {key: p for key, _, _, p in qp.terms}
    flats = cfg.flats()
    uppers = {a.key: {b.key for b in flats if b.contains_flat(a)} for a in flats}

    memo = {}

    def mob(a, b):
        if a == b:
            return 1
        key = (a, b)
        if key not in memo:
            memo[key] = -sum(mob(a, mid) for mid in uppers[a]
                             if mid != b and b in uppers[mid])
        return memo[key]

    rank_of = {f.key: f.rank for f in flats}

    def interior_of(flat):
        # reciprocity on the flat's own sub-zonotope, reusing the
        # coefficient table: every lower flat contributes its term at -1
        total = 0
        for other in flats:
            if flat.key in uppers[other.key]:
                c = coeff_by_key.get(other.key, 0)
                total += c if other.rank % 2 == 0 else -c
        return total if flat.rank % 2 == 0 else -total

    top_rank = cfg.dim
    rows = []
    total = 0
    for flat in flats:
        acc = sum(mob(flat.key, up) for up in uppers[flat.key]
                  if period_by_key[up] == 1)
        if acc == 0:
            continue
        sign = -1 if (top_rank - flat.rank) % 2 else 1
        inner = interior_of(flat)
        rows.append((flat, sign * acc, inner))
        total += sign * acc * inner
    return total, rows


def _l_coefficient(block_sums):
    """Signed factorial sum over the integral set partitions of a tuple of
    rational weights."""
    total = 0
    for lam in partitions_of_set(len(block_sums)):
        sums = [sum(block_sums[i - 1] for i in b) for b in lam.blocks]
        if all(s.denominator == 1 for s in sums):
            term = 1
            for b in lam.blocks:
                term *= factorial(len(b) - 1)
            total += term if (lam.ell - 1) % 2 == 0 else -term
    return total


_GRAPH_COUNT_CACHE = {}


def graphical_interior_count(g, omega=None, budget=None):
    """Interior count of a translated graphical zonotope via reciprocity
    (cached per graph and translation)."""
    omega = tuple(Fraction(v) for v in (omega if omega is not None else [0] * g.r))
    key = (g.key(), omega)
    if key not in _GRAPH_COUNT_CACHE:
        z = graphical_zonotope(g, omega, budget)
        _GRAPH_COUNT_CACHE[key] = count_via_reciprocity(z)
    return _GRAPH_COUNT_CACHE[key]


def graphical_count(g, omega, budget=None):
    """Interior count of a translated graphical zonotope of complete type,
    expanded over set partitions of the vertices.

    Returns (total, rows) with one row per partition S carrying a nonzero
    coefficient: the signed factorial sum attached to S's block weights,
    and the product of the interior counts of the blocks' induced
    zonotopes.  Requires every vertex pair to carry at least one edge.
    """
    if not g.is_complete_type():
        raise ValueError("graph is not of complete type; use mobius_count")
    omega = tuple(Fraction(v) for v in omega)
    if len(omega) != g.r:
        raise ValueError("translation has wrong length")
    rows = []
    total = 0
    for part in partitions_of_set(g.r):
        coeff = _l_coefficient(part.omega_sums(omega))
        if coeff == 0:
            continue
        prod = 1
        for b in part.blocks:
            prod *= graphical_interior_count(g.induced(b), None, budget)
        rows.append((part, coeff, prod))
        total += coeff * prod
    return total, rows


def typed_count_table(n, mult, omega_scale):
    """Count data for the uniform complete multigraph on n vertices with a
    constant translation of omega_scale/n per coordinate, aggregated over
    integer partition shapes: rows (shape, branches, coefficient,
    factor_product), whose weighted sum is the interior count."""
    from .graphs import Multigraph
    from .hitchin import branch_count, partitions_of
    g = Multigraph.complete(n, mult)
    omega = tuple(Fraction(omega_scale, n) for _ in range(n))
    total, rows = graphical_count(g, omega)
    coeff_by_shape = {}
    for part, coeff, prod in rows:
        shape = part.shape()
        previous = coeff_by_shape.setdefault(shape, coeff)
        if previous != coeff:
            raise AssertionError("type grouping failed for shape %s" % (shape,))
    table = []
    for shape in partitions_of(n):
        coeff = coeff_by_shape.get(shape)
        if coeff is None:
            coeff = _l_coefficient(tuple(Fraction(omega_scale * p, n) for p in shape))
        prod = 1
        for p in shape:
            prod *= graphical_interior_count(Multigraph.complete(p, mult))
        table.append((shape, branch_count(shape), coeff, prod))
    table.sort(key=lambda row: (len(row[0]), [-p for p in row[0]]))
    return total, table
