"""Loopless multigraphs on a labelled vertex set and their constructions:
automorphism groups, contractions, restrictions, quotients by an
automorphism, dual graphs of integer partitions, and the Tutte/Ehrhart
polynomials of complete graphs.

Vertices are labelled 1..r throughout.  Edge multiplicities live in a
symmetric matrix with zero diagonal.
"""

from fractions import Fraction
from math import comb, lcm

AUTOMORPHISM_CAP = 8


class Multigraph:
    """Loopless multigraph given by a symmetric multiplicity matrix.

    ``mult(a, b)`` is the number of edges between vertices a and b
    (1-based labels).  Instances are immutable and hashable.
    """

    __slots__ = ("r", "y", "_hash")

    def __init__(self, r, y):
        if r < 1:
            raise ValueError("vertex count must be positive")
        table = [[0] * (r + 1) for _ in range(r + 1)]
        for a in range(1, r + 1):
            for b in range(1, r + 1):
                v = y[a][b]
                if v < 0 or not isinstance(v, int):
                    raise ValueError("multiplicities must be nonnegative integers")
                if a == b and v:
                    raise ValueError("loops are not allowed")
                table[a][b] = v
        for a in range(1, r + 1):
            for b in range(a + 1, r + 1):
                if table[a][b] != table[b][a]:
                    raise ValueError("multiplicity matrix must be symmetric")
        self.r = r
        self.y = tuple(tuple(row) for row in table)
        self._hash = hash((r, self.y))

    @classmethod
    def from_edges(cls, r, edges):
        """Build from (a, b, multiplicity) triples; multiplicity defaults to 1."""
        y = [[0] * (r + 1) for _ in range(r + 1)]
        for edge in edges:
            a, b = edge[0], edge[1]
            m = edge[2] if len(edge) > 2 else 1
            if not (1 <= a <= r and 1 <= b <= r) or a == b:
                raise ValueError("bad edge %r" % (edge,))
            y[a][b] += m
            y[b][a] += m
        return cls(r, y)

    @classmethod
    def complete(cls, n, mult=1):
        y = [[0 if a == b else mult for b in range(n + 1)] for a in range(n + 1)]
        for a in range(n + 1):
            y[a][0] = y[0][a] = 0
        return cls(n, y)

    @classmethod
    def from_json(cls, obj):
        """Graph literal: {"r": int, "edges": [[a, b, mult], ...]} or the
        complete shorthand {"complete": n, "mult": e}."""
        if "complete" in obj:
            return cls.complete(int(obj["complete"]), int(obj.get("mult", 1)))
        return cls.from_edges(int(obj["r"]), obj.get("edges", []))

    def to_json(self):
        return {"r": self.r, "edges": [[a, b, self.y[a][b]] for a, b in self.edge_pairs()]}

    def mult(self, a, b):
        return self.y[a][b]

    def vertices(self):
        return range(1, self.r + 1)

    def edge_pairs(self):
        """Sorted distinct vertex pairs carrying at least one edge."""
        return [(a, b) for a in range(1, self.r + 1)
                for b in range(a + 1, self.r + 1) if self.y[a][b]]

    def edge_count(self):
        return sum(self.y[a][b] for a, b in self.edge_pairs())

    def is_complete_type(self):
        return all(self.y[a][b] >= 1 for a in range(1, self.r + 1)
                   for b in range(a + 1, self.r + 1))

    def components(self):
        """Connected components as frozensets of vertices, sorted by minimum."""
        seen = set()
        out = []
        for start in range(1, self.r + 1):
            if start in seen:
                continue
            comp = {start}
            stack = [start]
            while stack:
                a = stack.pop()
                for b in range(1, self.r + 1):
                    if self.y[a][b] and b not in comp:
                        comp.add(b)
                        stack.append(b)
            seen |= comp
            out.append(frozenset(comp))
        return out

    def is_connected(self):
        return len(self.components()) == 1

    def block_connected(self, block):
        """Whether a set of vertices induces a connected subgraph."""
        block = set(block)
        if not block:
            return False
        start = next(iter(block))
        comp = {start}
        stack = [start]
        while stack:
            a = stack.pop()
            for b in block:
                if b not in comp and self.y[a][b]:
                    comp.add(b)
                    stack.append(b)
        return comp == block

    def induced(self, block):
        """Induced subgraph on a vertex subset, relabelled 1..k by sorted order."""
        verts = sorted(block)
        k = len(verts)
        y = [[0] * (k + 1) for _ in range(k + 1)]
        for i in range(k):
            for j in range(k):
                if i != j:
                    y[i + 1][j + 1] = self.y[verts[i]][verts[j]]
        return Multigraph(k, y)

    def key(self):
        return (self.r, self.y)

    def __eq__(self, other):
        return isinstance(other, Multigraph) and self.r == other.r and self.y == other.y

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "Multigraph(r=%d, edges=%r)" % (
            self.r, [(a, b, self.y[a][b]) for a, b in self.edge_pairs()])


class Permutation:
    """A bijection of 1..r with cycle bookkeeping."""

    __slots__ = ("map",)

    def __init__(self, images):
        images = tuple(images)
        r = len(images)
        if sorted(images) != list(range(1, r + 1)):
            raise ValueError("not a bijection of 1..%d" % r)
        self.map = (0,) + images

    @classmethod
    def identity(cls, r):
        return cls(range(1, r + 1))

    @classmethod
    def from_cycles(cls, r, cycles):
        images = list(range(r + 1))
        for cyc in cycles:
            for i, a in enumerate(cyc):
                images[a] = cyc[(i + 1) % len(cyc)]
        return cls(images[1:])

    @property
    def r(self):
        return len(self.map) - 1

    def __call__(self, a):
        return self.map[a]

    def __mul__(self, other):
        """Composition: (p * q)(a) = p(q(a))."""
        return Permutation(tuple(self.map[other.map[a]] for a in range(1, self.r + 1)))

    def inverse(self):
        inv = [0] * (self.r + 1)
        for a in range(1, self.r + 1):
            inv[self.map[a]] = a
        return Permutation(inv[1:])

    def is_identity(self):
        return all(self.map[a] == a for a in range(1, self.r + 1))

    def cycles(self):
        """Cycles as tuples starting at their minimum, sorted by minimum."""
        seen = set()
        out = []
        for a in range(1, self.r + 1):
            if a in seen:
                continue
            cyc = [a]
            b = self.map[a]
            while b != a:
                cyc.append(b)
                b = self.map[b]
            seen |= set(cyc)
            out.append(tuple(cyc))
        return out

    def cycle_lengths(self):
        return tuple(len(c) for c in self.cycles())

    def sign(self):
        return -1 if (self.r - len(self.cycles())) % 2 else 1

    def apply_set(self, block):
        return frozenset(self.map[a] for a in block)

    def images(self):
        return self.map[1:]

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.map == other.map

    def __hash__(self):
        return hash(self.map)

    def __repr__(self):
        parts = ["(%s)" % " ".join(map(str, c)) for c in self.cycles() if len(c) > 1]
        return "".join(parts) if parts else "id"


def is_automorphism(g, perm):
    if perm.r != g.r:
        return False
    return all(g.y[perm(a)][perm(b)] == g.y[a][b]
               for a in range(1, g.r + 1) for b in range(a + 1, g.r + 1))


def automorphisms(g, cap=AUTOMORPHISM_CAP):
    """All vertex permutations preserving every edge multiplicity.

    Exhaustive backtracking over the symmetric group with pruning on the
    multiset of incident multiplicities; refuses graphs above ``cap``
    vertices.  The result is sorted by image tuple and always forms a
    group containing the identity.
    """
    if g.r > cap:
        raise ValueError("automorphism search capped at %d vertices" % cap)
    profile = {a: tuple(sorted(g.y[a][b] for b in range(1, g.r + 1) if b != a))
               for a in range(1, g.r + 1)}
    found = []
    image = [0] * (g.r + 1)
    used = [False] * (g.r + 1)

    def place(a):
        if a > g.r:
            found.append(Permutation(image[1:]))
            return
        for b in range(1, g.r + 1):
            if used[b] or profile[b] != profile[a]:
                continue
            if any(g.y[image[i]][b] != g.y[i][a] for i in range(1, a)):
                continue
            image[a] = b
            used[b] = True
            place(a + 1)
            used[b] = False
        image[a] = 0

    place(1)
    found.sort(key=lambda p: p.map)
    return found


def _blocks_of(partition):
    blocks = getattr(partition, "blocks", partition)
    return [frozenset(b) for b in blocks]


def contract(g, partition):
    """Contract every edge inside the blocks of a flat and delete loops.

    Blocks must induce connected subgraphs; the contracted vertices are the
    blocks in order of their minimum original label.  The multiplicity
    between two contracted vertices is the total multiplicity between the
    corresponding blocks.
    """
    blocks = sorted(_blocks_of(partition), key=min)
    if sorted(v for b in blocks for v in b) != list(range(1, g.r + 1)):
        raise ValueError("not a partition of the vertex set")
    for b in blocks:
        if not g.block_connected(b):
            raise ValueError("block %s is not connected; not a flat" % sorted(b))
    k = len(blocks)
    y = [[0] * (k + 1) for _ in range(k + 1)]
    for i in range(k):
        for j in range(i + 1, k):
            m = sum(g.y[a][b] for a in blocks[i] for b in blocks[j])
            y[i + 1][j + 1] = y[j + 1][i + 1] = m
    return Multigraph(k, y)


def restrict(g, partition):
    """Remove every edge whose endpoints lie in different blocks."""
    blocks = _blocks_of(partition)
    if sorted(v for b in blocks for v in b) != list(range(1, g.r + 1)):
        raise ValueError("not a partition of the vertex set")
    block_of = {}
    for b in blocks:
        for v in b:
            block_of[v] = b
    y = [[0] * (g.r + 1) for _ in range(g.r + 1)]
    for a in range(1, g.r + 1):
        for b in range(1, g.r + 1):
            if a != b and block_of[a] is block_of[b]:
                y[a][b] = g.y[a][b]
    return Multigraph(g.r, y)


class Quotient:
    """Quotient of a multigraph by an automorphism.

    Vertices of the quotient are the cycles of the automorphism, ordered by
    their minimum label.  The multiplicity between cycles i and j is
    x_ij = (1/lcm(l_i, l_j)) * sum of multiplicities between the cycles,
    always an integer.  Each cycle carries a translation coordinate
    t_i = (1/l_i) * (total multiplicity inside the cycle), always a
    half-integer; t_i is an integer exactly when l_i is odd or the
    antipodal multiplicity inside the cycle is even.
    """

    __slots__ = ("base", "sigma", "cycles", "lengths", "graph", "t")

    def __init__(self, base, sigma):
        if not is_automorphism(base, sigma):
            raise ValueError("permutation is not an automorphism")
        self.base = base
        self.sigma = sigma
        self.cycles = tuple(sigma.cycles())
        self.lengths = tuple(len(c) for c in self.cycles)
        k = len(self.cycles)
        y = [[0] * (k + 1) for _ in range(k + 1)]
        for i in range(k):
            for j in range(i + 1, k):
                total = sum(base.y[a][b] for a in self.cycles[i] for b in self.cycles[j])
                m = lcm(self.lengths[i], self.lengths[j])
                if total % m:
                    raise AssertionError("quotient multiplicity is not integral")
                y[i + 1][j + 1] = y[j + 1][i + 1] = total // m
        self.graph = Multigraph(k, y)
        t = []
        for i, cyc in enumerate(self.cycles):
            inside = sum(base.y[a][b] for ai, a in enumerate(cyc)
                         for b in cyc[ai + 1:])
            val = Fraction(inside, self.lengths[i])
            if (2 * val).denominator != 1:
                raise AssertionError("translation coordinate is not a half-integer")
            t.append(val)
        self.t = tuple(t)
        for i, cyc in enumerate(self.cycles):
            li = self.lengths[i]
            integral = self.t[i].denominator == 1
            if li % 2:
                expected = True
            else:
                a = cyc[0]
                b = a
                for _ in range(li // 2):
                    b = sigma(b)
                expected = base.y[a][b] % 2 == 0
            if integral != expected:
                raise AssertionError("half-integrality parity rule violated")

    def x(self, i, j):
        return self.graph.y[i][j]

    def project_omega(self, omega):
        """Average a sigma-invariant rational vector over the cycles."""
        omega = [Fraction(v) for v in omega]
        if len(omega) != self.base.r:
            raise ValueError("translation vector has wrong length")
        out = []
        for cyc in self.cycles:
            vals = {omega[a - 1] for a in cyc}
            if len(vals) != 1:
                raise ValueError("vector is not invariant under the automorphism")
            out.append(vals.pop())
        return tuple(out)


def quotient(g, sigma):
    return Quotient(g, sigma)


def dual_graph(parts, genus):
    """Graph with one vertex per part and n_i * n_j * (2g - 2) edges
    between distinct parts; defined for genus >= 2."""
    parts = sorted(parts, reverse=True)
    if not parts or any(p < 1 for p in parts):
        raise ValueError("parts must be positive")
    if genus < 2:
        raise ValueError("genus must be at least 2")
    k = len(parts)
    y = [[0] * (k + 1) for _ in range(k + 1)]
    for i in range(k):
        for j in range(i + 1, k):
            m = parts[i] * parts[j] * (2 * genus - 2)
            y[i + 1][j + 1] = y[j + 1][i + 1] = m
    return Multigraph(k, y)


class BivariatePolynomial:
    """Polynomial in two variables with integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {k: v for k, v in (coeffs or {}).items() if v}

    @classmethod
    def monomial(cls, i, j, c=1):
        return cls({(i, j): c})

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return BivariatePolynomial(out)

    def __mul__(self, other):
        if isinstance(other, int):
            return BivariatePolynomial({k: v * other for k, v in self.coeffs.items()})
        out = {}
        for (i, j), u in self.coeffs.items():
            for (k, l), v in other.coeffs.items():
                key = (i + k, j + l)
                out[key] = out.get(key, 0) + u * v
        return BivariatePolynomial(out)

    __rmul__ = __mul__

    def coeff(self, i, j):
        return self.coeffs.get((i, j), 0)

    def evaluate(self, x, y):
        return sum(c * x ** i * y ** j for (i, j), c in self.coeffs.items())

    def set_y(self, value):
        """Collapse the second variable, returning a univariate polynomial."""
        out = {}
        for (i, j), c in self.coeffs.items():
            out[i] = out.get(i, 0) + c * value ** j
        deg = max(out, default=0)
        return Polynomial([out.get(i, 0) for i in range(deg + 1)])

    def __eq__(self, other):
        return isinstance(other, BivariatePolynomial) and self.coeffs == other.coeffs

    def __str__(self):
        return render_bivariate(self)

    __repr__ = __str__


def render_bivariate(poly, xvar="x", yvar="y"):
    if not poly.coeffs:
        return "0"
    def mono(i, j, c):
        parts = []
        if c != 1 or (i == 0 and j == 0):
            parts.append(str(c))
        if i:
            parts.append(xvar if i == 1 else "%s^%d" % (xvar, i))
        if j:
            parts.append(yvar if j == 1 else "%s^%d" % (yvar, j))
        return "".join(parts)
    keys = sorted(poly.coeffs, key=lambda k: (-k[0], -k[1]))
    out = mono(*keys[0], poly.coeffs[keys[0]])
    for k in keys[1:]:
        c = poly.coeffs[k]
        out += ("+" if c > 0 else "-") + mono(*k, abs(c))
    return out


class Polynomial:
    """Univariate polynomial with exact coefficients (ints or Fractions)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @classmethod
    def monomial(cls, degree, c=1):
        return cls([0] * degree + [c])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial([
            (self.coeffs[i] if i < len(self.coeffs) else 0)
            + (other.coeffs[i] if i < len(other.coeffs) else 0)
            for i in range(n)])

    def __mul__(self, other):
        if isinstance(other, int):
            return Polynomial([c * other for c in self.coeffs])
        out = [0] * (len(self.coeffs) + len(other.coeffs))
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        out = Polynomial([1])
        for _ in range(n):
            out = out * self
        return out

    def evaluate(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def coeff(self, i):
        return self.coeffs[i] if i < len(self.coeffs) else 0

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def render(self, var="q"):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeff(i)
            if not c:
                continue
            if i == 0:
                body = str(abs(c))
            else:
                head = "" if abs(c) == 1 else str(abs(c))
                body = head + (var if i == 1 else "%s^%d" % (var, i))
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("-" if c < 0 else "+") + body)
        return "".join(parts)

    def __str__(self):
        return self.render()

    __repr__ = __str__


_TUTTE_CACHE = [BivariatePolynomial({(0, 0): 1})]


def tutte_complete(m):
    """Tutte polynomial of the complete graph on m+1 vertices.

    Computed by the classical convolution recursion
    T_m = sum_k C(m-1, k-1) (x + y + ... + y^(k-1)) T_{k-1}(1, y) T_{m-k},
    with T_0 = 1.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    while len(_TUTTE_CACHE) <= m:
        n = len(_TUTTE_CACHE)
        total = BivariatePolynomial()
        for k in range(1, n + 1):
            factor = BivariatePolynomial.monomial(1, 0)
            for j in range(1, k):
                factor = factor + BivariatePolynomial.monomial(0, j)
            tk1 = _TUTTE_CACHE[k - 1]
            tk1_at_x1 = BivariatePolynomial(
                {(0, j): sum(c for (i, jj), c in tk1.coeffs.items() if jj == j)
                 for j in {jj for (_, jj) in tk1.coeffs}})
            term = comb(n - 1, k - 1) * factor * tk1_at_x1 * _TUTTE_CACHE[n - k]
            total = total + term
        _TUTTE_CACHE.append(total)
    return _TUTTE_CACHE[m]


def ehrhart_complete(m):
    """Ehrhart polynomial of the zonotope of the complete graph on m vertices,
    obtained from the Tutte polynomial as q^(m-1) T_{m-1}(1 + 1/q, 1)."""
    if m < 1:
        raise ValueError("m must be positive")
    t = tutte_complete(m - 1).set_y(1)
    # q^(m-1) * sum_i u_i (1 + 1/q)^i  =  sum_i u_i q^(m-1-i) (q+1)^i
    out = Polynomial([])
    qp1 = Polynomial([1, 1])
    for i, u in enumerate(t.coeffs):
        if u:
            out = out + u * (Polynomial.monomial(m - 1 - i) * qp1 ** i)
    if any(not isinstance(c, int) and c.denominator != 1 for c in out.coeffs):
        raise AssertionError("denominators failed to clear")
    return out
