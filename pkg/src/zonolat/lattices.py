"""Exact integer and rational linear algebra.

Smith reduction with row transforms, lattice saturations, integer
feasibility of rational affine subspaces, and reduced row echelon forms
over the rationals.  All arithmetic uses Python ints and
``fractions.Fraction``; nothing here touches floating point.
"""

from fractions import Fraction
from math import gcd


def _identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


class SmithData:
    """Row-side data of a diagonalization D = P * M * Q.

    P and its inverse are unimodular; the column transform Q is discarded.
    ``diag`` holds the positive diagonal entries of D (one per unit of
    rank).  The first ``rank`` columns of ``pinv`` form a basis of the
    saturation ``span(M) ∩ Z^n`` of the column span of M, and the first
    ``rank`` rows of ``p`` are dual coordinates on that lattice.
    """

    __slots__ = ("p", "pinv", "diag", "rank", "nrows")

    def __init__(self, p, pinv, diag, nrows):
        self.p = p
        self.pinv = pinv
        self.diag = diag
        self.rank = len(diag)
        self.nrows = nrows

    def saturation_basis(self):
        return [
            tuple(self.pinv[i][j] for i in range(self.nrows))
            for j in range(self.rank)
        ]

    def dual_rows(self):
        return [tuple(self.p[i]) for i in range(self.rank)]

    def quotient_coords(self, vec):
        """Coordinates of ``vec`` transverse to the column span.

        The affine subspace vec + span(M) meets Z^n exactly when every
        returned coordinate is an integer.
        """
        return tuple(
            sum(self.p[i][j] * vec[j] for j in range(self.nrows))
            for i in range(self.rank, self.nrows)
        )


def smith(matrix, nrows, ncols):
    """Diagonalize an integer matrix, tracking only row transforms."""
    a = [[matrix[i][j] for j in range(ncols)] for i in range(nrows)]
    p = _identity(nrows)
    pinv = _identity(nrows)

    def swap_rows(i, j):
        if i == j:
            return
        a[i], a[j] = a[j], a[i]
        p[i], p[j] = p[j], p[i]
        for row in pinv:
            row[i], row[j] = row[j], row[i]

    def add_row(i, j, q):
        # row_i -= q * row_j ; inverse op recorded on the columns of pinv
        if q == 0:
            return
        ai, aj = a[i], a[j]
        for k in range(ncols):
            ai[k] -= q * aj[k]
        pi, pj = p[i], p[j]
        for k in range(nrows):
            pi[k] -= q * pj[k]
        for row in pinv:
            row[j] += q * row[i]

    def negate_row(i):
        a[i] = [-v for v in a[i]]
        p[i] = [-v for v in p[i]]
        for row in pinv:
            row[i] = -row[i]

    def swap_cols(i, j):
        if i == j:
            return
        for row in a:
            row[i], row[j] = row[j], row[i]

    t = 0
    limit = min(nrows, ncols)
    while t < limit:
        pi, pj = -1, -1
        best = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                v = abs(a[i][j])
                if v and (best is None or v < best):
                    best, pi, pj = v, i, j
        if best is None:
            break
        swap_rows(t, pi)
        swap_cols(t, pj)
        if a[t][t] < 0:
            negate_row(t)
        while True:
            for i in range(t + 1, nrows):
                if a[i][t]:
                    add_row(i, t, a[i][t] // a[t][t])
            if any(a[i][t] for i in range(t + 1, nrows)):
                # a remainder became the new, smaller pivot candidate
                for i in range(t + 1, nrows):
                    if a[i][t]:
                        swap_rows(t, i)
                        if a[t][t] < 0:
                            negate_row(t)
                        break
                continue
            for j in range(t + 1, ncols):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    for row in a:
                        row[j] -= q * row[t]
            if all(a[t][j] == 0 for j in range(t + 1, ncols)):
                break
            # column reduction left a remainder; move it onto the pivot
            for j in range(t + 1, ncols):
                if a[t][j]:
                    swap_cols(t, j)
                    break
            if a[t][t] < 0:
                negate_row(t)
        t += 1

    diag = [a[i][i] for i in range(t)]
    return SmithData(p, pinv, diag, nrows)


def columns_matrix(vectors, dim):
    return [[v[i] for v in vectors] for i in range(dim)]


def rvol(vectors):
    """Index of the lattice spanned by independent integer vectors inside
    the saturation of their span (the normalized parallelepiped volume)."""
    vectors = list(vectors)
    if not vectors:
        return 1
    dim = len(vectors[0])
    data = smith(columns_matrix(vectors, dim), dim, len(vectors))
    if data.rank != len(vectors):
        raise ValueError("vectors are linearly dependent")
    out = 1
    for d in data.diag:
        out *= d
    return out


def affine_lattice(translation, vectors, dim):
    """Lattice structure of the affine subspace translation + span(vectors).

    Returns ``None`` when the subspace contains no integer point, else a
    triple ``(x0, basis, dual)``: an integer point x0, a basis of
    span(vectors) ∩ Z^dim, and dual integer functionals recovering the
    basis coordinates of a lattice point relative to x0.
    """
    data = smith(columns_matrix(vectors, dim), dim, len(vectors)) if vectors \
        else smith([[0] for _ in range(dim)], dim, 1)
    k = data.rank
    c = [Fraction(v) for v in translation]
    u = [sum(data.p[i][j] * c[j] for j in range(dim)) for i in range(dim)]
    coords = []
    for i in range(dim):
        if i < k:
            coords.append(-((-u[i].numerator) // u[i].denominator))
        else:
            if u[i].denominator != 1:
                return None
            coords.append(u[i].numerator)
    x0 = tuple(sum(data.pinv[i][j] * coords[j] for j in range(dim)) for i in range(dim))
    return x0, data.saturation_basis(), data.dual_rows()


def delta_period(omega, vectors, dim):
    """Smallest positive integer m such that t*omega + span(vectors) meets
    Z^dim exactly when m | t."""
    data = smith(columns_matrix(vectors, dim), dim, len(vectors)) if vectors \
        else smith([[0] for _ in range(dim)], dim, 1)
    m = 1
    for q in data.quotient_coords([Fraction(w) for w in omega]):
        m = m * q.denominator // gcd(m, q.denominator)
    return m


def rational_rref(rows):
    """Reduced row echelon form over Q.  Returns (rows, pivot_columns)."""
    work = [list(map(Fraction, r)) for r in rows]
    ncols = len(work[0]) if work else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(work)) if work[i][c]), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        inv = 1 / work[r][c]
        work[r] = [v * inv for v in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c]:
                f = work[i][c]
                work[i] = [a - f * b for a, b in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return tuple(tuple(row) for row in work[:r]), tuple(pivots)


def reduce_against(vec, rref_rows, pivots):
    v = list(map(Fraction, vec))
    for row, c in zip(rref_rows, pivots):
        if v[c]:
            f = v[c]
            v = [a - f * b for a, b in zip(v, row)]
    return v


def in_row_span(vec, rref_rows, pivots):
    return not any(reduce_against(vec, rref_rows, pivots))


def nullspace(rows, ncols):
    """Basis of the right nullspace of a rational matrix."""
    rref_rows, pivots = rational_rref(rows) if rows else ((), ())
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, c in zip(rref_rows, pivots):
            v[c] = -row[f]
        basis.append(tuple(v))
    return basis


def primitive(vec):
    """Scale a rational vector to a primitive integer vector with positive
    leading nonzero entry."""
    fracs = [Fraction(v) for v in vec]
    if not any(fracs):
        raise ValueError("zero vector has no primitive form")
    denom = 1
    for f in fracs:
        denom = denom * f.denominator // gcd(denom, f.denominator)
    ints = [int(f * denom) for f in fracs]
    g = 0
    for v in ints:
        g = gcd(g, v)
    ints = [v // g for v in ints]
    lead = next(v for v in ints if v)
    if lead < 0:
        ints = [-v for v in ints]
    return tuple(ints)


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))
