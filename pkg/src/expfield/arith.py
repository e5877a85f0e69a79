"""Exact scalar and integer linear algebra.

Rationals are ``fractions.Fraction`` (always in lowest terms, positive
denominator, canonical equality), re-exported as ``Rational``.  Matrices are
tiny immutable dense values; everything here is pure and exact, with no
floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd

Rational = Fraction


def _as_fraction_rows(rows):
    return tuple(tuple(Fraction(e) for e in row) for row in rows)


@dataclass(frozen=True)
class RatMatrix:
    """Dense matrix over Q, row-major."""

    rows: int
    cols: int
    entries: tuple  # tuple of row tuples of Fraction

    @classmethod
    def from_rows(cls, rows) -> "RatMatrix":
        data = _as_fraction_rows(rows)
        if not data:
            return cls(0, 0, ())
        ncols = len(data[0])
        if any(len(r) != ncols for r in data):
            raise ValueError("ragged rows")
        return cls(len(data), ncols, data)

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls.from_rows([[Fraction(int(i == j)) for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int):
        return self.entries[i]

    def transpose(self) -> "RatMatrix":
        return RatMatrix.from_rows(
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)]
        )

    def mul(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        return RatMatrix.from_rows(
            [
                [
                    sum((self.entries[i][k] * other.entries[k][j] for k in range(self.cols)), Fraction(0))
                    for j in range(other.cols)
                ]
                for i in range(self.rows)
            ]
        )


@dataclass(frozen=True)
class IntMatrix:
    """Dense matrix over Z, row-major, arbitrary-precision entries."""

    rows: int
    cols: int
    entries: tuple  # tuple of row tuples of int

    @classmethod
    def from_rows(cls, rows) -> "IntMatrix":
        data = tuple(tuple(int(e) for e in row) for row in rows)
        if not data:
            return cls(0, 0, ())
        ncols = len(data[0])
        if any(len(r) != ncols for r in data):
            raise ValueError("ragged rows")
        return cls(len(data), ncols, data)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, rows: int, cols: int) -> "IntMatrix":
        return cls.from_rows([[0] * cols for _ in range(rows)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def to_rational(self) -> RatMatrix:
        return RatMatrix.from_rows(self.entries)

    def mul(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        return IntMatrix.from_rows(
            [
                [
                    sum(self.entries[i][k] * other.entries[k][j] for k in range(self.cols))
                    for j in range(other.cols)
                ]
                for i in range(self.rows)
            ]
        )

    def det(self) -> int:
        """Exact determinant by fraction-free Bareiss elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant of non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        m = [list(r) for r in self.entries]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                for i in range(k + 1, n):
                    if m[i][k] != 0:
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
                m[i][k] = 0
            prev = m[k][k]
        return sign * m[n - 1][n - 1]


def rref(m: RatMatrix):
    """Reduced row-echelon form.

    Returns ``(R, pivot_columns, rank)``.
    """
    data = [list(r) for r in m.entries]
    nrows, ncols = m.rows, m.cols
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, nrows):
            if data[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        data[r], data[pivot_row] = data[pivot_row], data[r]
        inv = Fraction(1) / data[r][c]
        data[r] = [e * inv for e in data[r]]
        for i in range(nrows):
            if i != r and data[i][c] != 0:
                f = data[i][c]
                data[i] = [a - f * b for a, b in zip(data[i], data[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return RatMatrix.from_rows(data) if nrows else m, tuple(pivots), r


def rank(m: RatMatrix) -> int:
    return rref(m)[2]


def q_linear_dependencies(vectors):
    """Basis of the Q-linear dependency space of the given row vectors.

    Given vectors v_1..v_k (equal length), returns a basis of
    ``{lam in Q^k : sum lam_i v_i = 0}`` as tuples of Fractions; the empty
    list iff the vectors are linearly independent.
    """
    vecs = [tuple(Fraction(e) for e in v) for v in vectors]
    k = len(vecs)
    if k == 0:
        return []
    length = len(vecs[0])
    if any(len(v) != length for v in vecs):
        raise ValueError("length mismatch among vectors")
    # Dependencies are the null space of the matrix whose columns are the vectors.
    col_matrix = RatMatrix.from_rows(
        [[vecs[j][i] for j in range(k)] for i in range(length)]
    ) if length else RatMatrix.from_rows([[Fraction(0)] * k])
    red, pivots, _ = rref(col_matrix)
    free_cols = [j for j in range(k) if j not in pivots]
    basis = []
    for f in free_cols:
        lam = [Fraction(0)] * k
        lam[f] = Fraction(1)
        for i, p in enumerate(pivots):
            lam[p] = -red.entries[i][f]
        basis.append(tuple(lam))
    return basis


def scale_to_integer(vec):
    """Scale a rational vector to a primitive integer vector, first nonzero > 0."""
    vec = [Fraction(e) for e in vec]
    den = 1
    for e in vec:
        den = den * e.denominator // gcd(den, e.denominator)
    ints = [int(e * den) for e in vec]
    g = 0
    for e in ints:
        g = gcd(g, abs(e))
    if g > 1:
        ints = [e // g for e in ints]
    for e in ints:
        if e != 0:
            if e < 0:
                ints = [-x for x in ints]
            break
    return tuple(ints)


def _swap_rows(m, u, i, j):
    m[i], m[j] = m[j], m[i]
    u[i], u[j] = u[j], u[i]


def _add_row(m, u, dst, src, factor):
    m[dst] = [a + factor * b for a, b in zip(m[dst], m[src])]
    u[dst] = [a + factor * b for a, b in zip(u[dst], u[src])]


def _negate_row(m, u, i):
    m[i] = [-a for a in m[i]]
    u[i] = [-a for a in u[i]]


def hermite_normal_form(m: IntMatrix):
    """Row-style Hermite normal form via Euclidean row reduction.

    Returns ``(H, U)`` with ``U`` unimodular and ``H = U * m``.  ``H`` has its
    nonzero rows first, each pivot positive, pivot columns strictly
    increasing, and entries above a pivot reduced into ``[0, pivot)``.  The
    pivot with the smallest absolute value is chosen at every step, which
    keeps intermediate entries small on desk-scale inputs.
    """
    h = [list(r) for r in m.entries]
    u = [[int(i == j) for j in range(m.rows)] for i in range(m.rows)]
    nrows, ncols = m.rows, m.cols
    r = 0
    for c in range(ncols):
        while True:
            nonzero = [i for i in range(r, nrows) if h[i][c] != 0]
            if not nonzero:
                break
            pivot = min(nonzero, key=lambda i: (abs(h[i][c]), i))
            if pivot != r:
                _swap_rows(h, u, r, pivot)
            done = True
            for i in range(r + 1, nrows):
                if h[i][c] != 0:
                    q = h[i][c] // h[r][c]
                    _add_row(h, u, i, r, -q)
                    if h[i][c] != 0:
                        done = False
            if done:
                break
        if r < nrows and h[r][c] != 0:
            if h[r][c] < 0:
                _negate_row(h, u, r)
            for i in range(r):
                q = h[i][c] // h[r][c]
                if q:
                    _add_row(h, u, i, r, -q)
            r += 1
            if r == nrows:
                break
    # Reduce entries above pivots once more (pivots found late can leave residue).
    prow = []
    for i in range(nrows):
        lead = next((j for j in range(ncols) if h[i][j] != 0), None)
        if lead is not None:
            prow.append((i, lead))
    for i, lead in prow:
        for k in range(i):
            q = h[k][lead] // h[i][lead]
            if q:
                _add_row(h, u, k, i, -q)
    return IntMatrix.from_rows(h) if nrows else m, IntMatrix.from_rows(u) if nrows else IntMatrix.from_rows([])


def smith_normal_form(m: IntMatrix):
    """Smith normal form.

    Returns ``(S, U, V)`` with ``S = U * m * V`` diagonal, nonnegative, and
    ``d_1 | d_2 | ...``; ``U`` and ``V`` unimodular.  Classical Euclidean
    elimination with a minimal-absolute-value pivot; coefficient growth is
    acceptable at desk scale thanks to arbitrary precision.
    """
    s = [list(r) for r in m.entries]
    nrows, ncols = m.rows, m.cols
    u = [[int(i == j) for j in range(nrows)] for i in range(nrows)]
    v = [[int(i == j) for j in range(ncols)] for i in range(ncols)]

    def swap_cols(i, j):
        for row in s:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_col(dst, src, factor):
        for row in s:
            row[dst] += factor * row[src]
        for row in v:
            row[dst] += factor * row[src]

    def negate_col(i):
        for row in s:
            row[i] = -row[i]
        for row in v:
            row[i] = -row[i]

    t = 0
    while t < min(nrows, ncols):
        candidates = [
            (abs(s[i][j]), i, j)
            for i in range(t, nrows)
            for j in range(t, ncols)
            if s[i][j] != 0
        ]
        if not candidates:
            break
        _, pi, pj = min(candidates)
        if pi != t:
            _swap_rows(s, u, t, pi)
        if pj != t:
            swap_cols(t, pj)
        # Clear row and column t; re-scan while remainders reintroduce entries.
        while True:
            progress = False
            for i in range(t + 1, nrows):
                if s[i][t] != 0:
                    q = s[i][t] // s[t][t]
                    _add_row(s, u, i, t, -q)
                    if s[i][t] != 0:
                        _swap_rows(s, u, t, i)
                        progress = True
            for j in range(t + 1, ncols):
                if s[t][j] != 0:
                    q = s[t][j] // s[t][t]
                    add_col(j, t, -q)
                    if s[t][j] != 0:
                        swap_cols(t, j)
                        progress = True
            if not progress:
                break
        # Divisibility repair: fold any entry not divisible by the pivot.
        bad = None
        for i in range(t + 1, nrows):
            for j in range(t + 1, ncols):
                if s[i][j] % s[t][t] != 0:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            _add_row(s, u, t, bad, 1)
            continue
        if s[t][t] < 0:
            _negate_row(s, u, t)
        t += 1
    # The divisibility chain holds by construction: the repair loop only lets
    # stage t finish once the pivot divides every entry of the trailing block.
    return IntMatrix.from_rows(s) if nrows else m, IntMatrix.from_rows(u) if nrows else IntMatrix.from_rows([]), IntMatrix.from_rows(v)


def minor_gcd(m: IntMatrix, k: int) -> int:
    """GCD of all k x k minors (brute force; test oracle for SNF invariants)."""
    g = 0
    for rows in combinations(range(m.rows), k):
        for cols in combinations(range(m.cols), k):
            sub = IntMatrix.from_rows([[m.entries[i][j] for j in cols] for i in rows])
            g = gcd(g, abs(sub.det()))
    return g
