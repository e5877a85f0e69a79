"""Independent brute-force oracles used by the test suite.

Nothing in here goes through the Buchberger engine: membership is decided by
Macaulay-style linear algebra over Q, and dimension of monomial ideals by
direct subset enumeration.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from expfield.arith import RatMatrix, rank
from expfield.poly import MultiPoly, PolyRing


def monomials_up_to(ring: PolyRing, degree: int):
    """All exponent vectors of total degree <= degree, deterministic order."""
    n = ring.nvars
    out = []

    def rec(prefix, remaining, slots):
        if slots == 0:
            out.append(tuple(prefix))
            return
        for e in range(remaining + 1):
            rec(prefix + [e], remaining - e, slots - 1)

    rec([], degree, n)
    return sorted(out)


def macaulay_member(gens, f: MultiPoly, degree: int) -> bool:
    """Is ``f`` in the span of { m * g : g in gens, deg(m * g) <= degree }?

    A sufficient-degree Macaulay matrix decides ideal membership by pure
    rational linear algebra.
    """
    ring = f.ring
    monos = monomials_up_to(ring, degree)
    index = {m: i for i, m in enumerate(monos)}
    rows = []
    for g in gens:
        if g.is_zero():
            continue
        gdeg = g.total_degree()
        for shift in monomials_up_to(ring, max(degree - gdeg, 0)):
            row = [Fraction(0)] * len(monos)
            ok = True
            for m, c in g.items():
                mm = tuple(a + b for a, b in zip(m, shift))
                if sum(mm) > degree:
                    ok = False
                    break
                row[index[mm]] = c
            if ok:
                rows.append(row)
    frow = [Fraction(0)] * len(monos)
    for m, c in f.items():
        if sum(m) > degree:
            return False
        frow[index[m]] = c
    if not rows:
        return all(c == 0 for c in frow)
    base = RatMatrix.from_rows(rows)
    extended = RatMatrix.from_rows(rows + [frow])
    return rank(base) == rank(extended)


def monomial_ideal_dimension(ring: PolyRing, generators):
    """Dimension of a monomial ideal by enumerating all variable subsets.

    ``generators`` are exponent vectors.  A subset S of the geometric
    variables is independent iff no generator's support is contained in
    S together with the parameters; the dimension is the largest such S.
    Returns "empty" when some generator involves no geometric variable.
    """
    geom = set(ring.geom_indices)
    supports = []
    for g in generators:
        sup = {i for i, e in enumerate(g) if e and i in geom}
        if not sup:
            return "empty"
        supports.append(sup)
    best = None
    for size in range(len(geom), -1, -1):
        for subset in combinations(sorted(geom), size):
            s = set(subset)
            if all(not sup <= s for sup in supports):
                best = size
                break
        if best is not None:
            return best
    return 0
