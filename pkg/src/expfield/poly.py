"""Sparse multivariate polynomials over Q with named transcendental parameters.

A :class:`PolyRing` fixes an ordered list of variables, each tagged as a
geometric variable or a parameter.  Parameters model an extension field
Q(p1, p2, ...) of algebraically independent transcendentals: every monomial
order compares the geometric part of a monomial first and the parameter part
only as a tie-break, so leading terms never rewrite parameter-only
polynomials into geometric ones, and dimension counts treat the parameters
as ambient constants.

The Groebner engine is Buchberger's algorithm with the coprimality and chain
criteria and minimal-lcm-degree pair selection, followed by inter-reduction
to the unique reduced basis.  All computations carry an explicit step budget
so that elimination blow-ups surface as a clean :class:`BudgetExceeded`
instead of a hang.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import BudgetExceeded, RingMismatch

GEOM = "geom"
PARAM = "param"

DEFAULT_BUDGET = 10**6

#: Dimension marker for the unit ideal (including ideals that contain a
#: nonzero polynomial in parameters alone, which are units over Q(params)).
EMPTY = "empty"


@dataclass(frozen=True)
class VarName:
    name: str
    kind: str = GEOM

    def __post_init__(self):
        if self.kind not in (GEOM, PARAM):
            raise ValueError(f"unknown variable kind {self.kind!r}")


@dataclass(frozen=True)
class PolyRing:
    """An ordered variable context.  Parameters must come after all
    geometric variables."""

    vars: tuple

    def __post_init__(self):
        names = [v.name for v in self.vars]
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names")
        seen_param = False
        for v in self.vars:
            if v.kind == PARAM:
                seen_param = True
            elif seen_param:
                raise ValueError("geometric variable after a parameter")

    @classmethod
    def make(cls, geom_names, param_names=()) -> "PolyRing":
        return cls(
            tuple(VarName(n, GEOM) for n in geom_names)
            + tuple(VarName(n, PARAM) for n in param_names)
        )

    @property
    def nvars(self) -> int:
        return len(self.vars)

    @property
    def names(self):
        return tuple(v.name for v in self.vars)

    def index(self, name: str) -> int:
        for i, v in enumerate(self.vars):
            if v.name == name:
                return i
        raise KeyError(name)

    @property
    def geom_indices(self):
        return tuple(i for i, v in enumerate(self.vars) if v.kind == GEOM)

    @property
    def param_indices(self):
        return tuple(i for i, v in enumerate(self.vars) if v.kind == PARAM)

    @property
    def param_names(self):
        return tuple(v.name for v in self.vars if v.kind == PARAM)

    def var(self, name: str) -> "MultiPoly":
        i = self.index(name)
        mono = tuple(int(j == i) for j in range(self.nvars))
        return MultiPoly(self, {mono: Fraction(1)})

    def monomial(self, exps, coeff=1) -> "MultiPoly":
        exps = tuple(int(e) for e in exps)
        if len(exps) != self.nvars:
            raise ValueError("exponent vector length mismatch")
        return MultiPoly(self, {exps: Fraction(coeff)})

    def const(self, value) -> "MultiPoly":
        value = Fraction(value)
        if value == 0:
            return MultiPoly(self, {})
        return MultiPoly(self, {(0,) * self.nvars: value})

    @property
    def zero(self) -> "MultiPoly":
        return MultiPoly(self, {})

    @property
    def one(self) -> "MultiPoly":
        return self.const(1)

    def restrict(self, keep_names) -> "PolyRing":
        keep = set(keep_names)
        return PolyRing(tuple(v for v in self.vars if v.name in keep))


class MultiPoly:
    """Immutable sparse polynomial: map from exponent vector to Fraction."""

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self._terms = {m: c for m, c in terms.items() if c != 0}
        self._hash = None

    # -- basic queries -------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not any(m) for m in self._terms)

    def constant_value(self) -> Fraction:
        if not self._terms:
            return Fraction(0)
        [(m, c)] = list(self._terms.items())
        if any(m):
            raise ValueError("not a constant")
        return c

    def num_terms(self) -> int:
        return len(self._terms)

    def total_degree(self) -> int:
        return max((sum(m) for m in self._terms), default=0)

    def support_indices(self):
        """Indices of variables that occur with positive exponent."""
        out = set()
        for m in self._terms:
            for i, e in enumerate(m):
                if e:
                    out.add(i)
        return out

    def items(self):
        return self._terms.items()

    def sorted_terms(self, key=None):
        key = key or grevlex_key_for(self.ring)
        return sorted(self._terms.items(), key=lambda mc: key(mc[0]), reverse=True)

    def coeff(self, mono) -> Fraction:
        return self._terms.get(tuple(mono), Fraction(0))

    def only_involves(self, indices) -> bool:
        allowed = set(indices)
        return all(all(e == 0 or i in allowed for i, e in enumerate(m)) for m in self._terms)

    def degree_in(self, index: int) -> int:
        return max((m[index] for m in self._terms), default=0)

    # -- arithmetic ----------------------------------------------------

    def _check(self, other: "MultiPoly"):
        if self.ring != other.ring:
            raise RingMismatch("polynomials from different rings")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        self._check(other)
        terms = dict(self._terms)
        for m, c in other._terms.items():
            nc = terms.get(m, Fraction(0)) + c
            if nc:
                terms[m] = nc
            else:
                terms.pop(m, None)
        return MultiPoly(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.ring, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            if q == 0:
                return self.ring.zero
            return MultiPoly(self.ring, {m: c * q for m, c in self._terms.items()})
        self._check(other)
        terms = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                nc = terms.get(m, Fraction(0)) + c1 * c2
                if nc:
                    terms[m] = nc
                else:
                    terms.pop(m, None)
        return MultiPoly(self.ring, terms)

    __rmul__ = __mul__

    def __pow__(self, exp: int):
        if exp < 0:
            raise ValueError("negative power")
        result = self.ring.one
        base = self
        while exp:
            if exp & 1:
                result = result * base
            base = base * base if exp > 1 else base
            exp >>= 1
        return result

    def __eq__(self, other):
        return (
            isinstance(other, MultiPoly)
            and self.ring == other.ring
            and self._terms == other._terms
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, tuple(sorted(self._terms.items()))))
        return self._hash

    def __repr__(self):
        return f"MultiPoly({poly_to_text(self)})"


# -- monomial orders ----------------------------------------------------


def _grevlex_part(mono, indices):
    total = 0
    rev = []
    for i in indices:
        total += mono[i]
    for i in reversed(indices):
        rev.append(-mono[i])
    return (total, tuple(rev))


def grevlex_key_for(ring: PolyRing):
    """Graded reverse lex on the geometric block, parameters as a trailing
    grevlex block."""
    g = ring.geom_indices
    p = ring.param_indices
    if not p:
        return lambda m: _grevlex_part(m, g)
    return lambda m: (_grevlex_part(m, g), _grevlex_part(m, p))


@dataclass(frozen=True)
class MonomialOrder:
    """``grevlex`` or ``block`` (lex between blocks: the elimination block
    of variables listed first dominates, grevlex inside each block).
    Parameters always form an implicit final block."""

    kind: str = "grevlex"
    block: tuple = ()

    def key_for(self, ring: PolyRing):
        if self.kind == "grevlex":
            return grevlex_key_for(ring)
        if self.kind != "block":
            raise ValueError(f"unknown order kind {self.kind!r}")
        names = set(self.block)
        first = tuple(i for i in ring.geom_indices if ring.vars[i].name in names)
        rest = tuple(i for i in ring.geom_indices if ring.vars[i].name not in names)
        params = ring.param_indices
        if not params:
            return lambda m: (_grevlex_part(m, first), _grevlex_part(m, rest))
        return lambda m: (
            _grevlex_part(m, first),
            _grevlex_part(m, rest),
            _grevlex_part(m, params),
        )


def grevlex() -> MonomialOrder:
    return MonomialOrder("grevlex")


def elim_block(names) -> MonomialOrder:
    return MonomialOrder("block", tuple(names))


# -- division and Buchberger --------------------------------------------


class _Budget:
    __slots__ = ("left", "total")

    def __init__(self, total: int):
        self.left = total
        self.total = total

    def spend(self, n: int = 1):
        self.left -= n
        if self.left < 0:
            raise BudgetExceeded(self.total, "polynomial reduction")


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _mono_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _mono_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _normal_form_terms(terms: dict, lts, lcs, gen_terms, key, budget: _Budget) -> dict:
    work = dict(terms)
    result = {}
    while work:
        lm = max(work, key=key)
        lc = work.pop(lm)
        reduced = False
        for lt, lcoef, gterms in zip(lts, lcs, gen_terms):
            if _divides(lt, lm):
                shift = _mono_sub(lm, lt)
                factor = lc / lcoef
                for m, c in gterms.items():
                    if m == lt:
                        continue
                    mm = _mono_add(m, shift)
                    if mm in result:
                        # monomials already moved to the remainder are in
                        # normal position and cannot reappear in work
                        nc = result.get(mm) - factor * c
                        if nc:
                            result[mm] = nc
                        else:
                            result.pop(mm)
                    else:
                        nc = work.get(mm, Fraction(0)) - factor * c
                        if nc:
                            work[mm] = nc
                        else:
                            work.pop(mm, None)
                budget.spend()
                reduced = True
                break
        if not reduced:
            result[lm] = lc
    return result


class GroebnerBasis:
    """A reduced Groebner basis together with its ring and order."""

    __slots__ = ("ring", "order", "gens", "_key", "_lts", "_lcs", "_gterms")

    def __init__(self, ring: PolyRing, order: MonomialOrder, gens):
        self.ring = ring
        self.order = order
        self._key = order.key_for(ring)
        self.gens = tuple(
            sorted(gens, key=lambda g: self._key(max(g._terms, key=self._key)), reverse=True)
        )
        self._lts = tuple(max(g._terms, key=self._key) for g in self.gens)
        self._lcs = tuple(g._terms[lt] for g, lt in zip(self.gens, self._lts))
        self._gterms = tuple(g._terms for g in self.gens)

    def leading_monomials(self):
        return self._lts

    def is_unit(self) -> bool:
        return any(not any(lt) for lt in self._lts)

    def normal_form(self, f: MultiPoly, budget: int | None = None) -> MultiPoly:
        if f.ring != self.ring:
            raise RingMismatch("polynomial not in the basis ring")
        b = _Budget(budget or DEFAULT_BUDGET)
        reduced = _normal_form_terms(f._terms, self._lts, self._lcs, self._gterms, self._key, b)
        return MultiPoly(self.ring, reduced)

    def contains(self, f: MultiPoly, budget: int | None = None) -> bool:
        return self.normal_form(f, budget).is_zero()

    def __eq__(self, other):
        return (
            isinstance(other, GroebnerBasis)
            and self.ring == other.ring
            and self.order == other.order
            and self.gens == other.gens
        )

    def __hash__(self):
        return hash((self.ring, self.order, self.gens))

    def __repr__(self):
        return "GroebnerBasis([" + "; ".join(poly_to_text(g) for g in self.gens) + "])"


def groebner(gens, order: MonomialOrder | None = None, budget: int | None = None,
             ring: PolyRing | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    Deterministic for a fixed generator set and order (the result is the
    unique reduced basis; internal pair handling is order-insensitive).
    Raises :class:`BudgetExceeded` when the reduction-step budget runs out.
    """
    order = order or grevlex()
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        if ring is None:
            raise ValueError("empty generator list needs an explicit ring")
        return GroebnerBasis(ring, order, ())
    ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise RingMismatch("generators from different rings")
    key = order.key_for(ring)
    b = _Budget(budget or DEFAULT_BUDGET)

    basis = []  # list of term dicts, monic
    lts = []
    lcs = []

    def add_poly(terms: dict):
        lt = max(terms, key=key)
        lc = terms[lt]
        basis.append({m: c / lc for m, c in terms.items()})
        lts.append(lt)
        lcs.append(Fraction(1))

    seed = sorted({tuple(sorted(g._terms.items())) for g in gens})
    for t in seed:
        add_poly(dict(t))

    pairs = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))}
    done = set()

    def pair_key(p):
        i, j = p
        lcm = _mono_lcm(lts[i], lts[j])
        return (sum(lcm), key(lcm), i, j)

    while pairs:
        i, j = min(pairs, key=pair_key)
        pairs.discard((i, j))
        done.add((i, j))
        lcm = _mono_lcm(lts[i], lts[j])
        # Buchberger's coprimality criterion
        if lcm == _mono_add(lts[i], lts[j]):
            continue
        # chain criterion: some k with LT(k) | lcm and both pairs treated
        skip = False
        for k in range(len(basis)):
            if k in (i, j) or not _divides(lts[k], lcm):
                continue
            pik = (min(i, k), max(i, k))
            pjk = (min(j, k), max(j, k))
            if pik in done and pjk in done:
                skip = True
                break
        if skip:
            continue
        si = _mono_sub(lcm, lts[i])
        sj = _mono_sub(lcm, lts[j])
        spoly = {}
        for m, c in basis[i].items():
            spoly[_mono_add(m, si)] = c
        for m, c in basis[j].items():
            mm = _mono_add(m, sj)
            nc = spoly.get(mm, Fraction(0)) - c
            if nc:
                spoly[mm] = nc
            else:
                spoly.pop(mm, None)
        reduced = _normal_form_terms(spoly, lts, lcs, basis, key, b)
        if reduced:
            new_index = len(basis)
            add_poly(reduced)
            for k in range(new_index):
                pairs.add((k, new_index))

    # minimal basis: drop gens whose LT is divisible by another LT
    # (for equal leading terms the first occurrence survives)
    keep = []
    for i in range(len(basis)):
        divisors = [
            k
            for k in range(len(basis))
            if k != i and _divides(lts[k], lts[i]) and (lts[k] != lts[i] or k < i)
        ]
        if not divisors:
            keep.append(i)
    minimal = [(lts[i], basis[i]) for i in keep]

    # inter-reduce tails to get the unique reduced basis
    reduced_polys = []
    for idx, (lt, terms) in enumerate(minimal):
        other_lts = [minimal[k][0] for k in range(len(minimal)) if k != idx]
        other_lcs = [Fraction(1)] * len(other_lts)
        other_terms = [minimal[k][1] for k in range(len(minimal)) if k != idx]
        red = _normal_form_terms(terms, other_lts, other_lcs, other_terms, key, b)
        lc = red[max(red, key=key)]
        reduced_polys.append(MultiPoly(ring, {m: c / lc for m, c in red.items()}))
    return GroebnerBasis(ring, order, reduced_polys)


def normal_form(f: MultiPoly, gb: GroebnerBasis, budget: int | None = None) -> MultiPoly:
    """Unique remainder of ``f`` modulo ``gb``: no monomial of the result is
    divisible by a leading monomial of the basis, and ``f - result`` lies in
    the ideal."""
    return gb.normal_form(f, budget)


def eliminate(gens, drop_names, budget: int | None = None,
              ring: PolyRing | None = None) -> GroebnerBasis:
    """Groebner basis of the elimination ideal with the ``drop_names``
    variables removed, over the restricted ring.

    Only geometric variables may be dropped; parameters always stay.
    """
    gens = list(gens)
    if ring is None:
        if not gens:
            raise ValueError("empty generator list needs an explicit ring")
        ring = gens[0].ring
    drop = set(drop_names)
    unknown = drop - set(ring.names)
    if unknown:
        raise ValueError(f"unknown variables: {sorted(unknown)}")
    for v in ring.vars:
        if v.name in drop and v.kind == PARAM:
            raise ValueError("cannot eliminate a parameter")
    gb = groebner(gens, elim_block(sorted(drop)), budget=budget, ring=ring)
    keep_ring = ring.restrict(n for n in ring.names if n not in drop)
    col = [ring.index(n) for n in keep_ring.names]
    drop_idx = [ring.index(n) for n in drop]
    kept = []
    for g in gb.gens:
        if all(all(m[i] == 0 for i in drop_idx) for m in g._terms):
            kept.append(
                MultiPoly(keep_ring, {tuple(m[i] for i in col): c for m, c in g._terms.items()})
            )
    return GroebnerBasis(keep_ring, grevlex(), kept)


def ideal_dimension(gb: GroebnerBasis):
    """Krull dimension relative to the parameter field.

    Standard combinatorial criterion: the maximum size of a set S of
    geometric variables such that no leading monomial lies in
    Q[S + parameters].  Returns :data:`EMPTY` when the basis contains a unit
    (or a nonzero polynomial in parameters alone, a unit over Q(params)).
    """
    geom = set(gb.ring.geom_indices)
    supports = set()
    for lt in gb.leading_monomials():
        sup = frozenset(i for i, e in enumerate(lt) if e and i in geom)
        if not sup:
            return EMPTY
        supports.add(sup)
    supports = sorted(supports, key=lambda s: (len(s), sorted(s)))
    # prune supersets: a superset constraint is implied by its subset
    minimal = []
    for s in supports:
        if not any(t <= s for t in minimal):
            minimal.append(s)
    memo = {}

    def explore(candidate: frozenset) -> int:
        if candidate in memo:
            return memo[candidate]
        violated = next((s for s in minimal if s <= candidate), None)
        if violated is None:
            memo[candidate] = len(candidate)
            return len(candidate)
        result = 0
        for v in sorted(violated):
            result = max(result, explore(candidate - {v}))
            if result == len(candidate) - 1:
                break
        memo[candidate] = result
        return result

    return explore(frozenset(geom))


def partial_derivative(f: MultiPoly, name: str) -> MultiPoly:
    """Formal derivative with respect to a geometric variable."""
    i = f.ring.index(name)
    if f.ring.vars[i].kind == PARAM:
        raise ValueError(f"cannot differentiate by parameter {name!r}")
    terms = {}
    for m, c in f.items():
        if m[i] == 0:
            continue
        mm = tuple(e - 1 if k == i else e for k, e in enumerate(m))
        terms[mm] = terms.get(mm, Fraction(0)) + c * m[i]
    return MultiPoly(f.ring, terms)


# -- mapping and text ----------------------------------------------------


def embed(f: MultiPoly, target: PolyRing) -> MultiPoly:
    """Re-interpret ``f`` in a ring that contains all its variables by name."""
    col = [target.index(n) for n in f.ring.names]
    width = target.nvars
    terms = {}
    for m, c in f.items():
        mm = [0] * width
        for i, e in enumerate(m):
            mm[col[i]] = e
        terms[tuple(mm)] = c
    return MultiPoly(target, terms)


def map_poly(f: MultiPoly, target: PolyRing, images: dict) -> MultiPoly:
    """Substitute each variable by its image polynomial in ``target``.

    Every variable of ``f``'s ring that actually occurs must have an image.
    """
    result = target.zero
    for m, c in f.items():
        term = target.const(c)
        for i, e in enumerate(m):
            if e:
                name = f.ring.vars[i].name
                if name not in images:
                    raise KeyError(f"no image for variable {name!r}")
                term = term * images[name] ** e
        result = result + term
    return result


def subs_params(f: MultiPoly, values: dict) -> MultiPoly:
    """Substitute rational values for (some) parameters, shrinking the ring."""
    ring = f.ring
    for name in values:
        if ring.vars[ring.index(name)].kind != PARAM:
            raise ValueError(f"{name!r} is not a parameter")
    keep = [v for v in ring.vars if v.name not in values]
    new_ring = PolyRing(tuple(keep))
    col = [ring.index(v.name) for v in keep]
    sub_idx = {ring.index(n): Fraction(v) for n, v in values.items()}
    terms = {}
    for m, c in f.items():
        factor = Fraction(1)
        for i, val in sub_idx.items():
            if m[i]:
                factor *= val ** m[i]
        mm = tuple(m[i] for i in col)
        nc = terms.get(mm, Fraction(0)) + c * factor
        if nc:
            terms[mm] = nc
        else:
            terms.pop(mm, None)
    return MultiPoly(new_ring, terms)


def evaluate(f: MultiPoly, values: dict) -> Fraction:
    """Evaluate at a full rational point (all occurring variables bound)."""
    total = Fraction(0)
    for m, c in f.items():
        prod = c
        for i, e in enumerate(m):
            if e:
                prod *= Fraction(values[f.ring.vars[i].name]) ** e
        total += prod
    return total


def _format_coeff(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def poly_to_text(f: MultiPoly) -> str:
    """Canonical text form, e.g. ``3/2*x1^2*y3 - p*x2 + 1``."""
    if f.is_zero():
        return "0"
    key = grevlex_key_for(f.ring)
    parts = []
    for m, c in f.sorted_terms(key):
        factors = []
        for i, e in enumerate(m):
            if e == 1:
                factors.append(f.ring.vars[i].name)
            elif e > 1:
                factors.append(f"{f.ring.vars[i].name}^{e}")
        if not factors:
            body = _format_coeff(abs(c))
        elif abs(c) == 1:
            body = "*".join(factors)
        else:
            body = "*".join([_format_coeff(abs(c))] + factors)
        parts.append(("-" if c < 0 else "+", body))
    sign, body = parts[0]
    text = ("-" if sign == "-" else "") + body
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text
