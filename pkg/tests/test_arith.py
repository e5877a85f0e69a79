from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from expfield.arith import (
    IntMatrix,
    RatMatrix,
    hermite_normal_form,
    minor_gcd,
    q_linear_dependencies,
    rank,
    rref,
    scale_to_integer,
    smith_normal_form,
)

small_int = st.integers(min_value=-9, max_value=9)


def int_matrices(max_dim=4):
    return st.integers(min_value=1, max_value=max_dim).flatmap(
        lambda r: st.integers(min_value=1, max_value=max_dim).flatmap(
            lambda c: st.lists(
                st.lists(small_int, min_size=c, max_size=c), min_size=r, max_size=r
            ).map(IntMatrix.from_rows)
        )
    )


def rat_matrices(max_dim=4):
    entry = st.builds(Fraction, small_int, st.integers(min_value=1, max_value=5))
    return st.integers(min_value=1, max_value=max_dim).flatmap(
        lambda r: st.integers(min_value=1, max_value=max_dim).flatmap(
            lambda c: st.lists(
                st.lists(entry, min_size=c, max_size=c), min_size=r, max_size=r
            ).map(RatMatrix.from_rows)
        )
    )


def test_rref_identity():
    m = RatMatrix.identity(2)
    red, pivots, rk = rref(m)
    assert red == m
    assert pivots == (0, 1)
    assert rk == 2


def test_rref_proportional_rows():
    m = RatMatrix.from_rows([[1, 2], [2, 4]])
    red, pivots, rk = rref(m)
    assert red == RatMatrix.from_rows([[1, 2], [0, 0]])
    assert rk == 1


def test_rref_zero():
    m = RatMatrix.from_rows([[0, 0], [0, 0]])
    red, pivots, rk = rref(m)
    assert red == m
    assert pivots == ()
    assert rk == 0


@given(rat_matrices())
def test_rref_idempotent(m):
    red, _, _ = rref(m)
    again, _, _ = rref(red)
    assert again == red


@given(rat_matrices())
def test_rank_transpose(m):
    assert rank(m) == rank(m.transpose())


def test_dependencies_standard_basis():
    assert q_linear_dependencies([(1, 0), (0, 1)]) == []


def test_dependencies_proportional():
    basis = q_linear_dependencies([(1, 2), (2, 4)])
    assert len(basis) == 1
    lam = basis[0]
    # proportional to (2, -1)
    assert lam[0] * Fraction(-1) == lam[1] * Fraction(2)
    assert any(lam)


def test_dependencies_three_vectors():
    # v1 + v2 - v3 = 0 is the only dependency (solved by hand: the vectors
    # (1,1,0), (0,1,1) are independent and (1,2,1) is their sum).
    basis = q_linear_dependencies([(1, 1, 0), (0, 1, 1), (1, 2, 1)])
    assert len(basis) == 1
    assert scale_to_integer(basis[0]) == (1, 1, -1)


def test_dependencies_length_mismatch():
    with pytest.raises(ValueError):
        q_linear_dependencies([(1, 0), (0, 1, 2)])


@given(st.lists(st.lists(small_int, min_size=3, max_size=3), min_size=1, max_size=5))
def test_dependencies_annihilate_and_count(vecs):
    deps = q_linear_dependencies(vecs)
    for lam in deps:
        combo = [sum(l * Fraction(v[i]) for l, v in zip(lam, vecs)) for i in range(3)]
        assert all(c == 0 for c in combo)
    m = RatMatrix.from_rows(vecs)
    assert len(deps) + rank(m) == len(vecs)


def is_row_hnf(h: IntMatrix) -> bool:
    leads = []
    seen_zero = False
    for i in range(h.rows):
        row = h.entries[i]
        lead = next((j for j in range(h.cols) if row[j] != 0), None)
        if lead is None:
            seen_zero = True
            continue
        if seen_zero:
            return False
        if leads and lead <= leads[-1]:
            return False
        if row[lead] <= 0:
            return False
        for k in range(i):
            if not (0 <= h.entries[k][lead] < row[lead]):
                return False
        leads.append(lead)
    return True


def test_hnf_identity():
    m = IntMatrix.identity(3)
    h, u = hermite_normal_form(m)
    assert h == m
    assert u == m


def test_hnf_example():
    m = IntMatrix.from_rows([[2, 4], [1, 3]])
    h, u = hermite_normal_form(m)
    assert (h.entries[0][0], h.entries[1][1]) == (1, 2)
    assert u.mul(m) == h
    assert abs(u.det()) == 1
    assert is_row_hnf(h)


def test_hnf_zero():
    m = IntMatrix.zero(2, 2)
    h, u = hermite_normal_form(m)
    assert h == m
    assert u == IntMatrix.identity(2)


@given(int_matrices())
@settings(max_examples=150)
def test_hnf_properties(m):
    h, u = hermite_normal_form(m)
    assert u.mul(m) == h
    assert abs(u.det()) == 1
    assert is_row_hnf(h)


def test_snf_identity():
    m = IntMatrix.identity(2)
    s, u, v = smith_normal_form(m)
    assert s == m and u == m and v == m


def test_snf_diag_2_3():
    m = IntMatrix.from_rows([[2, 0], [0, 3]])
    s, u, v = smith_normal_form(m)
    assert (s.entries[0][0], s.entries[1][1]) == (1, 6)
    assert u.mul(m).mul(v) == s


def test_snf_zero_1x1():
    m = IntMatrix.from_rows([[0]])
    s, _, _ = smith_normal_form(m)
    assert s == m


@given(int_matrices())
@settings(max_examples=150)
def test_snf_properties(m):
    s, u, v = smith_normal_form(m)
    assert u.mul(m).mul(v) == s
    assert abs(u.det()) == 1
    assert abs(v.det()) == 1
    k = min(m.rows, m.cols)
    diag = [s.entries[i][i] for i in range(k)]
    for i in range(s.rows):
        for j in range(s.cols):
            if i != j:
                assert s.entries[i][j] == 0
    for a, b in zip(diag, diag[1:]):
        assert a >= 0 and b >= 0
        if a == 0:
            assert b == 0
        else:
            assert b % a == 0
    # product of nonzero invariant factors = +-gcd of maximal nonzero minors
    nonzero = [d for d in diag if d != 0]
    r = len(nonzero)
    if r:
        prod = 1
        for d in nonzero:
            prod *= d
        assert prod == minor_gcd(m, r)
