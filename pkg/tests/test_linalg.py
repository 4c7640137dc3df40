from fractions import Fraction as Q

import pytest
from hypothesis import given, settings, strategies as st

from eulerlab.linalg import (
    fmt, identity, inverse, mat, matmul, matvec, nullspace, rank, rref, solve, transpose,
)

small = st.integers(-4, 4)


def matrices(n, m):
    return st.lists(st.lists(small, min_size=m, max_size=m), min_size=n, max_size=n).map(mat)


def test_fmt_integral_and_fraction():
    assert fmt(Q(3)) == "3"
    assert fmt(Q(-1, 2)) == "-1/2"


def test_rref_pivots():
    rows, piv = rref(mat([[0, 2, 4], [1, 1, 1], [2, 4, 6]]))
    assert piv == [0, 1]
    assert list(rows[0]) == [1, 0, -1]


def test_inverse_of_singular_raises():
    with pytest.raises(ValueError):
        inverse(mat([[1, 2], [2, 4]]))


@given(matrices(3, 3))
def test_inverse_roundtrip(a):
    if rank(a) < 3:
        return
    assert matmul(a, inverse(a)) == identity(3)


@given(matrices(3, 4))
def test_rank_nullity(a):
    ns = nullspace(a, 4)
    assert rank(a) + len(ns) == 4
    for v in ns:
        assert all(x == 0 for x in matvec(a, v))


@settings(max_examples=50)
@given(matrices(3, 3), st.lists(small, min_size=3, max_size=3))
def test_solve_consistent_systems(a, x):
    b = matvec(a, [Q(v) for v in x])
    sol = solve(a, b)
    assert sol is not None and matvec(a, sol) == b


def test_solve_inconsistent_returns_none():
    assert solve(mat([[1, 1], [1, 1]]), (Q(1), Q(2))) is None


@given(matrices(2, 3))
def test_transpose_involution(a):
    assert transpose(transpose(a)) == a
