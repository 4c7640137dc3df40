from fractions import Fraction as Q

import pytest
from hypothesis import given, strategies as st

from eulerlab import euler
from eulerlab.rootsys import build_root_system, dual_basis


def labels(xs):
    return [e.label for e in xs]


@pytest.mark.parametrize("name,expected", [
    ("A3", [1, 2, 3]), ("B4", [1]), ("C3", [3]), ("D5", [1, 4, 5]), ("E6", [1, 6]),
    ("E7", [7]), ("E8", []), ("F4", []), ("G2", []), ("BC3", []),
])
def test_euler_elements(name, expected):
    assert labels(euler.euler_elements(build_root_system(name))) == expected


@pytest.mark.parametrize("name,expected", [
    ("A5", [3]), ("A4", []), ("D4", [1, 3, 4]), ("D5", [1]), ("D6", [1, 5, 6]), ("E7", [7]), ("E6", []),
])
def test_symmetric_elements(name, expected):
    assert labels(euler.symmetric_elements(build_root_system(name))) == expected


def test_c3_h1_is_not_euler():
    rs = build_root_system("C3")
    assert not euler.is_euler(rs, dual_basis(rs)[0])


def test_zero_is_not_euler():
    rs = build_root_system("A2")
    assert not euler.is_euler(rs, (Q(0),) * 3)


def test_is_symmetric_requires_euler():
    rs = build_root_system("C3")
    with pytest.raises(ValueError):
        euler.is_symmetric(rs, dual_basis(rs)[0])


@pytest.mark.parametrize("name,count", [("D6", 3), ("D4", 3), ("E7", 1), ("E6", 0), ("B3", 1), ("A3", 1), ("A2", 0)])
def test_symmetric_class_count(name, count):
    assert euler.symmetric_class_count(build_root_system(name)) == count


@given(st.sampled_from(["A3", "B3", "C3", "D4", "E6"]), st.lists(st.integers(-2, 2), min_size=8, max_size=8))
def test_euler_condition_invariant_under_negation(name, coeffs):
    rs = build_root_system(name)
    basis = dual_basis(rs)
    h = tuple(sum(c * b[i] for c, b in zip(coeffs, basis)) for i in range(rs.dim))
    assert euler.is_euler(rs, h) == euler.is_euler(rs, tuple(-x for x in h))


def test_non_members_fail_euler_test():
    for name in ["A4", "B4", "C4", "D6", "E6", "E7", "E8"]:
        rs = build_root_system(name)
        members = set(labels(euler.euler_elements(rs)))
        for j, h in enumerate(dual_basis(rs), start=1):
            assert euler.is_euler(rs, h) == (j in members)


def test_summary_shape():
    s = euler.summary("D4")
    assert s == {"family": "D", "rank": 4, "euler": [1, 3, 4], "symmetric": [1, 3, 4],
                 "class_counts": {"euler": 3, "symmetric": 3}}
