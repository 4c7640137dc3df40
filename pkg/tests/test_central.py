from fractions import Fraction as Q
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from eulerlab.catalog import get_entry, load_catalog
from eulerlab.central import (
    Coset, NonClosedLoop, NotCompact, WedgePoint, _encode, _lattice, _reduce, base_class, base_point,
    complement_coset, complement_exists, compact_model, differences_generate_z2, element_order,
    in_wedge_orbit, model_of, same_subgroup, subgroup_contains, subgroup_index, twist_chain,
    untwisted_in_orbit, winding_class, z1_class, z2_subgroup, z3_subgroup, zeta, zeta_difference,
)
from eulerlab.linalg import mat, mscale
from eulerlab.matrixlie import build_algebra
from eulerlab.pairs import class_indices

REALIZED = [e for e in load_catalog() if e.matrix_level]
SYMMETRIC = [e for e in REALIZED if e.symmetric]


def rot(n, i, j):
    """Generator of the rotation in the (i, j) plane, one full turn per unit of 2*pi."""
    return tuple(tuple(Q(-1) if (a, b) == (i, j) else Q(1) if (a, b) == (j, i) else Q(0) for b in range(n))
                 for a in range(n))


def so(p, q):
    return compact_model(build_algebra("so", p, q))


def test_models():
    assert [f.kind for f in so(2, 3).factors] == ["circle", "spin"]
    assert [f.kind for f in so(1, 4).factors] == ["spin"]
    assert [f.kind for f in compact_model(build_algebra("sp", 2)).factors] == ["unitary"]
    assert compact_model(build_algebra("sl", 4)).pi1().to_json()["b"] == 1


def test_circle_winding():
    m = so(2, 3)
    assert str(winding_class(m, rot(5, 0, 1), 1)) == "(1, 0̄)"
    assert str(winding_class(m, rot(5, 1, 0), 2)) == "(-2, 0̄)"
    # SO(2) is its own center, so fractional windings are admissible lifted paths
    assert str(winding_class(m, rot(5, 0, 1), Q(1, 2))) == "(1/2, 0̄)"
    assert winding_class(m, rot(5, 1, 0), 0).is_identity


def test_spin_winding():
    m = so(2, 3)
    assert str(winding_class(m, rot(5, 3, 2), 1)) == "(0, 1̄)"
    assert winding_class(m, rot(5, 3, 2), 2).is_identity
    # two planes at once in SO(4): a closed loop that lifts to a loop
    m4 = so(1, 4)
    z = tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(rot(5, 2, 1), rot(5, 4, 3)))
    assert winding_class(m4, z, 1).is_identity


def test_zero_generator_is_identity():
    m = so(2, 3)
    zero = tuple(tuple(Q(0) for _ in range(5)) for _ in range(5))
    assert winding_class(m, zero, 3).is_identity


def test_non_closed_and_non_compact():
    with pytest.raises(NonClosedLoop):
        winding_class(so(2, 3), mscale(Q(1, 3), rot(5, 3, 2)), 1)
    boost = mat([[0, 0, 1, 0, 0], [0, 0, 0, 0, 0], [1, 0, 0, 0, 0], [0, 0, 0, 0, 0], [0, 0, 0, 0, 0]])
    with pytest.raises(NotCompact):
        winding_class(so(2, 3), boost, 1)


@settings(max_examples=25, deadline=None)
@given(st.integers(-4, 4), st.integers(-4, 4))
def test_winding_is_additive(s, t):
    m = so(2, 4)
    z = tuple(tuple(a + b for a, b in zip(r, u)) for r, u in zip(rot(6, 1, 0), rot(6, 3, 2)))
    assert winding_class(m, z, s) + winding_class(m, z, t) == winding_class(m, z, s + t)


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(REALIZED), st.data())
def test_group_axioms(entry, data):
    gens = list(z3_subgroup(entry).Z3)
    a, b, c = (data.draw(st.sampled_from(gens)) for _ in range(3))
    assert (a + b) + c == a + (b + c)
    assert a - a == model_of(entry).identity()
    assert -(-a) == a


def test_so2d_values():
    for d in (3, 4, 5, 6):
        e = get_entry(f"so2{d}")
        assert str(zeta(e, 0)) == str(zeta(e, 2)) == "(0, 1̄)"
        assert str(zeta(e, 1)) == "(1, 0̄)"
        assert str(z1_class(e)) == "(1, 1̄)"
        lat = z3_subgroup(e)
        assert lat.index_z3_z2 == 2
        assert same_subgroup(list(lat.Z3), model_of(e).pi1_generators())


def test_so1d_trivial_z2():
    for d in (3, 4, 5, 6):
        e = get_entry(f"so1{d}")
        assert z2_subgroup(e).z2_kind == "Trivial"
        assert not zeta(e, 1).is_identity


def test_split_z2_order_two():
    for slug in ("sl4R", "sl6R", "so44", "soP1Q1_p2_q3"):
        e = get_entry(slug)
        assert z2_subgroup(e).z2_kind == "Z2"


def test_so12_zeta_generates_z():
    e = get_entry("so12")
    assert zeta(e, 0).values == (Q(1),) and zeta(e, 1).values == (Q(-1),)
    assert z1_class(e).values == (Q(-2),)
    assert same_subgroup(list(z3_subgroup(e).Z3), model_of(e).pi1_generators())


@pytest.mark.parametrize("entry", SYMMETRIC, ids=lambda e: e.slug)
def test_zeta_differences(entry):
    idx = class_indices(entry)
    for j in idx:
        assert zeta_difference(entry, j, j).is_identity
    assert differences_generate_z2(entry)
    assert all(zeta_difference(entry, j, m).is_loop for j in idx for m in idx)


@pytest.mark.parametrize("slug", ["sl2R", "sp2R", "sp4R", "sp6R", "so23", "so26", "so12"])
def test_cayley_difference_is_z1(slug):
    e = get_entry(slug)
    assert zeta_difference(e, 0, 1) == -z1_class(e)


@pytest.mark.parametrize("slug", ["sl4R", "sl6R", "so44", "soP1Q1_p2_q2", "soP1Q1_p3_q3"])
def test_split_difference_generates_z2(slug):
    e = get_entry(slug)
    r = e.rank_r
    d = zeta_difference(e, r, r - 1)
    assert same_subgroup([d], list(z2_subgroup(e).Z2))
    assert d == z1_class(e)


def test_complement_existence():
    assert complement_exists(get_entry("so23"))
    assert complement_exists(get_entry("sl2R"))
    assert not complement_exists(get_entry("so33_h3"))
    assert complement_coset(get_entry("so33_h3")) is None


@pytest.mark.parametrize("entry", SYMMETRIC, ids=lambda e: e.slug)
def test_coset_independent_of_class(entry):
    z2 = z2_subgroup(entry).Z2
    cosets = [Coset(zeta(entry, j), z2) for j in class_indices(entry)]
    for c in cosets:
        assert all(zeta(entry, j) in c for j in class_indices(entry))
    # the coset never contains the identity: zeta itself is not in Z2
    assert model_of(entry).identity() not in cosets[0]


def test_untwisted_in_orbit():
    e = get_entry("so23")
    m = model_of(e)
    assert untwisted_in_orbit(e, m.pi1_generators())
    assert not untwisted_in_orbit(e, [])
    assert untwisted_in_orbit(e, [m.loop(1, 0)])
    assert not untwisted_in_orbit(e, [m.loop(2, 0)])


def test_twist_chain():
    e = get_entry("sl4R")
    assert twist_chain(e, zeta(e, base_class(e))) == []
    assert twist_chain(e, zeta(e, 2)) == [(2, 1)]
    with pytest.raises(ValueError):
        twist_chain(e, z1_class(e))
    sp = get_entry("sp6R")
    for n in range(4):
        chain = twist_chain(sp, zeta(sp, n))
        assert len(chain) == n
        total = zeta(sp, base_class(sp))
        for j, m in chain:
            total = total + zeta_difference(sp, j, m)
        assert total == zeta(sp, n)
    so = get_entry("so23")
    with pytest.raises(ValueError, match="not in Z3"):
        twist_chain(so, model_of(so).identity().__class__(model_of(so), (Q(1, 2), (0, 0))))


def test_wedge_points():
    e = get_entry("so23")
    m = model_of(e)
    p = base_point(e)
    assert in_wedge_orbit(e, p)
    assert p.dual().dual() == p
    assert in_wedge_orbit(e, WedgePoint(-1, zeta(e, 0)))
    assert not in_wedge_orbit(e, p.dual())
    g = z1_class(e)
    for w in (p, WedgePoint(-1, zeta(e, 1)), WedgePoint(1, m.loop(1, 0))):
        # equivariance: acting by an element of G^h with delta in Z2 preserves membership
        assert in_wedge_orbit(e, w.act(False, g)) == in_wedge_orbit(e, w)
        assert w.act(True, g).dual().act(False, -g) == w


def test_wedge_orbit_without_complement():
    e = get_entry("so33_h3")
    assert not in_wedge_orbit(e, base_point(e).dual())


def _brute_span(vecs, moduli, bound=3):
    n = len(moduli)
    out = set()
    for coeffs in product(range(-bound, bound + 1), repeat=len(vecs)):
        v = [sum(c * x[i] for c, x in zip(coeffs, vecs)) for i in range(n)]
        out.add(tuple(a % m if m else a for a, m in zip(v, moduli)))
    return out


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(st.integers(-3, 3), min_size=3, max_size=3), min_size=1, max_size=3),
       st.lists(st.integers(-4, 4), min_size=3, max_size=3))
def test_lattice_membership(vecs, target):
    moduli = [0, 2, 4]
    basis = _lattice(vecs, moduli)
    reduced = _reduce(basis, target)
    member = not any(reduced)
    t = tuple(a % m if m else a for a, m in zip(target, moduli))
    span = _brute_span(vecs, moduli, bound=6)
    if not member:
        assert t not in span
    if t in span:
        assert member


def test_index_and_encoding():
    e = get_entry("so24")
    lat = z3_subgroup(e)
    assert subgroup_index(list(lat.Z2), list(lat.Z3)) == 2
    assert subgroup_index(list(lat.Z2), model_of(e).pi1_generators()) == 2
    vecs, mods = _encode(list(lat.Z3))
    assert mods == [0, 2, 2]
    assert subgroup_contains(list(lat.Z3), z1_class(e))
    assert element_order(zeta(e, 0)) == 2 and element_order(zeta(e, 1)) is None
