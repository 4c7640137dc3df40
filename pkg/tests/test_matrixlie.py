from fractions import Fraction as Q
from random import Random

import pytest
from hypothesis import given, settings, strategies as st

from eulerlab.catalog import load_catalog
from eulerlab.linalg import bracket, identity, is_zero, mat, mscale, transpose
from eulerlab.matrixlie import (
    E, EulerPair, NotEuler, NotInvertible, RealizationUnavailable, boost, build_algebra, euler_matrix,
    exp_ad_on_plane, grade, is_euler_matrix, is_orthogonal_pair, jordan_build, jordan_char_poly,
    jordan_invertible, jordan_min_poly, jordan_norm, pair_roundtrip, random_g1, realize, realize_params,
    sl2_triple_from_nilpotent, so22_report, tau_apply,
)
from eulerlab.catalog import get_entry

H0 = mat([[Q(1, 2), 0], [0, Q(-1, 2)]])
K0 = mat([[0, Q(1, 2)], [Q(1, 2), 0]])


@pytest.mark.parametrize("spec,dim", [(("sl", 2), 3), (("so", 2, 2), 6), (("sp", 2), 10),
                                      (("sl", 5), 24), (("so", 1, 4), 10), (("sp", 3), 21)])
def test_dimensions(spec, dim):
    assert build_algebra(*spec).dim == dim


def test_invalid_family():
    with pytest.raises(ValueError):
        build_algebra("su", 2)


def test_sl2_euler_element():
    assert euler_matrix(build_algebra("sl", 2), 1) == H0


def test_sl4_euler_element():
    h = euler_matrix(build_algebra("sl", 4), 2)
    assert h == tuple(tuple(Q(1 if i < 2 else -1, 2) if i == j else 0 for j in range(4)) for i in range(4))


def test_so22_boost():
    h = euler_matrix(build_algebra("so", 2, 2), (1, 4))
    assert h == boost(4, 1, 4)
    assert h[3][0] == 1 and h[0][3] == 1


def test_invalid_labels():
    with pytest.raises(ValueError):
        euler_matrix(build_algebra("sl", 3), 3)
    with pytest.raises(ValueError):
        euler_matrix(build_algebra("so", 2, 3), "hn")


def test_non_euler_refused():
    alg = build_algebra("sl", 3)
    h = mat([[1, 0, 0], [0, 0, 0], [0, 0, -1]])
    assert not is_euler_matrix(alg, h)
    with pytest.raises(NotEuler):
        grade(alg, h)


@pytest.mark.parametrize("spec,label,d1", [(("sl", 4), 2, 4), (("sl", 6), 3, 9), (("so", 3, 4), (1, 4), 5),
                                           (("sp", 3), "h", 6), (("so", 3, 3), "hn", 3)])
def test_grading_dimensions(spec, label, d1):
    alg = build_algebra(*spec)
    dec = grade(alg, euler_matrix(alg, label))
    assert len(dec.plus) == len(dec.minus) == d1
    assert len(dec.plus) * 2 + len(dec.zero) == alg.dim


def test_tau_sl2():
    dec = grade(build_algebra("sl", 2), H0)
    x = mat([[2, 3], [5, -2]])
    assert tau_apply(dec, x) == mat([[2, -3], [-5, -2]])
    assert tau_apply(dec, K0) == mscale(-1, K0)
    assert tau_apply(dec, H0) == H0


def test_orthogonal_pairs_sl2():
    dec = grade(build_algebra("sl", 2), H0)
    assert is_orthogonal_pair(dec, K0)
    assert is_orthogonal_pair(dec, mat([[0, 1], [Q(1, 4), 0]]))
    assert not is_orthogonal_pair(dec, H0)


def test_sl2_triple():
    dec = grade(build_algebra("sl", 2), H0)
    (x, two_h, neg_y), k = sl2_triple_from_nilpotent(dec, E(2, 1, 2))
    assert mscale(-1, neg_y) == E(2, 2, 1)
    assert two_h == mscale(2, H0)
    assert k == K0
    with pytest.raises(NotInvertible):
        sl2_triple_from_nilpotent(dec, mscale(0, E(2, 1, 2)))


def test_sl4_identity_block():
    alg = build_algebra("sl", 4)
    dec = grade(alg, euler_matrix(alg, 2))
    x = mat([[0, 0, 1, 0], [0, 0, 0, 1], [0, 0, 0, 0], [0, 0, 0, 0]])
    (_, _, neg_y), k = sl2_triple_from_nilpotent(dec, x)
    assert mscale(-1, neg_y) == transpose(x)
    pair = EulerPair(dec.h, k)
    assert pair.sl2_relations()
    z = pair.z
    assert transpose(z) == mscale(-1, z)
    assert pair_roundtrip(dec, x)


def test_singular_block_not_invertible():
    alg = build_algebra("sl", 4)
    dec = grade(alg, euler_matrix(alg, 2))
    x = E(4, 1, 3)
    assert not jordan_invertible(dec, x)
    with pytest.raises(NotInvertible):
        sl2_triple_from_nilpotent(dec, x)


def test_exp_ad_rotations():
    z0 = bracket(H0, K0)
    negz = mscale(-1, z0)
    assert exp_ad_on_plane(negz, 1, H0) == mscale(-1, H0)
    assert exp_ad_on_plane(negz, Q(1, 2), H0) == K0
    assert exp_ad_on_plane(negz, 0, H0) == H0
    with pytest.raises(ValueError):
        exp_ad_on_plane(negz, Q(1, 3), H0)
    with pytest.raises(ValueError):
        exp_ad_on_plane(H0, 1, K0)


def test_jordan_sl4():
    R = realize(get_entry("sl4R"))
    jd = R.jordan()
    basis = R.decomposition.plus
    assert all(jd.product(x, y) == jd.product(y, x) for x in basis for y in basis)
    assert all(jd.product(jd.e, x) == x for x in basis)
    assert jd.product(jd.e, jd.e) == jd.e
    with pytest.raises(ValueError):
        jordan_build(R.decomposition, jd.e, mscale(2, jd.f))


def test_jordan_sl2_is_one_dimensional():
    R = realize(get_entry("sl2R"))
    assert len(R.decomposition.plus) == 1


def test_jordan_polynomials_on_frame():
    R = realize(get_entry("sp6R"))
    jd = R.jordan()
    x = R.x_of((1, 1, -1))
    assert jordan_min_poly(jd, x) == [-1, 0, 1]
    # (t - 1)^2 (t + 1) = t^3 - t^2 - t + 1
    assert jordan_char_poly(jd, x) == [1, -1, -1, 1]
    assert jordan_norm(jd, x) == -1


def test_so22_identities():
    rep = so22_report()
    assert rep["passed"], [k for k, v in rep["checks"].items() if not v]


@pytest.mark.parametrize("entry", [e for e in load_catalog() if e.matrix_level], ids=lambda e: e.slug)
def test_realizations(entry):
    R = realize(entry)
    assert len(R.decomposition.plus) == entry.g1_dimension
    assert R.verify_frame()
    if entry.symmetric:
        assert len(R.frame) == entry.rank_r
        for c in R.frame:
            z = mscale(Q(1, 2), tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(c, transpose(c))))
            assert transpose(z) == mscale(-1, z)


def test_classification_entries_refused():
    with pytest.raises(RealizationUnavailable):
        realize(get_entry("e7R"))


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([("sl", 4), ("sp", 2), ("so", 2, 3), ("so", 3, 4), ("sp", 3)]), st.integers(0, 10**6))
def test_random_roundtrip_and_ad_cubed(params, seed):
    R = realize_params(params)
    dec = R.decomposition
    rng = Random(seed)
    x = random_g1(dec, rng, 2)
    alg = dec.algebra
    assert all(is_zero(bracket(x, bracket(x, bracket(x, b)))) for b in alg.basis)
    invertible = jordan_invertible(dec, x)
    try:
        sl2_triple_from_nilpotent(dec, x)
        built = True
    except NotInvertible:
        built = False
    assert built == invertible
    if invertible:
        assert pair_roundtrip(dec, x)
        _, k = sl2_triple_from_nilpotent(dec, x)
        assert is_orthogonal_pair(dec, k) and EulerPair(dec.h, k).sl2_relations()


@settings(max_examples=20, deadline=None)
@given(st.sampled_from([("sl", 3), ("so", 2, 3), ("sp", 2)]), st.integers(0, 10**6))
def test_tau_is_automorphism(params, seed):
    alg = build_algebra(*params)
    dec = grade(alg, euler_matrix(alg, 1 if params[0] == "sl" else None))
    rng = Random(seed)
    x = alg.combine([rng.randint(-2, 2) for _ in alg.basis])
    y = alg.combine([rng.randint(-2, 2) for _ in alg.basis])
    assert tau_apply(dec, bracket(x, y)) == bracket(tau_apply(dec, x), tau_apply(dec, y))
    assert tau_apply(dec, tau_apply(dec, x)) == x
