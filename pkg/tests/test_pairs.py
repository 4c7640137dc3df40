from itertools import product

import pytest
from hypothesis import given, strategies as st

from eulerlab import pairs
from eulerlab.catalog import get_entry, load_catalog

SYMMETRIC = [e for e in load_catalog() if e.symmetric]


def test_su22_has_three_classes_with_k1_symmetric():
    e = get_entry("su22")
    classes = pairs.pair_classes(e)
    assert [c.j for c in classes] == [0, 1, 2]
    assert [c.j for c in classes if pairs.is_symmetric_pair(e, c)] == [1]


def test_representatives():
    assert pairs.representative(3, 1) == (1, -1, -1)
    assert pairs.representative(2, 2) == (1, 1)


@pytest.mark.parametrize("slug,sizes", [("su22", [1, 1, 2]), ("sp6R", [1, 1, 3, 3]), ("sl6R", [4, 4]),
                                        ("e7C", [8]), ("so44", [2, 2])])
def test_orbit_cell_sizes(slug, sizes):
    assert sorted(len(c) for c in pairs.orbit_cells(get_entry(slug))) == sizes


def test_non_symmetric_entry_refused():
    with pytest.raises(ValueError):
        pairs.pair_classes(get_entry("so33_h3"))


def test_bad_sign_vector_refused():
    with pytest.raises(ValueError):
        pairs.classify_sign_vector(get_entry("su22"), (1, 0))


@pytest.mark.parametrize("entry", SYMMETRIC, ids=lambda e: e.slug)
def test_classification_constant_on_orbit_cells(entry):
    for cell in pairs.orbit_cells(entry):
        assert len({pairs.classify_sign_vector(entry, s).j for s in cell}) == 1


@given(st.sampled_from(SYMMETRIC), st.data())
def test_representative_lies_in_its_class(entry, data):
    r = entry.rank_r
    sigma = data.draw(st.tuples(*[st.sampled_from((1, -1))] * r))
    cls = pairs.classify_sign_vector(entry, sigma)
    assert cls.representative in pairs.orbit_of_sign_vectors(entry, sigma)


@pytest.mark.parametrize("entry", SYMMETRIC, ids=lambda e: e.slug)
def test_symmetry_matches_oracle(entry):
    for c in pairs.pair_classes(entry):
        assert pairs.is_symmetric_pair(entry, c) == pairs.is_symmetric_pair_oracle(entry, c)


def test_summary():
    s = pairs.summary(get_entry("sl4R"))
    assert s["sigma_star_type"] == "D"
    assert [c["symmetric"] for c in s["classes"]] == [True, True]
