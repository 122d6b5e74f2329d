from math import factorial

import pytest

from nestcross import Matching, PartitionShape, Permutation, filling_predicates
from nestcross import enumeration as en


def test_inversion_table_links_permutation_and_matching():
    assert en.perm_from_inversion_table((1, 2, 1, 2)) == Permutation([3, 4, 1, 2])
    assert en.nlm_from_inversion_table((1, 2, 1, 2)) == Matching([(1, 3), (4, 6), (2, 7), (5, 8)])


@pytest.mark.parametrize("n", range(1, 9))
def test_nlm_matchings_are_counted_by_factorials(n):
    ms = list(en.nlm_matchings(n))
    assert len(ms) == len(set(ms)) == factorial(n)
    if n <= 4:
        assert all(not m.has_left_nesting() for m in ms)


@pytest.mark.parametrize("n", range(1, 6))
def test_constructive_stream_matches_filter(n):
    assert list(en.nlm_matchings(n)) == [
        en.nlm_from_inversion_table(a) for a in en.inversion_tables(n)
    ]
    assert set(en.nlm_matchings(n)) == set(en.nlm_matchings_by_filter(n))


def test_small_counts():
    assert len(list(en.perms(3))) == 6
    assert len(list(en.nlm_matchings(4))) == 24
    assert len(list(en.all_matchings(4))) == 105


def test_caps():
    with pytest.raises(en.BoundExceeded):
        en.perms(10)
    with pytest.raises(en.BoundExceeded):
        en.nlm_matchings(en.MAX_N + 1)
    with pytest.raises(en.BoundExceeded):
        list(en.all_matchings(8))
    with pytest.raises(ValueError):
        en.perms(0)
    with pytest.raises(en.BoundExceeded):
        list(en.shape_fillings(PartitionShape.square(5)))


@pytest.mark.parametrize("ell", range(1, 5))
def test_shape_fillings_filtered_against_direct_generators(ell):
    cs = set()
    for shape in en.flat_shapes(ell):
        cs |= set(en.shape_fillings(shape, lambda T: filling_predicates(T).column_strict))
    assert cs == set(en.flat_column_strict_fillings(ell))
    stair = PartitionShape.staircase(ell)
    positive = set(en.shape_fillings(stair, lambda T: filling_predicates(T).column_positive))
    assert positive == set(en.staircase_column_positive_fillings(ell))
    assert len(list(en.shape_fillings(stair))) == 2 ** len(stair.cells())


def test_decorated_families_are_duplicate_free():
    for gen in (en.barred_perms, en.hatted_perms, en.marked_matchings):
        objs = list(gen(5))
        assert len(objs) == len(set(objs))
