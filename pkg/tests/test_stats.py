import pytest
from hypothesis import given, strategies as st

from nestcross import Filling, Matching, Permutation, fill_stats, match_stats, perm_stats
from nestcross import enumeration as en
from nestcross.core import silly_ascents

RUNNING = Filling.from_alpha([1, 2, 3, 4, 4, 4, 5, 5, 6], [1, 2, 1, 2, 1, 1, 1, 4, 5])
RUNNING_MATCHING = Matching(
    [(1, 6), (7, 9), (2, 10), (8, 12), (3, 13), (4, 14), (5, 16), (11, 17), (15, 18)]
)


def test_long_and_short_ascents():
    st_ = perm_stats(Permutation([7, 3, 5, 6, 4, 1, 8, 9, 2]))
    assert st_.P == {5} and st_.Q == {8} and st_.R == {6, 9}
    assert st_.Rmin == {1, 2} and st_.Rmax == {2, 9}


def test_silly_ascents():
    st_ = perm_stats(Permutation([5, 7, 6, 3, 4, 1, 8, 9, 2]))
    assert st_.P_silly == {4} and st_.Q_silly == {5, 7, 8}
    assert st_.P_silly_plus == {5} and st_.Q_silly_plus == {6, 8, 9}


def test_p_silly_of_3412():
    assert perm_stats(Permutation([3, 4, 1, 2])).p_silly == 1


def test_ascent_bottoms():
    st_ = perm_stats(Permutation([2, 3, 1, 5, 4]))
    assert st_.Ascbottom == {2, 1} and st_.Ascbottom_long == {1}
    assert st_.Des == {1, 4}


def test_running_matching_statistics():
    st_ = match_stats(RUNNING_MATCHING)
    assert st_.Rne == {3, 5}
    assert st_.Rcr == {6, 8, 9}
    assert st_.LRcr == {6}
    assert st_.Lcr == {1, 2, 3, 5, 6}
    assert st_.Min == {1, 3, 5, 6, 7}
    assert st_.Rcr_single == {8, 9}
    assert st_.Lcr_single == {1, 2, 3, 6}
    assert not st_.has_left_nesting


def test_small_matching_with_right_nesting():
    assert match_stats(Matching([(1, 3), (4, 6), (2, 7), (5, 8)])).Rne == {3}


def test_single_arc():
    st_ = match_stats(Matching([(1, 2)]))
    assert not (st_.Radj or st_.Ladj or st_.Rne or st_.Rcr or st_.Lcr or st_.LRcr)
    assert st_.min == 1 and st_.inter == 1 and st_.comp == 1


def test_running_filling_statistics():
    st_ = fill_stats(RUNNING)
    assert st_.X == {5, 6, 8}
    assert st_.Min == {1, 3, 5, 6, 7}
    assert st_.Max == {1, 2}
    assert st_.Rmax == {2, 9}
    assert st_.Des == {3, 5}
    assert st_.Asc == {2, 4, 8, 9}
    assert st_.Rep == {6, 7}
    assert st_.rmax == 2


def test_single_dot_filling():
    st_ = fill_stats(Filling([1], [(1, 1)]))
    assert st_.Min == st_.Max == st_.Rmax == {1}
    assert not (st_.Des or st_.Asc or st_.Rep)
    assert st_.lmin == 1


def test_descent_sets_need_column_strict_input():
    st_ = fill_stats(Filling([1, 2], [(2, 1), (2, 2)]))
    for name in ("Des", "Asc", "Rep", "Rmax"):
        with pytest.raises(ValueError):
            getattr(st_, name)
    assert st_.min == 1


def test_lmin_and_rmax_on_staircase_filling():
    T = Filling.from_alpha([1, 2, 3, 4, 5], [{1}, {1}, {1, 3}, {3}, {2, 3}])
    st_ = fill_stats(T)
    assert st_.min == 3 and st_.rmax == 4


@pytest.mark.parametrize("n", range(1, 8))
def test_silly_ascents_split_and_count(n):
    for p in en.perms(n):
        s = perm_stats(p)
        assert s.P_silly | s.Q_silly == s.Asc_silly and not s.P_silly & s.Q_silly
        assert len(s.Asc_silly) == s.asc
        assert s.P | s.Q | s.R == s.Asc
        assert s.p + s.q + s.adjasc == s.asc
        assert s.des == n - 1 - s.asc


@pytest.mark.parametrize("n", range(1, 7))
def test_left_and_right_adjacencies_balance(n):
    for m in en.all_matchings(n):
        s = match_stats(m)
        assert s.radj == s.ladj


@pytest.mark.parametrize("n", range(1, 8))
def test_right_adjacency_partition(n):
    for m in en.nlm_matchings(n):
        s = match_stats(m)
        parts = [s.Rne, s.Rcr_single, s.LRcr]
        assert set().union(*parts) == s.Radj
        assert sum(map(len, parts)) == s.radj
        assert s.inter == n - s.radj


@pytest.mark.parametrize("ell", range(1, 7))
def test_descents_ascents_repeats_partition(ell):
    for T in en.flat_column_strict_fillings(ell):
        s = fill_stats(T)
        assert s.Des | s.Asc | s.Rep == set(range(2, ell + 1))
        assert s.des + s.asc + s.rep == ell - 1
        assert s.rmax == len(s.Rmax)


@given(st.permutations(list(range(1, 9))))
def test_silly_ascents_avoid_the_maximum(word):
    assert len(word) not in silly_ascents(word)
