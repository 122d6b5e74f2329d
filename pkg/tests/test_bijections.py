import pytest

from nestcross import (
    BarredPermutation,
    Filling,
    HattedPermutation,
    Matching,
    MarkedMatching,
    Permutation,
    comp,
    fill_stats,
    filling_predicates,
    match_stats,
    perm_stats,
)
from nestcross import bijections as bij
from nestcross import enumeration as en
from nestcross.core import boxcomp

RUNNING = Filling.from_alpha([1, 2, 3, 4, 4, 4, 5, 5, 6], [1, 2, 1, 2, 1, 1, 1, 4, 5])
RUNNING_MATCHING = Matching(
    [(1, 6), (7, 9), (2, 10), (8, 12), (3, 13), (4, 14), (5, 16), (11, 17), (15, 18)]
)
DOT = Filling([1], [(1, 1)])
STAIR_TOP = Filling.from_alpha([1, 2, 3, 4, 5], [{1}, {1}, {1, 3}, {3}, {2, 3}])
STAIR_BOTTOM = Filling.from_alpha([1, 2, 3, 4, 5], [{1}, {1}, {1}, {1, 4}, {3, 4}])


def test_phi_running_example():
    bp = bij.phi(RUNNING)
    assert bp == BarredPermutation(Permutation([7, 3, 5, 6, 4, 1, 8, 9, 2]), {5, 6, 8})
    assert str(bp) == "7 3 5̄ 6̄ 4 1 8̄ 9 2"
    assert bij.phi_inv(bp) == RUNNING


def test_phi_block_history():
    steps = list(bij.phi_steps(RUNNING))
    assert steps[1] == [[1], [2]]
    assert steps[4] == [[3, 5], [4], [1], [2]]
    assert steps[-1] == [[7], [3, 5, 6], [4], [1, 8], [9], [2]]


def test_phi_silly_running_example():
    hp = bij.phi_silly(RUNNING)
    assert hp == HattedPermutation(Permutation([5, 7, 6, 3, 4, 1, 8, 9, 2]), {4, 5, 7})
    assert bij.phi_silly_inv(hp) == RUNNING


def test_single_dot_images():
    assert bij.phi(DOT) == BarredPermutation(Permutation([1]))
    assert bij.phi_silly(DOT) == HattedPermutation(Permutation([1]))
    assert bij.f_marked(DOT) == MarkedMatching(Matching([(1, 2)]))
    assert bij.psi(Matching([(1, 2)])) == DOT
    assert bij.g(DOT) == DOT
    assert bij.iota(DOT) == DOT
    assert bij.leftcross_to_perm(Matching([(1, 2)])) == Permutation([1])


def test_f_running_example():
    mm = bij.f_marked(RUNNING)
    assert mm.base == RUNNING_MATCHING and mm.marks == {5, 6, 8}
    assert bij.f_marked_inv(mm) == RUNNING


def test_psi_of_running_matching():
    T = bij.psi(RUNNING_MATCHING)
    assert T == Filling.from_alpha([1, 2, 2, 3, 3, 3, 4, 4, 4], [1, 2, 1, 2, 1, 1, 1, 3, 4])
    assert bij.psi_inv(T) == RUNNING_MATCHING
    assert T == bij.remove_empty_rows(RUNNING)


def test_strict_filling_behind_psi():
    strict = bij.strict_filling_of(RUNNING_MATCHING)
    assert strict == Filling(
        [5, 7, 7, 8, 8, 8, 9, 9, 9],
        [(1, 1), (2, 6), (3, 2), (4, 7), (5, 3), (6, 4), (7, 5), (8, 8), (9, 9)],
    )
    assert bij.flatten(strict) == bij.psi(RUNNING_MATCHING)
    assert bij.matching_of_strict(strict) == RUNNING_MATCHING


def test_steepen_example():
    T = Filling([1, 1, 2, 4, 4, 6], [(2, 1), (4, 2), (5, 4), (6, 3), (6, 5), (6, 6)])
    assert bij.steepen(T) == Filling([1, 2, 4, 6], [(1, 1), (3, 2), (3, 4), (4, 3), (4, 5), (4, 6)])


def test_steepen_fixes_steep_fillings():
    for T in en.staircase_column_positive_fillings(4):
        assert bij.steepen(T) == T


def test_steepen_of_flat_pair():
    top = Filling.from_alpha([1, 2, 3, 3, 4, 5, 5], [1, 1, 3, 1, 3, 3, 2])
    bottom = Filling.from_alpha([1, 2, 3, 4, 4, 5, 5], [1, 1, 1, 4, 1, 4, 3])
    assert bij.steepen(top) == STAIR_TOP
    assert bij.steepen(bottom) == STAIR_BOTTOM


def test_domain_errors():
    with pytest.raises(bij.DomainError):
        bij.phi(Filling([1, 1], [(1, 1)]))
    with pytest.raises(bij.DomainError):
        bij.phi(Filling([2], [(1, 1)]))
    with pytest.raises(bij.DomainError):
        bij.psi(Matching([(1, 4), (2, 3)]))
    with pytest.raises(bij.DomainError):
        bij.leftcross_to_perm(Matching([(1, 4), (2, 3)]))
    with pytest.raises(bij.DomainError):
        bij.g(Filling([1, 2], [(1, 1)]))
    with pytest.raises(bij.DomainError):
        bij.g_inv(Filling([2, 2], [(1, 1), (2, 1)]))
    with pytest.raises(bij.DomainError):
        bij.steepen(Filling([1, 1], [(1, 1), (2, 1)]))
    with pytest.raises(bij.DomainError):
        bij.flatten(Filling([1, 1], [(1, 1)]))
    with pytest.raises(bij.DomainError):
        bij.psi_inv(RUNNING)


def test_g_on_staircase_example():
    rho = bij.g(STAIR_TOP)
    assert rho == Filling([5] * 5, [(1, 2), (2, 1), (3, 1), (3, 5), (4, 4), (5, 2), (5, 3)])
    assert bij.transpose(rho) == Filling(
        [5] * 5, [(1, 3), (2, 2), (3, 1), (4, 1), (4, 5), (5, 3), (5, 4)]
    )
    assert bij.g_inv(rho) == STAIR_TOP


def test_iota_swaps_staircase_pair():
    assert bij.iota(STAIR_TOP) == STAIR_BOTTOM
    assert bij.iota(STAIR_BOTTOM) == STAIR_TOP
    top, bottom = fill_stats(STAIR_TOP), fill_stats(STAIR_BOTTOM)
    assert (top.min, top.rmax) == (3, 4)
    assert (bottom.min, bottom.rmax) == (4, 3)


@pytest.mark.parametrize("ell", range(1, 7))
def test_phi_and_phi_silly_round_trip(ell):
    barred, hatted = set(), set()
    for T in en.flat_column_strict_fillings(ell):
        bp, hp = bij.phi(T), bij.phi_silly(T)
        assert bij.phi_inv(bp) == T and bij.phi_silly_inv(hp) == T
        barred.add(bp)
        hatted.add(hp)
    assert barred == set(en.barred_perms(ell))
    assert hatted == set(en.hatted_perms(ell))


@pytest.mark.parametrize("ell", range(1, 7))
def test_phi_transfers(ell):
    for T in en.flat_column_strict_fillings(ell):
        bp, ft = bij.phi(T), fill_stats(T)
        ps, X = perm_stats(bp.base), T.X
        assert (comp(bp), ft.Max, ft.Rmax, bp.X) == (comp(T), ps.Rmin, ps.Rmax, X)
        assert ft.Des & X == ps.P & X
        assert ft.Asc & X == ps.Q & X
        assert ft.Rep & X == ps.R & X


@pytest.mark.parametrize("ell", range(1, 7))
def test_phi_silly_transfers(ell):
    for T in en.flat_column_strict_fillings(ell):
        hp, ft = bij.phi_silly(T), fill_stats(T)
        ps, X = perm_stats(hp.base), T.X
        assert (comp(hp), ft.Max, ft.Rmax, hp.X_plus) == (comp(T), ps.Rmin, ps.Rmax, X)
        assert ft.Des & X == ps.P_silly_plus & X
        assert (ft.Asc | ft.Rep) & X == ps.Q_silly_plus & X


@pytest.mark.parametrize("ell", range(1, 7))
def test_f_round_trip_and_transfers(ell):
    images = set()
    for T in en.flat_column_strict_fillings(ell):
        mm, ft = bij.f_marked(T), fill_stats(T)
        assert bij.f_marked_inv(mm) == T
        images.add(mm)
        ms, X = match_stats(mm.base), T.X
        assert (comp(mm), ft.Min, mm.X) == (comp(T), ms.Min, X)
        assert ft.Des & X == ms.Rne & X
        assert ft.Asc & X == ms.Rcr_single & X
        assert ft.Rep & X == ms.LRcr & X
    assert images == set(en.marked_matchings(ell))


@pytest.mark.parametrize("n", range(1, 7))
def test_psi_is_a_bijection(n):
    fillings = set()
    for M in en.nlm_matchings(n):
        T = bij.psi(M)
        flags = filling_predicates(T)
        assert flags.flat and flags.column_strict and flags.row_positive
        assert bij.psi_inv(T) == M
        fillings.add(T)
    expected = {T for T in en.flat_column_strict_fillings(n) if filling_predicates(T).row_positive}
    assert fillings == expected


@pytest.mark.parametrize("ell", range(1, 6))
def test_g_round_trip_and_transfers(ell):
    images = set()
    for T in en.staircase_column_positive_fillings(ell):
        rho = bij.g(T)
        assert filling_predicates(rho).enriched_permutation
        assert bij.g_inv(rho) == T
        images.add(rho)
        a, b = fill_stats(T), fill_stats(rho)
        assert (rho.ell, rho.n, boxcomp(rho), b.lmin, b.rmax) == (
            T.ell,
            T.n,
            comp(T),
            a.min,
            a.rmax,
        )
    if ell <= 4:
        assert images == set(en.enriched_fillings_by_filter(ell))


@pytest.mark.parametrize("ell", range(1, 6))
def test_iota_is_an_involution(ell):
    for T in en.staircase_column_positive_fillings(ell):
        U = bij.iota(T)
        assert bij.iota(U) == T
        a, b = fill_stats(T), fill_stats(U)
        assert (a.min, a.rmax) == (b.rmax, b.min)
        assert (U.n, U.ell, comp(U)) == (T.n, T.ell, comp(T))


@pytest.mark.parametrize("n", range(1, 7))
def test_leftcross_map(n):
    images = set()
    for M in en.nlm_matchings(n):
        pi = bij.leftcross_to_perm(M)
        images.add(pi)
        ms, ps = match_stats(M), perm_stats(pi)
        assert ms.Lcr == ps.Ascbottom
        assert ms.LRcr == ps.R
    assert images == set(en.perms(n))


def test_flatten_then_steepen_round_trip_on_strict_fillings():
    for M in en.nlm_matchings(4):
        strict = bij.strict_filling_of(M)
        assert filling_predicates(strict).strict
        assert bij.matching_of_strict(strict) == M


def test_maps_reject_the_wrong_kind_of_object():
    with pytest.raises(bij.DomainError):
        bij.phi_inv(Permutation([3, 4, 1, 2]))
    with pytest.raises(bij.DomainError):
        bij.f_marked_inv(RUNNING_MATCHING)
    with pytest.raises(bij.DomainError):
        bij.psi(RUNNING)
    with pytest.raises(bij.DomainError):
        bij.g(Permutation([1]))
