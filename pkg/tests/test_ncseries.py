from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from nestcross import enumeration as en
from nestcross import ncseries as nc
from nestcross import perm_stats, match_stats
from nestcross.ncseries import NCSeries
from nestcross.poly import R, s

AB = ("x", "y")
DEG = 4
WORDS = [w for k in range(DEG + 1) for w in product(AB, repeat=k)]


def letter(name, alphabet=AB, d=3):
    return NCSeries.letter(alphabet, d, name)


def series_strategy(constant=None):
    coeff = st.integers(-3, 3).map(lambda c: R(c)) | st.tuples(
        st.integers(-2, 2), st.integers(0, 2)
    ).map(lambda ce: R(ce[0]) * s ** ce[1])

    def build(pairs, c0):
        terms = dict(pairs)
        if constant is not None:
            terms[()] = R(c0)
        return NCSeries(AB, DEG, terms)

    return st.builds(
        build,
        st.lists(st.tuples(st.sampled_from(WORDS), coeff), max_size=8),
        st.sampled_from(constant or [0]),
    )


def convolve(a, b):
    out = {}
    for u, cu in a.terms.items():
        for v, cv in b.terms.items():
            if len(u) + len(v) <= DEG:
                out[u + v] = out.get(u + v, R.zero) + cu * cv
    return NCSeries(AB, DEG, out)


def test_product_concatenates_words():
    x, y = letter("x"), letter("y")
    assert (x * y).terms == {("x", "y"): 1}
    assert x * y != y * x


def test_geometric_inverse():
    t = NCSeries.letter(("t",), 3, "t")
    assert (1 - t).inverse() == NCSeries(
        ("t",), 3, {(): 1, ("t",): 1, ("t", "t"): 1, ("t",) * 3: 1}
    )
    one = NCSeries.scalar(("t",), 3)
    assert one.inverse() == one


def test_inverse_rejects_non_unit_constant():
    with pytest.raises(ArithmeticError):
        (letter("x") + 2).inverse()
    with pytest.raises(ArithmeticError):
        (letter("x") + s).inverse()


def test_left_strip():
    v = letter("v", ("v", "x", "y"))
    x, y = letter("x", ("v", "x", "y")), letter("y", ("v", "x", "y"))
    out = (v * x + v * y).left_strip("v")
    assert out.terms == {("x",): 1, ("y",): 1} and out.max_degree == 2
    with pytest.raises(ArithmeticError):
        x.left_strip("v")
    with pytest.raises(ArithmeticError):
        (v + 1).left_strip("v")


def test_alphabet_mismatch_is_rejected():
    with pytest.raises(ValueError):
        letter("x") + NCSeries.letter(("x", "z"), 3, "x")
    with pytest.raises(ValueError):
        NCSeries(AB, 3, {("q",): 1})


def test_truncation_follows_the_less_precise_operand():
    a = NCSeries.letter(AB, 2, "x")
    b = NCSeries.letter(AB, 4, "y")
    assert (a * b).max_degree == 2 and (a + b).max_degree == 2


def test_text_round_trip():
    S = (1 - letter("x") * s - letter("y") * letter("x") * 2).inverse()
    text = S.to_text()
    assert text.splitlines()[0] == "1\t1"
    assert NCSeries.from_text(text, AB, 3) == S


@settings(max_examples=100)
@given(series_strategy(), series_strategy(), series_strategy())
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c
    assert a + b == b + a
    assert a - a == NCSeries(AB, DEG)


@settings(max_examples=100)
@given(series_strategy(), series_strategy())
def test_product_matches_direct_convolution(a, b):
    assert a * b == convolve(a, b)


@settings(max_examples=100)
@given(series_strategy(constant=[1, -1]))
def test_inverse_on_both_sides(a):
    one = NCSeries.scalar(AB, DEG)
    inv = a.inverse()
    assert inv * a == one and a * inv == one


def test_inverse_of_block_factor_multiplies_back():
    d = 5
    one = NCSeries.scalar(nc.NC_ALPHABET, d)
    u, v, w = (NCSeries.letter(nc.NC_ALPHABET, d, a) for a in "uvw")
    A = one + u * (one - w).inverse()
    inner = (A * A - 1).left_strip("u").prepend("v")
    base = one - inner
    assert base * base.inverse() == one and base.inverse() * base == one


def test_first_block_series_in_silly_variant():
    d = 4
    one = NCSeries.scalar(nc.NC_ALPHABET, d)
    v = NCSeries.letter(nc.NC_ALPHABET, d, "v")
    expected = (one - v * s).inverse() - 1
    assert nc.eval_F(1, "max", "silly-s", d) == expected


@pytest.mark.parametrize("variant", ["general-w", "silly-s", "full"])
@pytest.mark.parametrize("k", [1, 2, 3])
@pytest.mark.parametrize("mu", ["min", "max"])
def test_block_series_match_direct_sum(variant, k, mu):
    d = 4
    closed = nc.eval_F(k, mu, variant, d)
    brute = nc.brute_F(k, mu, d)
    if variant == "general-w":
        brute = nc.set_s(brute)
    elif variant == "silly-s":
        brute = brute.substitute({"w": NCSeries(nc.NC_ALPHABET, d)})
    assert closed == brute


def test_max_and_min_blocks():
    # with w = 0 both factors are polynomials in u alone, so they commute
    assert nc.eval_F(2, "max", "silly-s", 5) == nc.eval_F(2, "min", "silly-s", 5)
    assert nc.eval_F(2, "max", "full", 4) != nc.eval_F(2, "min", "full", 4)
    assert nc.brute_F(2, "max", 4) != nc.brute_F(2, "min", 4)


@pytest.mark.parametrize("variant", nc.VARIANTS)
def test_main_series_degree_one(variant):
    S = nc.eval_main(variant, 3)
    degree_one = {w: c for w, c in S.terms.items() if len(w) == 1}
    assert degree_one == {("t",): (s if variant != "general-w" else R(1))}


def test_brute_series_size_one():
    assert nc.brute_series(1, "perms", nc.perm_pqr, nc.BAR_ALPHABET).terms == {("t",): s}


@pytest.mark.parametrize("top", [2, 3, 4])
def test_word_coefficient_counts_objects(top):
    word = tuple("x" if i == top else "t" for i in range(1, 5))
    perms_side = nc.set_s(nc.brute_series(4, "perms", nc.perm_pqr, nc.BAR_ALPHABET))
    nlm_side = nc.set_s(nc.brute_series(4, "nlm", nc.nlm_rne_rcr_lrcr, nc.BAR_ALPHABET))
    by_perm = sum(
        1 for p in en.perms(4) if (lambda q: q.P == {top} and not q.Q and not q.R)(perm_stats(p))
    )
    by_matching = sum(
        1
        for m in en.nlm_matchings(4)
        if (lambda q: q.Rne == {top} and not q.Rcr_single and not q.LRcr)(match_stats(m))
    )
    # a value-2 ascent top always sits right after 1, so it is never long
    assert (by_perm == 0) == (top == 2)
    assert perms_side.coefficient(word) == nlm_side.coefficient(word) == by_perm == by_matching


@pytest.mark.slow
def test_main_series_equals_both_brute_series():
    d = 5
    main = nc.eval_main("general-w", d)
    for family, mapper in (("perms", nc.perm_pqr), ("nlm", nc.nlm_rne_rcr_lrcr)):
        brute = nc.brute_series(d, family, mapper, nc.BAR_ALPHABET)
        assert nc.set_s(nc.bar_to_uvw(brute)) == main


def test_silly_main_series_equals_three_brute_series():
    d = 4
    main = nc.eval_main("silly-s", d)
    for family, mapper in (
        ("perms", nc.perm_p_qr),
        ("perms", nc.perm_silly),
        ("nlm", nc.nlm_rne_rcr),
    ):
        assert nc.bar_to_uvw(nc.brute_series(d, family, mapper, nc.BAR_ALPHABET)) == main


def test_abelianized_main_series_counts_permutations():
    # u = v = w = 0 sends each of x, y, z back to t
    S = nc.eval_main("general-w", 5)
    assert S.abelianize({"t": 1, "u": 0, "v": 0, "w": 0})[1:] == [1, 2, 6, 24, 120]


def test_spelling_helpers():
    assert nc.spell(()) == "1" and nc.spell(("t", "x")) == "t·x"
    assert nc.parse_word("t·x") == ("t", "x") and nc.parse_word("1") == ()
    assert nc.monomial_word(4, {"x": {2}, "y": {4}}) == ("t", "x", "t", "y")
