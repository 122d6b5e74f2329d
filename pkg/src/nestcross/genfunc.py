"""Commutative generating functions, expanded exactly as truncated series in t.

Rational factors such as ``1/(x - y)`` are never evaluated.  Each difference
is a formal ring variable (``_a``, ``_b``, ``_c``) while the series is built,
is divided out with an exact-quotient check, and only then is replaced by the
difference it stands for.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import poly
from .enumeration import nlm_matchings, perms
from .ncseries import NCSeries
from .poly import Coeff, Poly, R, fa, fb, fc, s, r, ups, x, y, z
from .stats import match_stats, perm_stats

# -- truncated series in t ------------------------------------------------------


@dataclass(frozen=True)
class CommSeries:
    """``coeffs[n]`` is the coefficient of t^n for n = 0..max_n."""

    max_n: int
    coeffs: tuple[Poly, ...] = field(default=())

    def __post_init__(self):
        cs = tuple(R(c) for c in self.coeffs)[: self.max_n + 1]
        cs = cs + (R.zero,) * (self.max_n + 1 - len(cs))
        object.__setattr__(self, "coeffs", cs)

    def __getitem__(self, n: int) -> Poly:
        return self.coeffs[n]

    @classmethod
    def const(cls, max_n: int, c: Coeff = 1) -> "CommSeries":
        return cls(max_n, (R(c),))

    @classmethod
    def t(cls, max_n: int) -> "CommSeries":
        return cls(max_n, (R.zero, R.one))

    def __add__(self, other) -> "CommSeries":
        other = self._coerce(other)
        return CommSeries(self.max_n, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "CommSeries":
        return CommSeries(self.max_n, tuple(-a for a in self.coeffs))

    def __sub__(self, other) -> "CommSeries":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "CommSeries":
        return self._coerce(other) - self

    def __mul__(self, other) -> "CommSeries":
        if not isinstance(other, CommSeries):
            c = R(other)
            return CommSeries(self.max_n, tuple(c * a for a in self.coeffs))
        out = [R.zero] * (self.max_n + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j in range(self.max_n + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return CommSeries(self.max_n, tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "CommSeries":
        out = CommSeries.const(self.max_n)
        for _ in range(k):
            out = out * self
        return out

    def _coerce(self, other) -> "CommSeries":
        if isinstance(other, CommSeries):
            if other.max_n != self.max_n:
                raise ValueError("truncation mismatch")
            return other
        return CommSeries.const(self.max_n, other)

    def inverse(self) -> "CommSeries":
        c0 = self.coeffs[0]
        if not (c0.is_ground and abs(int(c0.LC)) == 1):
            raise ArithmeticError("constant term is not a unit")
        unit = int(c0.LC)
        rest = CommSeries.const(self.max_n) - self * unit
        total, power = CommSeries.const(self.max_n), CommSeries.const(self.max_n)
        for _ in range(self.max_n):
            power = power * rest
            total = total + power
        return total * unit

    def strip(self, divisor: Poly) -> "CommSeries":
        return CommSeries(self.max_n, tuple(poly.strip(c, divisor) for c in self.coeffs))

    def subs(self, mapping) -> "CommSeries":
        return CommSeries(self.max_n, tuple(poly.subs(c, mapping) for c in self.coeffs))

    def geometric_tail(self) -> "CommSeries":
        """``(1 - S)^-1 - 1`` for a series without constant term."""
        return (1 - self).inverse() - 1

    def to_rows(self, start: int = 1) -> list[tuple[int, str, int]]:
        """(n, monomial label, coefficient) rows for CSV export."""
        return [
            (n, label, c)
            for n in range(start, self.max_n + 1)
            for label, c in poly.coefficient_table(self.coeffs[n])
        ]


def _sum_of_products(max_n: int, factor) -> CommSeries:
    """Sum over m >= 1 of the product, k = 1..m, of ``factor(k)``.

    Every factor is divisible by t, so m stops at ``max_n``.
    """
    total = CommSeries(max_n)
    prod = CommSeries.const(max_n)
    for m in range(1, max_n + 1):
        prod = prod * factor(m)
        total = total + prod
    return total


# -- closed forms -------------------------------------------------------------


def _ratio_form(max_n: int, inner, a_div: Poly, subst) -> CommSeries:
    """Expand  sum_m prod_k  b^-1 [ (1 - b a^-1 E_k)^-1 - 1 ].

    ``inner(k)`` returns E_k with ``a_div`` (a monomial in the formal
    variables) dividing every coefficient; ``subst`` gives the final values.
    """

    def factor(k: int) -> CommSeries:
        G = inner(k).strip(a_div)
        return (G * fb).geometric_tail().strip(fb)

    return _sum_of_products(max_n, factor).subs(subst)


def eval_theorem_main_xyz(max_n: int) -> CommSeries:
    """Closed form for x^p y^q z^adjasc over permutations."""
    t = CommSeries.t(max_n)
    q = t * (1 - t * fc).inverse()
    return _ratio_form(
        max_n,
        lambda k: (1 + q * fa) ** k - 1,
        fa,
        {"_a": x - y, "_b": y - 1, "_c": z - y},
    )


def eval_theorem_main_sxy(max_n: int) -> CommSeries:
    """Closed form for s^rmin x^p y^(q + adjasc) over permutations."""
    t = CommSeries.t(max_n)
    return _ratio_form(
        max_n,
        lambda k: (1 + t * fa) ** (k - 1) * (1 + t * fa * s) - 1,
        fa,
        {"_a": x - y, "_b": y - 1},
    )


def _J(max_n: int, weight: Coeff) -> CommSeries:
    t = CommSeries.t(max_n)
    return _sum_of_products(
        max_n, lambda k: ((1 + t * fa) ** (k - 1) * (1 + t * fa * weight) - 1).strip(fa)
    )


def eval_conj20_formula(max_n: int) -> CommSeries:
    """Closed form for r^comp s^rmax x^p_silly over permutations."""
    num = _J(max_n, s) * r
    den = 1 + _J(max_n, 1) * (1 - r)
    return (num * den.inverse()).subs({"_a": x - 1})


def eval_fishburn(count: int) -> list[int]:
    """The first ``count`` Fishburn numbers f_0, f_1, ... .

    They are the coefficients of sum_{m >= 0} prod_k (1 - (1 - t)^k); the
    m = 0 term gives f_0 = 1 for the empty object, and f_n for n >= 1 counts
    permutations of size n avoiding the long-ascent pattern.
    """
    if count < 1:
        raise ValueError("count must be positive")
    t = CommSeries.t(count - 1)
    series = _sum_of_products(count - 1, lambda k: 1 - (1 - t) ** k) + 1
    return [int(series[n].LC) if series[n] else 0 for n in range(count)]


LEFTCROSS_VARIANTS = ("xyzups", "sxyups")


def eval_leftcrossing(max_n: int, variant: str = "xyzups") -> CommSeries:
    """Left-crossing refinement (the ``ups`` variable marks long or all ascents).

    The m = 0 term contributes only to t^0 and is included there.
    """
    t = CommSeries.t(max_n)
    if variant == "xyzups":
        q = t * (1 - t * fc).inverse()
        inner = lambda k: (1 + q * fa * ups) ** k - 1  # noqa: E731
        subst = {"_a": x - y, "_b": ups * y - 1, "_c": z - y * ups}
    elif variant == "sxyups":
        inner = lambda k: (1 + t * fa * ups) ** (k - 1) * (1 + t * fa * ups * s) - 1  # noqa: E731
        subst = {"_a": x - y, "_b": ups * y - 1}
    else:
        raise ValueError(f"unknown variant {variant!r}; expected one of {LEFTCROSS_VARIANTS}")
    return _ratio_form(max_n, inner, fa * ups, subst) + 1


# -- enumeration sides --------------------------------------------------------


def perm_sum(n: int, weight) -> Poly:
    return sum((weight(perm_stats(p)) for p in perms(n)), R.zero)


def matching_sum(n: int, weight) -> Poly:
    return sum((weight(match_stats(m)) for m in nlm_matchings(n)), R.zero)


def eval_conj21_identity(n: int) -> tuple[Poly, Poly]:
    """Both sides of the (rmin, p_silly, des) ~ (min, rne, inter - 1) identity."""
    w = poly.GEN["w"]
    left = perm_sum(n, lambda st: s**st.rmin * x**st.p_silly * w**st.des)
    right = matching_sum(n, lambda st: s**st.min * x**st.rne * w ** (st.inter - 1))
    return left, right


def conj21_from_closed_form(n: int, series: CommSeries | None = None) -> Poly:
    """The same table derived from the s, x, y closed form.

    The descents of a permutation are the n - 1 positions that are not
    (silly) ascents, so y^c turns into w^(n - 1 - b - c) for x^b y^c.
    """
    series = series or eval_theorem_main_sxy(n)
    xi, yi, wi = (poly.VARIABLES.index(v) for v in ("x", "y", "w"))
    out = R.zero
    for m, c in series[n].terms():
        e = list(m)
        e[wi] = n - 1 - e[xi] - e[yi]
        if e[wi] < 0:
            raise ArithmeticError("more ascents than gaps")
        e[yi] = 0
        out += R({tuple(e): c})
    return out


# -- noncommutative ascent-bottom series ----------------------------------------

ASCBOTTOM_ALPHABET = ("t", "z", "ups")


def eval_ascentbottom_nc(max_deg: int) -> NCSeries:
    """Sum over m of prod_k c [1 - c D (ups - t)]^-1 D t with c = m + 1 - k
    and D = (1 - (z - ups))^-1."""
    d = max_deg
    one = NCSeries.scalar(ASCBOTTOM_ALPHABET, d)
    t, zz, uu = (NCSeries.letter(ASCBOTTOM_ALPHABET, d, a) for a in ASCBOTTOM_ALPHABET)
    D = (one - (zz - uu)).inverse()

    def factor(c: int) -> NCSeries:
        return (one - D * (uu - t) * c).inverse() * D * t * c

    factors = {c: factor(c) for c in range(1, d + 1)}
    total = NCSeries(ASCBOTTOM_ALPHABET, d)
    for m in range(1, d + 1):
        prod = one
        for k in range(1, m + 1):
            prod = prod * factors[m + 1 - k]
        total = total + prod
    return total


# -- coefficient-level comparison helpers ---------------------------------------


def expected_main_xyz(n: int) -> tuple[Poly, Poly]:
    return (
        perm_sum(n, lambda st: x**st.p * y**st.q * z**st.adjasc),
        matching_sum(n, lambda st: x**st.rne * y**st.rcr_single * z**st.lrcr),
    )


def expected_main_sxy(n: int) -> tuple[Poly, Poly, Poly]:
    return (
        perm_sum(n, lambda st: s**st.rmin * x**st.p * y ** (st.q + st.adjasc)),
        perm_sum(n, lambda st: s**st.rmin * x**st.p_silly * y**st.q_silly),
        matching_sum(n, lambda st: s**st.min * x**st.rne * y**st.rcr),
    )


def expected_conj20(n: int) -> tuple[Poly, Poly]:
    return (
        perm_sum(n, lambda st: r**st.comp * s**st.rmax * x**st.p_silly),
        matching_sum(n, lambda st: r**st.comp * s**st.min * x**st.rne),
    )


def expected_leftcrossing(n: int, variant: str) -> tuple[Poly, ...]:
    if variant == "xyzups":
        return (
            perm_sum(n, lambda st: x**st.p * y**st.q * z**st.adjasc * ups**st.asc_long),
            matching_sum(
                n, lambda st: x**st.rne * y**st.rcr_single * z**st.lrcr * ups**st.lcr_single
            ),
        )
    return (
        perm_sum(n, lambda st: s**st.rmin * x**st.p * y ** (st.q + st.adjasc) * ups**st.asc),
        perm_sum(n, lambda st: s**st.rmin * x**st.p_silly * y**st.q_silly * ups**st.asc),
        matching_sum(n, lambda st: s**st.min * x**st.rne * y**st.rcr * ups**st.lcr),
    )


def fishburn_counts(n: int) -> tuple[int, int]:
    return (
        sum(1 for p in perms(n) if perm_stats(p).p == 0),
        sum(1 for m in nlm_matchings(n) if match_stats(m).rne == 0),
    )


def specialize(p: Poly, values: dict[str, Coeff]) -> Poly:
    return poly.subs(p, values)


def all_equal(values: Iterable) -> bool:
    values = list(values)
    return all(v == values[0] for v in values[1:])


__all__: Sequence[str] = (
    "ASCBOTTOM_ALPHABET",
    "CommSeries",
    "LEFTCROSS_VARIANTS",
    "all_equal",
    "conj21_from_closed_form",
    "eval_ascentbottom_nc",
    "eval_conj20_formula",
    "eval_conj21_identity",
    "eval_fishburn",
    "eval_leftcrossing",
    "eval_theorem_main_sxy",
    "eval_theorem_main_xyz",
    "expected_conj20",
    "expected_leftcrossing",
    "expected_main_sxy",
    "expected_main_xyz",
    "fishburn_counts",
    "matching_sum",
    "perm_sum",
    "specialize",
)
