"""Noncommutative formal power series truncated by word length.

Coefficients are exact integer polynomials (see :mod:`nestcross.poly`) in the
commutative variables ``s``, ``r``, ... .  A series records the largest word
length it knows exactly; arithmetic never claims more precision than its
operands carry.
"""

from __future__ import annotations

from itertools import product as cartesian
from typing import Callable, Iterable, Mapping, Sequence

from . import poly
from .core import Filling, PartitionShape
from .poly import Coeff, Poly, R
from .stats import fill_stats, match_stats, perm_stats

Word = tuple[str, ...]
SEP = "·"


class NCSeries:
    __slots__ = ("alphabet", "max_degree", "terms")

    def __init__(
        self,
        alphabet: Sequence[str],
        max_degree: int,
        terms: Mapping[Word, Coeff] | None = None,
    ):
        self.alphabet = tuple(alphabet)
        if len(set(self.alphabet)) != len(self.alphabet):
            raise ValueError(f"repeated letter in alphabet {self.alphabet}")
        if max_degree < 0:
            raise ValueError("max_degree must be non-negative")
        self.max_degree = max_degree
        letters = set(self.alphabet)
        clean: dict[Word, Poly] = {}
        for word, c in (terms or {}).items():
            word = tuple(word)
            if not set(word) <= letters:
                raise ValueError(f"word {word} uses letters outside {self.alphabet}")
            c = R(c)
            if c and len(word) <= max_degree:
                clean[word] = c
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def scalar(cls, alphabet: Sequence[str], max_degree: int, c: Coeff = 1) -> "NCSeries":
        return cls(alphabet, max_degree, {(): c})

    @classmethod
    def letter(cls, alphabet: Sequence[str], max_degree: int, name: str) -> "NCSeries":
        return cls(alphabet, max_degree, {(name,): 1})

    def _like(self, terms: Mapping[Word, Coeff], max_degree: int | None = None) -> "NCSeries":
        return NCSeries(self.alphabet, self.max_degree if max_degree is None else max_degree, terms)

    def _check(self, other: "NCSeries") -> None:
        if other.alphabet != self.alphabet:
            raise ValueError(f"alphabet mismatch: {self.alphabet} vs {other.alphabet}")

    def _coerce(self, other) -> "NCSeries":
        if isinstance(other, NCSeries):
            self._check(other)
            return other
        return NCSeries.scalar(self.alphabet, self.max_degree, other)

    # -- ring operations ----------------------------------------------------

    def __add__(self, other) -> "NCSeries":
        other = self._coerce(other)
        d = min(self.max_degree, other.max_degree)
        out = dict(self.terms)
        for word, c in other.terms.items():
            out[word] = out.get(word, R.zero) + c
        return self._like(out, d)

    __radd__ = __add__

    def __neg__(self) -> "NCSeries":
        return self._like({word: -c for word, c in self.terms.items()})

    def __sub__(self, other) -> "NCSeries":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "NCSeries":
        return self._coerce(other) - self

    def __mul__(self, other) -> "NCSeries":
        if not isinstance(other, NCSeries):
            c = R(other)
            return self._like({word: c * v for word, v in self.terms.items()})
        self._check(other)
        d = min(self.max_degree, other.max_degree)
        out: dict[Word, Poly] = {}
        right = sorted(other.terms.items(), key=lambda kv: len(kv[0]))
        for w1, c1 in self.terms.items():
            room = d - len(w1)
            for w2, c2 in right:
                if len(w2) > room:
                    break
                key = w1 + w2
                out[key] = out.get(key, R.zero) + c1 * c2
        return self._like(out, d)

    def __rmul__(self, other) -> "NCSeries":
        # scalars are central
        return self * other

    def __pow__(self, k: int) -> "NCSeries":
        if k < 0:
            return self.inverse() ** (-k)
        out = NCSeries.scalar(self.alphabet, self.max_degree)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, NCSeries):
            return NotImplemented
        return (
            self.alphabet == other.alphabet
            and self.max_degree == other.max_degree
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.alphabet, self.max_degree, frozenset(self.terms)))

    @property
    def constant(self) -> Poly:
        return self.terms.get((), R.zero)

    def coefficient(self, word: Word | str) -> Poly:
        if isinstance(word, str):
            word = parse_word(word)
        if len(word) > self.max_degree:
            raise ValueError(f"word of length {len(word)} beyond truncation {self.max_degree}")
        return self.terms.get(tuple(word), R.zero)

    def truncate(self, d: int) -> "NCSeries":
        if d > self.max_degree:
            raise ValueError("cannot raise the truncation of a series")
        return self._like(self.terms, d)

    def inverse(self) -> "NCSeries":
        a = self.constant
        if not (a.is_ground and abs(int(a.LC)) == 1):
            raise ArithmeticError(f"constant term {poly.to_text(a)} is not a unit")
        a_inv = int(a.LC)
        rest = NCSeries.scalar(self.alphabet, self.max_degree) - self * a_inv
        # S = a (1 - rest)  =>  S^-1 = a^-1 (1 + rest + rest^2 + ...)
        total = NCSeries.scalar(self.alphabet, self.max_degree)
        power = total
        for _ in range(self.max_degree):
            power = power * rest
            if not power.terms:
                break
            total = total + power
        return total * a_inv

    def left_strip(self, name: str) -> "NCSeries":
        """Remove a leading letter that every term is required to start with."""
        out = {}
        for word, c in self.terms.items():
            if not word or word[0] != name:
                raise ArithmeticError(f"term {spell(word)} does not start with {name}")
            out[word[1:]] = c
        return self._like(out, self.max_degree - 1)

    def prepend(self, name: str) -> "NCSeries":
        """Left multiplication by a single letter (gains one degree of precision)."""
        if name not in self.alphabet:
            raise ValueError(f"{name} not in alphabet")
        return self._like({(name,) + w: c for w, c in self.terms.items()}, self.max_degree + 1)

    def map_coefficients(self, f: Callable[[Poly], Coeff]) -> "NCSeries":
        return self._like({w: f(c) for w, c in self.terms.items()})

    def substitute(
        self, images: Mapping[str, "NCSeries"], alphabet: Sequence[str] | None = None
    ) -> "NCSeries":
        """Apply the algebra map sending each letter to a series.

        Letters absent from ``images`` are kept (and must exist in the target
        alphabet). Images must have zero constant term so word length cannot drop.
        """
        target = tuple(alphabet) if alphabet is not None else self.alphabet
        d = self.max_degree
        imgs = {}
        for name in self.alphabet:
            img = images.get(name)
            if img is None:
                img = NCSeries.letter(target, d, name)
            if img.alphabet != target:
                raise ValueError("image alphabet differs from target alphabet")
            if img.constant:
                raise ValueError(f"image of {name} has a constant term")
            imgs[name] = img
        out = NCSeries(target, d)
        cache: dict[Word, NCSeries] = {(): NCSeries.scalar(target, d)}

        def image_of(word: Word) -> NCSeries:
            if word not in cache:
                cache[word] = image_of(word[:-1]) * imgs[word[-1]]
            return cache[word]

        for word, c in self.terms.items():
            out = out + image_of(word) * c
        return out

    def abelianize(self, values: Mapping[str, Coeff]) -> list[Poly]:
        """Commutative image; entry ``n`` collects words of length ``n``."""
        out = [R.zero] * (self.max_degree + 1)
        vals = {name: R(values[name]) for name in self.alphabet}
        for word, c in self.terms.items():
            term = c
            for name in word:
                term = term * vals[name]
            out[len(word)] += term
        return out

    # -- text form ------------------------------------------------------------

    def sorted_words(self) -> list[Word]:
        index = {name: k for k, name in enumerate(self.alphabet)}
        return sorted(self.terms, key=lambda w: (len(w), [index[a] for a in w]))

    def to_text(self) -> str:
        lines = [f"{spell(w)}\t{poly.to_text(self.terms[w])}" for w in self.sorted_words()]
        return "".join(line + "\n" for line in lines)

    @classmethod
    def from_text(cls, text: str, alphabet: Sequence[str], max_degree: int) -> "NCSeries":
        terms: dict[Word, Poly] = {}
        for line in text.splitlines():
            if not line.strip():
                continue
            word_text, coeff_text = line.split("\t")
            terms[parse_word(word_text)] = poly.from_text(coeff_text)
        return cls(alphabet, max_degree, terms)

    def __repr__(self) -> str:
        body = " + ".join(
            f"({poly.to_text(self.terms[w])})*{spell(w)}" for w in self.sorted_words()[:8]
        )
        more = " + ..." if len(self.terms) > 8 else ""
        return f"NCSeries[{','.join(self.alphabet)}; <= {self.max_degree}]({body}{more})"


def spell(word: Word) -> str:
    return SEP.join(word) if word else "1"


def parse_word(text: str) -> Word:
    text = text.strip()
    return () if text == "1" else tuple(text.split(SEP))


def monomial_word(n: int, assignment: Mapping[str, Iterable[int]], default: str = "t") -> Word:
    """The length-``n`` word with letter ``a`` at every position in ``assignment[a]``."""
    word = [default] * n
    seen: set[int] = set()
    for name, positions in assignment.items():
        for p in positions:
            if not 1 <= p <= n or p in seen:
                raise ValueError(f"position {p} is out of range or assigned twice")
            seen.add(p)
            word[p - 1] = name
    return tuple(word)


# -- the block generating functions F_k and the main series -------------------

NC_ALPHABET = ("t", "u", "v", "w")
VARIANTS = ("general-w", "silly-s", "full")


def _block_factors(k: int, variant: str, d: int) -> tuple[NCSeries, NCSeries]:
    one = NCSeries.scalar(NC_ALPHABET, d)
    u = NCSeries.letter(NC_ALPHABET, d, "u")
    w = NCSeries.letter(NC_ALPHABET, d, "w")
    if variant == "general-w":
        A = one + u * (one - w).inverse()
        B = (one + u * (one - w).inverse()) ** (k - 1)
    elif variant == "silly-s":
        A = one + u * poly.s
        B = (one + u) ** (k - 1)
    elif variant == "full":
        A = one + u * poly.s * (one - w * poly.s).inverse()
        B = (one + u * (one - w).inverse()) ** (k - 1)
    else:
        raise ValueError(f"unknown variant {variant!r}; expected one of {VARIANTS}")
    return A, B


def eval_F(k: int, mu: str = "max", variant: str = "general-w", max_degree: int = 5) -> NCSeries:
    """Series of column-strict fillings of rectangles of height ``k``.

    Closed form ``(1 - v u^-1 G)^-1 - 1`` with ``G = AB - 1`` for ``mu="max"``
    and ``G = BA - 1`` for ``mu="min"``.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if mu not in ("min", "max"):
        raise ValueError("mu must be 'min' or 'max'")
    A, B = _block_factors(k, variant, max_degree)
    G = (A * B if mu == "max" else B * A) - 1
    one = NCSeries.scalar(NC_ALPHABET, max_degree)
    inner = G.left_strip("u").prepend("v")
    return (one - inner).inverse() - 1


def eval_main(variant: str = "general-w", max_degree: int = 5, mu: str = "max") -> NCSeries:
    """Sum over m of the ordered product, k = 1..m, of ``t v^-1 F_k``."""
    if max_degree < 1:
        raise ValueError("max_degree must be at least 1")
    d = max_degree
    factors = [eval_F(k, mu, variant, d).left_strip("v").prepend("t") for k in range(1, d + 1)]
    total = NCSeries(NC_ALPHABET, d)
    prod = NCSeries.scalar(NC_ALPHABET, d)
    for m in range(1, d + 1):
        prod = prod * factors[m - 1]
        total = total + prod
    return total


def brute_F(k: int, mu: str, max_degree: int) -> NCSeries:
    """Direct sum over column-strict fillings of rectangles of height ``k``."""
    d = max_degree
    letter = {a: NCSeries.letter(NC_ALPHABET, d, a) for a in ("u", "v", "w")}
    des_image = letter["u"] + letter["v"]
    rep_image = letter["v"] + letter["w"]
    total = NCSeries(NC_ALPHABET, d)
    for ell in range(1, d + 1):
        for alpha in cartesian(range(1, k + 1), repeat=ell):
            st = fill_stats(Filling.from_alpha(PartitionShape([k] * ell), alpha))
            weight = poly.s ** (st.max if mu == "max" else st.min)
            series = NCSeries.scalar(NC_ALPHABET, d, weight)
            for i in range(1, ell + 1):
                if i in st.Des:
                    series = series * des_image
                elif i in st.Rep:
                    series = series * rep_image
                else:
                    series = series * letter["v"]
            total = total + series
    return total


# -- brute-force series from enumerated objects -------------------------------

BAR_ALPHABET = ("t", "x", "y", "z")
FAMILIES = ("perms", "nlm")

Mapper = Callable[[object], tuple[Mapping[str, Iterable[int]], Coeff]]


def brute_series(n_max: int, family: str, stat_mapper: Mapper, alphabet: Sequence[str]) -> NCSeries:
    """Sum over all objects of size 1..n_max of ``coeff * [letters at positions; t]_n``."""
    from .enumeration import nlm_matchings, perms

    source = {"perms": perms, "nlm": nlm_matchings}.get(family)
    if source is None:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    terms: dict[Word, Poly] = {}
    for n in range(1, n_max + 1):
        for obj in source(n):
            assignment, c = stat_mapper(obj)
            word = monomial_word(n, assignment)
            terms[word] = terms.get(word, R.zero) + R(c)
    return NCSeries(alphabet, n_max, terms)


def _shift(s, k):
    return {v + k for v in s}


def perm_pqr(pi):
    st = perm_stats(pi)
    return {"x": st.P, "y": st.Q, "z": st.R}, poly.s**st.rmin


def perm_p_qr(pi):
    """Short ascents merged with Q (the w = 0 specialization)."""
    st = perm_stats(pi)
    return {"x": st.P, "y": st.Q | st.R}, poly.s**st.rmin


def perm_silly(pi):
    st = perm_stats(pi)
    return {"x": st.P_silly_plus, "y": st.Q_silly_plus}, poly.s**st.rmin


def nlm_rne_rcr_lrcr(m):
    st = match_stats(m)
    return {"x": st.Rne, "y": st.Rcr_single, "z": st.LRcr}, poly.s**st.min


def nlm_rne_rcr(m):
    st = match_stats(m)
    return {"x": st.Rne, "y": st.Rcr}, poly.s**st.min


def perm_ascbottom(pi):
    st = perm_stats(pi)
    return {"ups": st.Ascbottom_long, "z": _shift(st.R, -1)}, 1


def nlm_leftcross(m):
    st = match_stats(m)
    return {"ups": st.Lcr_single, "z": _shift(st.LRcr, -1)}, 1


def bar_to_uvw(S: NCSeries) -> NCSeries:
    """Apply x -> u+v+t, y -> v+t, z -> v+w+t."""
    d = S.max_degree
    L = {a: NCSeries.letter(NC_ALPHABET, d, a) for a in NC_ALPHABET}
    images = {
        "x": L["u"] + L["v"] + L["t"],
        "y": L["v"] + L["t"],
        "z": L["v"] + L["w"] + L["t"],
        "t": L["t"],
    }
    return S.substitute(images, NC_ALPHABET)


def set_s(S: NCSeries, value: Coeff = 1) -> NCSeries:
    return S.map_coefficients(lambda c: poly.subs(c, {"s": value}))
