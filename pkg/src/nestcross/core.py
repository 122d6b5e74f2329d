"""Permutations, matchings and 0-1 fillings of partition shapes.

All coordinates are one-based: values and positions of a permutation, the
points 1..2n of a matching, arc indices, and the (column, row) cells of a
filling (columns counted from the left, rows from the bottom).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import singledispatch
from typing import Iterable, Sequence, Union

Cell = tuple[int, int]
Arc = tuple[int, int]


# -- helpers shared with the stats module ------------------------------------


def ascent_tops(word: Sequence[int]) -> frozenset[int]:
    return frozenset(word[j] for j in range(1, len(word)) if word[j - 1] < word[j])


def silly_ascents(word: Sequence[int]) -> frozenset[int]:
    n = len(word)
    out = {word[0]} if word[0] < n else set()
    out.update(word[j] for j in range(1, n) if word[j - 1] < word[j] and word[j] < n)
    return frozenset(out)


def right_adjacencies(arcs: Sequence[Arc]) -> frozenset[int]:
    return frozenset(i for i in range(2, len(arcs) + 1) if arcs[i - 2][1] == arcs[i - 1][1] - 1)


def opener_index(arcs: Sequence[Arc]) -> dict[int, int]:
    """Map each opener point to the (closer-ordered) index of its arc."""
    return {o: i for i, (o, _) in enumerate(arcs, start=1)}


def has_left_nesting(arcs: Sequence[Arc]) -> bool:
    by_opener = opener_index(arcs)
    for o, i in by_opener.items():
        j = by_opener.get(o + 1)
        if j is not None and arcs[j - 1][1] < arcs[i - 1][1]:
            return True
    return False


# -- permutations -------------------------------------------------------------


@dataclass(frozen=True, order=True)
class Permutation:
    word: tuple[int, ...]

    def __init__(self, word: Iterable[int]):
        w = tuple(int(v) for v in word)
        if not w:
            raise ValueError("empty permutation")
        if sorted(w) != list(range(1, len(w) + 1)):
            raise ValueError(f"{w} is not a permutation of 1..{len(w)}")
        object.__setattr__(self, "word", w)

    @property
    def n(self) -> int:
        return len(self.word)

    def position(self, value: int) -> int:
        return self.word.index(value) + 1

    def positions(self) -> list[int]:
        """``positions()[v]`` is the position of value ``v`` (index 0 unused)."""
        pos = [0] * (self.n + 1)
        for j, v in enumerate(self.word, start=1):
            pos[v] = j
        return pos

    def __len__(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        sep = " " if self.n >= 10 else ""
        return sep.join(map(str, self.word))


@dataclass(frozen=True)
class BarredPermutation:
    """A permutation with a subset of its ascent tops marked by a bar."""

    base: Permutation
    bars: frozenset[int] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "bars", frozenset(self.bars))
        if not self.bars <= ascent_tops(self.base.word):
            raise ValueError(f"bars {sorted(self.bars)} are not all ascents of {self.base}")

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def word(self) -> tuple[int, ...]:
        return self.base.word

    @property
    def X(self) -> frozenset[int]:
        return self.bars

    def __str__(self) -> str:
        return " ".join(f"{v}̄" if v in self.bars else str(v) for v in self.word)


@dataclass(frozen=True)
class HattedPermutation:
    """A permutation with a subset of its silly ascents marked by a hat."""

    base: Permutation
    hats: frozenset[int] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "hats", frozenset(self.hats))
        if not self.hats <= silly_ascents(self.base.word):
            raise ValueError(f"hats {sorted(self.hats)} are not all silly ascents of {self.base}")

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def word(self) -> tuple[int, ...]:
        return self.base.word

    @property
    def X(self) -> frozenset[int]:
        return self.hats

    @property
    def X_plus(self) -> frozenset[int]:
        return frozenset(h + 1 for h in self.hats)

    def __str__(self) -> str:
        return " ".join(f"{v}̂" if v in self.hats else str(v) for v in self.word)


# -- matchings ----------------------------------------------------------------


@dataclass(frozen=True, order=True)
class Matching:
    """Perfect matching on 1..2n; ``arcs[i-1]`` is the arc M_i (ordered by closer)."""

    arcs: tuple[Arc, ...]

    def __init__(self, pairs: Iterable[Sequence[int]]):
        arcs = []
        for p in pairs:
            a, b = (int(v) for v in p)
            arcs.append((min(a, b), max(a, b)))
        if not arcs:
            raise ValueError("empty matching")
        arcs.sort(key=lambda arc: arc[1])
        points = sorted(v for arc in arcs for v in arc)
        if points != list(range(1, 2 * len(arcs) + 1)) or any(o == c for o, c in arcs):
            raise ValueError(f"{arcs} is not a perfect matching of 1..{2 * len(arcs)}")
        object.__setattr__(self, "arcs", tuple(arcs))

    @property
    def n(self) -> int:
        return len(self.arcs)

    def opener(self, i: int) -> int:
        return self.arcs[i - 1][0]

    def closer(self, i: int) -> int:
        return self.arcs[i - 1][1]

    def has_left_nesting(self) -> bool:
        return has_left_nesting(self.arcs)

    def __len__(self) -> int:
        return len(self.arcs)

    def __str__(self) -> str:
        return "{" + ", ".join(f"{{{o},{c}}}" for o, c in self.arcs) + "}"


@dataclass(frozen=True)
class MarkedMatching:
    """A left-nesting-free matching with some right adjacencies marked."""

    base: Matching
    marks: frozenset[int] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "marks", frozenset(self.marks))
        if self.base.has_left_nesting():
            raise ValueError(f"{self.base} has a left nesting")
        if not self.marks <= right_adjacencies(self.base.arcs):
            raise ValueError(f"marks {sorted(self.marks)} are not all right adjacencies")

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def arcs(self) -> tuple[Arc, ...]:
        return self.base.arcs

    @property
    def X(self) -> frozenset[int]:
        return self.marks


# -- shapes and fillings ----------------------------------------------------


@dataclass(frozen=True, order=True)
class PartitionShape:
    """Bottom-justified columns of weakly increasing heights."""

    columns: tuple[int, ...]

    def __init__(self, columns: Iterable[int]):
        cols = tuple(int(c) for c in columns)
        if not cols:
            raise ValueError("empty shape")
        if cols[0] < 1 or any(a > b for a, b in zip(cols, cols[1:])):
            raise ValueError(f"{cols} is not a weakly increasing sequence of positive integers")
        object.__setattr__(self, "columns", cols)

    @classmethod
    def flat(cls, ell: int, lazy: Iterable[int] = ()) -> "PartitionShape":
        """The unique flat shape of length ``ell`` with the given lazy set."""
        lazy = set(lazy)
        if not lazy <= set(range(2, ell + 1)):
            raise ValueError(f"lazy set {sorted(lazy)} not inside 2..{ell}")
        cols, h = [], 0
        for i in range(1, ell + 1):
            if i not in lazy:
                h += 1
            cols.append(h)
        return cls(cols)

    @classmethod
    def staircase(cls, ell: int) -> "PartitionShape":
        return cls(range(1, ell + 1))

    @classmethod
    def square(cls, ell: int) -> "PartitionShape":
        return cls([ell] * ell)

    @property
    def length(self) -> int:
        return len(self.columns)

    @property
    def height(self) -> int:
        return self.columns[-1]

    def __getitem__(self, i: int) -> int:
        """One-based column height."""
        if not 1 <= i <= len(self.columns):
            raise IndexError(i)
        return self.columns[i - 1]

    def row_length(self, j: int) -> int:
        return sum(1 for c in self.columns if c >= j)

    def cells(self) -> list[Cell]:
        return [(i, j) for i, h in enumerate(self.columns, start=1) for j in range(1, h + 1)]

    @property
    def lazy_set(self) -> frozenset[int]:
        c = self.columns
        return frozenset(i for i in range(2, len(c) + 1) if c[i - 2] == c[i - 1])

    def is_flat(self) -> bool:
        # distinct row lengths <=> every height 1..max occurs as a column height
        return set(self.columns) == set(range(1, self.height + 1))

    def is_steep(self) -> bool:
        return len(set(self.columns)) == len(self.columns)

    def is_square(self) -> bool:
        return all(c == len(self.columns) for c in self.columns)


@dataclass(frozen=True)
class Filling:
    shape: PartitionShape
    dots: frozenset[Cell]

    def __init__(self, shape: PartitionShape | Sequence[int], dots: Iterable[Sequence[int]] = ()):
        if not isinstance(shape, PartitionShape):
            shape = PartitionShape(shape)
        cells = frozenset((int(i), int(j)) for i, j in dots)
        for i, j in cells:
            if not (1 <= i <= shape.length and 1 <= j <= shape[i]):
                raise ValueError(f"dot {(i, j)} lies outside the shape {shape.columns}")
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "dots", cells)

    @classmethod
    def from_alpha(cls, shape: PartitionShape | Sequence[int], alpha: Sequence) -> "Filling":
        """Build from a column sequence; entries are row sets or single row numbers."""
        dots = []
        for i, a in enumerate(alpha, start=1):
            rows = (a,) if isinstance(a, int) else a
            dots.extend((i, j) for j in rows)
        return cls(shape, dots)

    @property
    def ell(self) -> int:
        return self.shape.length

    @property
    def n(self) -> int:
        return len(self.dots)

    @property
    def X(self) -> frozenset[int]:
        return self.shape.lazy_set

    @property
    def alpha(self) -> tuple[tuple[int, ...], ...]:
        cols: list[list[int]] = [[] for _ in range(self.ell)]
        for i, j in self.dots:
            cols[i - 1].append(j)
        return tuple(tuple(sorted(c)) for c in cols)

    @property
    def alpha_int(self) -> tuple[int, ...]:
        """Dot rows of a column-strict filling as plain integers."""
        alpha = self.alpha
        if any(len(a) != 1 for a in alpha):
            raise ValueError("alpha_int requires a column-strict filling")
        return tuple(a[0] for a in alpha)

    def rows(self) -> list[list[int]]:
        """``rows()[j-1]`` lists the dotted columns of row j, left to right."""
        out: list[list[int]] = [[] for _ in range(self.shape.height)]
        for i, j in sorted(self.dots):
            out[j - 1].append(i)
        return out

    def __str__(self) -> str:
        h = self.shape.height
        lines = []
        for j in range(h, 0, -1):
            line = "".join(
                ("o" if (i, j) in self.dots else ".") if self.shape[i] >= j else " "
                for i in range(1, self.ell + 1)
            )
            lines.append(line.rstrip())
        return "\n".join(lines)


@dataclass(frozen=True)
class FillingFlags:
    column_positive: bool
    column_strict: bool
    row_positive: bool
    row_strict: bool
    strict: bool
    flat: bool
    steep: bool
    staircase: bool
    enriched_permutation: bool


def filling_predicates(T: Filling) -> FillingFlags:
    col_counts = [len(a) for a in T.alpha]
    row_counts = [len(r) for r in T.rows()]
    column_positive = all(c >= 1 for c in col_counts)
    column_strict = all(c == 1 for c in col_counts)
    row_positive = all(c >= 1 for c in row_counts)
    row_strict = all(c == 1 for c in row_counts)
    flat, steep = T.shape.is_flat(), T.shape.is_steep()
    return FillingFlags(
        column_positive=column_positive,
        column_strict=column_strict,
        row_positive=row_positive,
        row_strict=row_strict,
        strict=column_strict and row_strict,
        flat=flat,
        steep=steep,
        staircase=flat and steep,
        enriched_permutation=(
            T.shape.is_square() and column_positive and row_positive and _leftmost_is_topmost(T)
        ),
    )


def _leftmost_is_topmost(T: Filling) -> bool:
    leftmost = {(min(cols), j) for j, cols in enumerate(T.rows(), start=1) if cols}
    topmost = {(i, max(rows)) for i, rows in enumerate(T.alpha, start=1) if rows}
    return leftmost == topmost


def is_enriched_permutation(T: Filling) -> bool:
    return filling_predicates(T).enriched_permutation


# -- direct sums ------------------------------------------------------------

Decomposable = Union[
    Permutation, BarredPermutation, HattedPermutation, Matching, MarkedMatching, Filling
]


@singledispatch
def direct_sum(a, b):
    raise TypeError(f"no direct sum for {type(a).__name__}")


@direct_sum.register
def _(a: Permutation, b: Permutation) -> Permutation:
    _same_family(a, b)
    return Permutation(a.word + tuple(v + a.n for v in b.word))


@direct_sum.register
def _(a: BarredPermutation, b: BarredPermutation) -> BarredPermutation:
    _same_family(a, b)
    return BarredPermutation(direct_sum(a.base, b.base), a.bars | {v + a.n for v in b.bars})


@direct_sum.register
def _(a: HattedPermutation, b: HattedPermutation) -> HattedPermutation:
    _same_family(a, b)
    return HattedPermutation(direct_sum(a.base, b.base), a.hats | {v + a.n for v in b.hats})


@direct_sum.register
def _(a: Matching, b: Matching) -> Matching:
    _same_family(a, b)
    k = 2 * a.n
    return Matching(a.arcs + tuple((o + k, c + k) for o, c in b.arcs))


@direct_sum.register
def _(a: MarkedMatching, b: MarkedMatching) -> MarkedMatching:
    _same_family(a, b)
    return MarkedMatching(direct_sum(a.base, b.base), a.marks | {i + a.n for i in b.marks})


@direct_sum.register
def _(a: Filling, b: Filling) -> Filling:
    _same_family(a, b)
    h, w = a.shape.height, a.ell
    shape = a.shape.columns + tuple(c + h for c in b.shape.columns)
    return Filling(shape, a.dots | {(i + w, j + h) for i, j in b.dots})


def _same_family(a, b) -> None:
    if type(a) is not type(b):
        raise TypeError(f"cannot add {type(a).__name__} and {type(b).__name__}")


def direct_sum_all(parts: Sequence[Decomposable]) -> Decomposable:
    if not parts:
        raise ValueError("need at least one summand")
    out = parts[0]
    for p in parts[1:]:
        out = direct_sum(out, p)
    return out


# -- irreducible decompositions -------------------------------------------


def _perm_cuts(word: Sequence[int]) -> list[int]:
    """Lengths k < n of prefixes that are permutations of 1..k."""
    cuts, mx = [], 0
    for k, v in enumerate(word[:-1], start=1):
        mx = max(mx, v)
        if mx == k:
            cuts.append(k)
    return cuts


def _split_word(word: Sequence[int], cuts: Sequence[int]) -> list[tuple[int, int, tuple[int, ...]]]:
    bounds = [0, *cuts, len(word)]
    return [(lo, hi, tuple(v - lo for v in word[lo:hi])) for lo, hi in zip(bounds, bounds[1:])]


@singledispatch
def irreducible_components(x) -> list:
    raise TypeError(f"no decomposition for {type(x).__name__}")


@irreducible_components.register
def _(x: Permutation) -> list[Permutation]:
    return [Permutation(w) for _, _, w in _split_word(x.word, _perm_cuts(x.word))]


@irreducible_components.register
def _(x: BarredPermutation) -> list[BarredPermutation]:
    # a bar may not become the first entry of a component
    cuts = [k for k in _perm_cuts(x.word) if x.word[k] not in x.bars]
    return [
        BarredPermutation(Permutation(w), {v - lo for v in x.bars if lo < v <= hi})
        for lo, hi, w in _split_word(x.word, cuts)
    ]


@irreducible_components.register
def _(x: HattedPermutation) -> list[HattedPermutation]:
    # a hat may not become the maximum of a component
    cuts = [k for k in _perm_cuts(x.word) if k not in x.hats]
    return [
        HattedPermutation(Permutation(w), {v - lo for v in x.hats if lo < v <= hi})
        for lo, hi, w in _split_word(x.word, cuts)
    ]


def _matching_cuts(arcs: Sequence[Arc]) -> list[int]:
    """Arc counts k < n such that points 1..2k are matched among themselves."""
    closer_of = {}
    for o, c in arcs:
        closer_of[o] = c
    cuts, reach = [], 0
    n = len(arcs)
    for p in range(1, 2 * n):
        reach = max(reach, closer_of.get(p, p))
        if reach == p and p % 2 == 0:
            cuts.append(p // 2)
    return cuts


@irreducible_components.register
def _(x: Matching) -> list[Matching]:
    bounds = [0, *_matching_cuts(x.arcs), x.n]
    return [
        Matching((o - 2 * lo, c - 2 * lo) for o, c in x.arcs[lo:hi])
        for lo, hi in zip(bounds, bounds[1:])
    ]


@irreducible_components.register
def _(x: MarkedMatching) -> list[MarkedMatching]:
    bounds = [0, *_matching_cuts(x.arcs), x.n]
    return [
        MarkedMatching(
            Matching((o - 2 * lo, c - 2 * lo) for o, c in x.arcs[lo:hi]),
            {i - lo for i in x.marks if lo < i <= hi},
        )
        for lo, hi in zip(bounds, bounds[1:])
    ]


def _filling_cuts(T: Filling) -> list[int]:
    lam = T.shape.columns
    lowest = [min(a) if a else None for a in T.alpha]
    cuts = []
    for c in range(1, T.ell):
        if lam[c] <= lam[c - 1]:
            continue
        if all(r is None or r > lam[c - 1] for r in lowest[c:]):
            cuts.append(c)
    return cuts


def _filling_pieces(T: Filling, cuts: Sequence[int]) -> list[Filling]:
    lam = T.shape.columns
    bounds = [0, *cuts, T.ell]
    out = []
    for lo, hi in zip(bounds, bounds[1:]):
        h = lam[lo - 1] if lo else 0
        out.append(
            Filling(
                [c - h for c in lam[lo:hi]],
                [(i - lo, j - h) for i, j in T.dots if lo < i <= hi],
            )
        )
    return out


@irreducible_components.register
def _(x: Filling) -> list[Filling]:
    return _filling_pieces(x, _filling_cuts(x))


def comp(x: Decomposable) -> int:
    """Number of irreducible components (bcomp for barred/hatted input)."""
    return len(irreducible_components(x))


# -- boxed sums of enriched permutation fillings ----------------------------


def _require_enriched(*fillings: Filling) -> None:
    for T in fillings:
        if not is_enriched_permutation(T):
            raise ValueError("boxed sums need enriched permutation fillings")


def boxed_sum(a: Filling, b: Filling) -> Filling:
    _require_enriched(a, b)
    k, m = a.ell, b.ell
    return Filling(PartitionShape.square(k + m), a.dots | {(i + k, j + k) for i, j in b.dots})


def box_components(x: Filling) -> list[Filling]:
    _require_enriched(x)
    ell = x.ell
    cuts = []
    for c in range(1, ell):
        if all((i <= c) == (j <= c) for i, j in x.dots):
            cuts.append(c)
    bounds = [0, *cuts, ell]
    return [
        Filling(
            PartitionShape.square(hi - lo),
            [(i - lo, j - lo) for i, j in x.dots if lo < i <= hi],
        )
        for lo, hi in zip(bounds, bounds[1:])
    ]


def boxcomp(x: Filling) -> int:
    return len(box_components(x))
