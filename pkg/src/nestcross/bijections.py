"""Bijections between fillings, decorated permutations and matchings."""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from functools import wraps
from typing import Callable, Iterator, TypeVar

from .core import (
    BarredPermutation,
    Filling,
    HattedPermutation,
    Matching,
    MarkedMatching,
    PartitionShape,
    Permutation,
    filling_predicates,
    is_enriched_permutation,
)

Blocks = list[list[int]]


class DomainError(ValueError):
    """A map was applied outside the set it is defined on."""


F = TypeVar("F", bound=Callable)


def _takes(cls: type) -> Callable[[F], F]:
    """Reject arguments of the wrong kind with a DomainError instead of a crash."""

    def decorate(fn):
        @wraps(fn)
        def checked(obj):
            if not isinstance(obj, cls):
                raise DomainError(
                    f"{fn.__name__} expects a {cls.__name__}, got {type(obj).__name__}"
                )
            return fn(obj)

        return checked

    return decorate


def _require_flat_column_strict(T: Filling) -> tuple[int, ...]:
    flags = filling_predicates(T)
    if not (flags.flat and flags.column_strict):
        raise DomainError("expected a flat column-strict filling")
    return T.alpha_int


# -- phi: flat column-strict fillings -> barred permutations ------------------


@_takes(Filling)
def phi_steps(T: Filling) -> Iterator[Blocks]:
    """Yield the block sequence after each insertion step of ``phi``."""
    alpha = _require_flat_column_strict(T)
    lam, X = T.shape, T.X
    blocks: Blocks = [[1]]
    yield [b[:] for b in blocks]
    for i in range(2, T.ell + 1):
        a = alpha[i - 1]
        if i in X:
            blocks[a - 1].append(i)
        elif a == lam[i]:
            blocks.append([i])
        else:
            blocks.insert(a - 1, [i])
        yield [b[:] for b in blocks]


@_takes(Filling)
def phi(T: Filling) -> BarredPermutation:
    *_, blocks = phi_steps(T)
    word = [v for b in blocks for v in b]
    return BarredPermutation(Permutation(word), T.X)


@_takes(BarredPermutation)
def phi_inv(bp: BarredPermutation) -> Filling:
    X = bp.bars
    pos = bp.base.positions()
    word = bp.word
    alpha = []
    for i in range(1, bp.n + 1):
        alpha.append(sum(1 for v in word[: pos[i]] if v <= i and v not in X))
    return Filling.from_alpha(PartitionShape.flat(bp.n, X), alpha)


# -- phi_silly: flat column-strict fillings -> hatted permutations -----------


@_takes(Filling)
def phi_silly_steps(T: Filling) -> Iterator[Blocks]:
    """Block sequences of ``phi_silly``; the leading block starts with 0."""
    alpha = _require_flat_column_strict(T)
    X = T.X
    blocks: Blocks = [[0]]
    yield [b[:] for b in blocks]
    for i in range(1, T.ell + 1):
        a = alpha[i - 1]
        if i + 1 in X:
            blocks[a - 1].append(i)
        else:
            blocks.insert(a, [i])
        yield [b[:] for b in blocks]


@_takes(Filling)
def phi_silly(T: Filling) -> HattedPermutation:
    *_, blocks = phi_silly_steps(T)
    word = [v for b in blocks for v in b][1:]
    return HattedPermutation(Permutation(word), {i - 1 for i in T.X})


@_takes(HattedPermutation)
def phi_silly_inv(hp: HattedPermutation) -> Filling:
    X = hp.hats
    pos = hp.base.positions()
    word = hp.word
    alpha = []
    for i in range(1, hp.n + 1):
        alpha.append(1 + sum(1 for v in word[: pos[i] - 1] if v < i and v not in X))
    return Filling.from_alpha(PartitionShape.flat(hp.n, hp.X_plus), alpha)


# -- steepen / flatten --------------------------------------------------------


def _class_index(values) -> list[int]:
    """Rank of each entry of a weakly increasing sequence among its distinct values."""
    out, rank, prev = [], 0, None
    for v in values:
        if v != prev:
            rank += 1
            prev = v
        out.append(rank)
    return out


@_takes(Filling)
def steepen(T: Filling) -> Filling:
    """Merge all columns of equal length into one, keeping dot rows.

    Defined whenever the merged columns have no two dots in the same row,
    which covers every row-strict filling.
    """
    lam = T.shape.columns
    new_col = _class_index(lam)
    dots = set()
    for i, j in T.dots:
        cell = (new_col[i - 1], j)
        if cell in dots:
            raise DomainError("steepening would put two dots in one cell")
        dots.add(cell)
    return Filling(sorted(set(lam)), dots)


@_takes(Filling)
def flatten(T: Filling) -> Filling:
    """Merge all rows of equal length into one, keeping dot columns."""
    if not filling_predicates(T).column_strict:
        raise DomainError("flatten needs a column-strict filling")
    lam = T.shape
    lengths = [lam.row_length(j) for j in range(1, lam.height + 1)]
    # row lengths are weakly decreasing; rank them from the bottom
    new_row = _class_index(lengths)
    shape = [new_row[h - 1] for h in lam.columns]
    return Filling(shape, {(i, new_row[j - 1]) for i, j in T.dots})


# -- psi: left-nesting-free matchings <-> flat column-strict row-positive -----


@_takes(Matching)
def strict_filling_of(M: Matching) -> Filling:
    """The strict filling whose border labelling reproduces ``M``."""
    row_of = {}
    heights = []
    openers = 0
    closer_to_arc = {c: i for i, (_, c) in enumerate(M.arcs, start=1)}
    for p in range(1, 2 * M.n + 1):
        if p in closer_to_arc:
            heights.append(openers)
        else:
            openers += 1
            row_of[p] = openers
    if heights[0] == 0:
        raise AssertionError("first closer precedes every opener")
    return Filling(heights, {(i, row_of[o]) for i, (o, _) in enumerate(M.arcs, start=1)})


@_takes(Filling)
def matching_of_strict(T: Filling) -> Matching:
    """Read a matching off the border labelling of a strict filling."""
    flags = filling_predicates(T)
    if not flags.strict:
        raise DomainError("expected a strict filling")
    row_label, col_label = {}, {}
    label, prev = 0, 0
    for i, h in enumerate(T.shape.columns, start=1):
        for j in range(prev + 1, h + 1):
            label += 1
            row_label[j] = label
        prev = h
        label += 1
        col_label[i] = label
    return Matching((row_label[j], col_label[i]) for i, j in T.dots)


@_takes(Matching)
def psi(M: Matching) -> Filling:
    if M.has_left_nesting():
        raise DomainError(f"{M} has a left nesting")
    return flatten(strict_filling_of(M))


@_takes(Filling)
def psi_inv(T: Filling) -> Matching:
    flags = filling_predicates(T)
    if not (flags.flat and flags.column_strict and flags.row_positive):
        raise DomainError("expected a flat column-strict row-positive filling")
    rows = T.rows()
    offset = [0]
    for r in rows:
        offset.append(offset[-1] + len(r))
    # dots of one row become an ascending chain in consecutive rows of equal length
    dots = []
    for r, cols in enumerate(rows, start=1):
        for k, i in enumerate(cols, start=1):
            dots.append((i, offset[r - 1] + k))
    heights = [offset[h] for h in T.shape.columns]
    return matching_of_strict(Filling(heights, dots))


# -- f: flat column-strict fillings -> marked matchings -----------------------


def _row_starts(shape: PartitionShape) -> list[int]:
    """Column where each row of a flat shape begins, bottom row first."""
    lazy = shape.lazy_set
    return [i for i in range(1, shape.length + 1) if i not in lazy]


@_takes(Filling)
def remove_empty_rows(T: Filling) -> Filling:
    occupied = sorted({j for _, j in T.dots})
    shape = [bisect_right(occupied, h) for h in T.shape.columns]
    return Filling(shape, {(i, bisect_left(occupied, j) + 1) for i, j in T.dots})


@_takes(Filling)
def f_marked(T: Filling) -> MarkedMatching:
    _require_flat_column_strict(T)
    return MarkedMatching(psi_inv(remove_empty_rows(T)), T.X)


@_takes(MarkedMatching)
def f_marked_inv(mm: MarkedMatching) -> Filling:
    reduced = psi(mm.base)
    starts = _row_starts(reduced.shape)
    shape = PartitionShape.flat(mm.n, mm.marks)
    target_starts = _row_starts(shape)
    # the row beginning at a given column keeps that column; the rest are new empty rows
    alpha = [target_starts.index(starts[a - 1]) + 1 for a in reduced.alpha_int]
    return Filling.from_alpha(shape, alpha)


# -- g: column-positive staircase fillings -> enriched permutation fillings ---


def _require_staircase_column_positive(T: Filling) -> None:
    flags = filling_predicates(T)
    if not (flags.staircase and flags.column_positive and T.shape.columns[0] == 1):
        raise DomainError("expected a column-positive staircase filling")


@_takes(Filling)
def g(T: Filling) -> Filling:
    _require_staircase_column_positive(T)
    dots: set[tuple[int, int]] = set()
    for c, rows in enumerate(T.alpha, start=1):
        top = max(rows)
        # open an empty row at height ``top``, pushing that row and those above up
        dots = {(i, j + 1 if j >= top else j) for i, j in dots}
        dots.update((c, j) for j in rows)
    return Filling(PartitionShape.square(T.ell), dots)


@_takes(Filling)
def g_inv(rho: Filling) -> Filling:
    if not is_enriched_permutation(rho):
        raise DomainError("expected an enriched permutation filling")
    ell = rho.ell
    start = {j: min(cols) for j, cols in enumerate(rho.rows(), start=1)}
    dots = []
    for i, rows in enumerate(rho.alpha, start=1):
        kept = sorted(j for j in start if start[j] <= i)
        dots.extend((i, kept.index(j) + 1) for j in rows)
    return Filling(PartitionShape.staircase(ell), dots)


@_takes(Filling)
def transpose(rho: Filling) -> Filling:
    """Reflect a square filling in its north-west to south-east diagonal."""
    if not rho.shape.is_square():
        raise DomainError("transpose needs a square filling")
    e = rho.ell + 1
    return Filling(rho.shape, {(e - j, e - i) for i, j in rho.dots})


@_takes(Filling)
def iota(T: Filling) -> Filling:
    return g_inv(transpose(g(T)))


# -- left-nesting-free matchings -> permutations, left crossings to ascents ---


@_takes(Matching)
def leftcross_to_perm(M: Matching) -> Permutation:
    if M.has_left_nesting():
        raise DomainError(f"{M} has a left nesting")
    arcs = M.arcs
    kind = {}  # point -> ("o" | "c", arc index)
    for idx, (o, c) in enumerate(arcs, start=1):
        kind[o] = ("o", idx)
        kind[c] = ("c", idx)
    word: list[int] = []
    present: list[int] = []  # sorted points of the arcs inserted so far
    for m, (o, c) in enumerate(arcs, start=1):
        present.insert(bisect_left(present, o), o)
        present.append(c)
        k = present.index(o)
        nxt_kind, j = kind[present[k + 1]]
        assert nxt_kind == "c"
        if j == m:
            word.insert(0, m)
            continue
        prev_kind, prev_arc = kind[present[k - 1]] if k > 0 else ("c", None)
        if prev_kind == "c":
            word.insert(word.index(j), m)
        else:
            word.insert(word.index(prev_arc) + 1, m)
    return Permutation(word)
