"""Deterministic exhaustive generators for every object family.

Streams are lazy and canonical: permutations in lexicographic order,
left-nesting-free matchings in lexicographic order of their inversion
tables, fillings in lexicographic order of their column data.
"""

from __future__ import annotations

from itertools import chain, combinations, permutations, product
from typing import Callable, Iterator

from .core import (
    BarredPermutation,
    Filling,
    HattedPermutation,
    Matching,
    MarkedMatching,
    PartitionShape,
    Permutation,
    ascent_tops,
    filling_predicates,
    right_adjacencies,
    silly_ascents,
)

MAX_N = 9


class BoundExceeded(ValueError):
    """Requested size is beyond what exhaustive enumeration is allowed to do."""


def _check(n: int, cap: int = MAX_N) -> None:
    if n < 1:
        raise ValueError("size must be positive")
    if n > cap:
        raise BoundExceeded(f"size {n} exceeds the enumeration cap {cap}")


def subsets(items) -> Iterator[frozenset]:
    items = sorted(items)
    return (
        frozenset(c)
        for c in chain.from_iterable(combinations(items, k) for k in range(len(items) + 1))
    )


def inversion_tables(n: int) -> Iterator[tuple[int, ...]]:
    """All sequences with ``1 <= alpha_j <= j``, lexicographically."""
    return product(*(range(1, j + 1) for j in range(1, n + 1)))


# -- permutations -------------------------------------------------------------


def perms(n: int) -> Iterator[Permutation]:
    _check(n)
    return (Permutation(w) for w in permutations(range(1, n + 1)))


def perm_from_inversion_table(alpha) -> Permutation:
    """Insert ``j`` at position ``alpha_j`` for j = 1, 2, ..."""
    word: list[int] = []
    for j, a in enumerate(alpha, start=1):
        word.insert(a - 1, j)
    return Permutation(word)


def barred_perms(n: int) -> Iterator[BarredPermutation]:
    for p in perms(n):
        for bars in subsets(ascent_tops(p.word)):
            yield BarredPermutation(p, bars)


def hatted_perms(n: int) -> Iterator[HattedPermutation]:
    for p in perms(n):
        for hats in subsets(silly_ascents(p.word)):
            yield HattedPermutation(p, hats)


# -- matchings ----------------------------------------------------------------


def nlm_from_inversion_table(alpha) -> Matching:
    """Add arc j by putting its closer at the far right and its opener
    immediately left of the ``alpha_j``-th closer."""
    points: list[tuple[str, int]] = []
    for j, a in enumerate(alpha, start=1):
        points.append(("c", j))
        seen = 0
        for k, (kind, _) in enumerate(points):
            if kind == "c":
                seen += 1
                if seen == a:
                    points.insert(k, ("o", j))
                    break
    return _matching_from_points(points)


def _matching_from_points(points) -> Matching:
    where: dict[int, list[int]] = {}
    for p, (_, j) in enumerate(points, start=1):
        where.setdefault(j, []).append(p)
    return Matching(where.values())


def nlm_matchings(n: int) -> Iterator[Matching]:
    """Left-nesting-free matchings of size n, one per inversion table."""
    _check(n)

    def grow(points: list, j: int) -> Iterator[Matching]:
        if j > n:
            yield _matching_from_points(points)
            return
        closers = [k for k, (kind, _) in enumerate(points) if kind == "c"]
        closers.append(len(points))
        for a in range(1, j + 1):
            k = closers[a - 1]
            nxt = points[:k] + [("o", j)] + points[k:] + [("c", j)]
            yield from grow(nxt, j + 1)

    return grow([], 1)


def all_matchings(n: int, cap: int = 7) -> Iterator[Matching]:
    """Every perfect matching of 1..2n (pairs the smallest free point first)."""
    _check(n, cap)

    def rec(free: tuple[int, ...]) -> Iterator[list[tuple[int, int]]]:
        if not free:
            yield []
            return
        a = free[0]
        for k in range(1, len(free)):
            rest = free[1:k] + free[k + 1 :]
            for tail in rec(rest):
                yield [(a, free[k])] + tail

    for arcs in rec(tuple(range(1, 2 * n + 1))):
        yield Matching(arcs)


def nlm_matchings_by_filter(n: int) -> Iterator[Matching]:
    """Slow oracle: filter every matching for the absence of left nestings."""
    return (m for m in all_matchings(n, cap=6) if not m.has_left_nesting())


def marked_matchings(n: int) -> Iterator[MarkedMatching]:
    for m in nlm_matchings(n):
        for marks in subsets(right_adjacencies(m.arcs)):
            yield MarkedMatching(m, marks)


# -- fillings -----------------------------------------------------------------


def flat_shapes(ell: int) -> Iterator[PartitionShape]:
    _check(ell)
    for lazy in subsets(range(2, ell + 1)):
        yield PartitionShape.flat(ell, lazy)


def flat_column_strict_fillings(ell: int) -> Iterator[Filling]:
    for shape in flat_shapes(ell):
        for alpha in product(*(range(1, h + 1) for h in shape.columns)):
            yield Filling.from_alpha(shape, alpha)


def _nonempty_subsets(m: int) -> list[tuple[int, ...]]:
    return [c for k in range(1, m + 1) for c in combinations(range(1, m + 1), k)]


def staircase_column_positive_fillings(ell: int) -> Iterator[Filling]:
    _check(ell, 6)
    shape = PartitionShape.staircase(ell)
    for alpha in product(*(_nonempty_subsets(i) for i in range(1, ell + 1))):
        yield Filling.from_alpha(shape, alpha)


def shape_fillings(
    shape: PartitionShape, predicate: Callable[[Filling], bool] | None = None, max_cells: int = 20
) -> Iterator[Filling]:
    """Every 0-1 filling of ``shape`` (optionally filtered), by brute force."""
    cells = shape.cells()
    if len(cells) > max_cells:
        raise BoundExceeded(f"{len(cells)} cells exceed the brute-force cap {max_cells}")
    for bits in product((0, 1), repeat=len(cells)):
        T = Filling(shape, [c for c, b in zip(cells, bits) if b])
        if predicate is None or predicate(T):
            yield T


def enriched_fillings_by_filter(ell: int) -> Iterator[Filling]:
    """Slow oracle for enriched permutation fillings of the ell x ell square."""
    return shape_fillings(
        PartitionShape.square(ell), lambda T: filling_predicates(T).enriched_permutation
    )
