"""Set-valued statistics of permutations, matchings and fillings.

Set-valued statistics are dataclass fields named as in the literature
(``Asc``, ``Rne``, ...); the lowercase property of the same name is its
cardinality.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .core import (
    Filling,
    Matching,
    Permutation,
    ascent_tops,
    comp,
    filling_predicates,
    has_left_nesting,
    opener_index,
    right_adjacencies,
    silly_ascents,
)

Set = frozenset[int]


def shift(s: Set, k: int) -> Set:
    return frozenset(v + k for v in s)


@dataclass(frozen=True)
class PermStats:
    n: int
    Asc: Set
    Des: Set
    P: Set
    Q: Set
    R: Set
    Asc_silly: Set
    P_silly: Set
    Q_silly: Set
    Rmin: Set
    Rmax: Set
    Ascbottom: Set
    Ascbottom_long: Set
    comp: int

    @property
    def Asc_long(self) -> Set:
        return self.P | self.Q

    @property
    def P_silly_plus(self) -> Set:
        return shift(self.P_silly, 1)

    @property
    def Q_silly_plus(self) -> Set:
        return shift(self.Q_silly, 1)

    asc = property(lambda self: len(self.Asc))
    des = property(lambda self: len(self.Des))
    p = property(lambda self: len(self.P))
    q = property(lambda self: len(self.Q))
    adjasc = property(lambda self: len(self.R))
    asc_long = property(lambda self: len(self.P) + len(self.Q))
    asc_silly = property(lambda self: len(self.Asc_silly))
    p_silly = property(lambda self: len(self.P_silly))
    q_silly = property(lambda self: len(self.Q_silly))
    rmin = property(lambda self: len(self.Rmin))
    rmax = property(lambda self: len(self.Rmax))
    ascbottom = property(lambda self: len(self.Ascbottom))
    ascbottom_long = property(lambda self: len(self.Ascbottom_long))


def perm_stats(pi: Permutation) -> PermStats:
    w = pi.word
    n = len(w)
    pos = pi.positions()

    asc = ascent_tops(w)
    P, Q, R = set(), set(), set()
    for j in range(1, n):
        v = w[j]
        if w[j - 1] >= v:
            continue
        if w[j - 1] == v - 1:
            R.add(v)
        elif pos[v - 1] > j + 1:
            P.add(v)
        else:
            Q.add(v)

    silly = silly_ascents(w)
    P_silly = frozenset(v for v in silly if pos[v + 1] < pos[v])

    rmin, rmax = set(), set()
    lo, hi = n + 1, 0
    for v in reversed(w):
        if v < lo:
            rmin.add(v)
            lo = v
        if v > hi:
            rmax.add(v)
            hi = v

    return PermStats(
        n=n,
        Asc=asc,
        Des=frozenset(w[j] for j in range(1, n) if w[j - 1] > w[j]),
        P=frozenset(P),
        Q=frozenset(Q),
        R=frozenset(R),
        Asc_silly=silly,
        P_silly=P_silly,
        Q_silly=silly - P_silly,
        Rmin=frozenset(rmin),
        Rmax=frozenset(rmax),
        Ascbottom=frozenset(w[j] for j in range(n - 1) if w[j] < w[j + 1]),
        Ascbottom_long=frozenset(w[j] for j in range(n - 1) if w[j] < w[j + 1] - 1),
        comp=comp(pi),
    )


@dataclass(frozen=True)
class MatchStats:
    n: int
    Radj: Set
    Ladj: Set
    Rne: Set
    Rcr: Set
    Lcr: Set
    LRcr: Set
    Min: Set
    has_left_nesting: bool
    comp: int

    @property
    def Rcr_single(self) -> Set:
        return self.Rcr - self.LRcr

    @property
    def Lcr_single(self) -> Set:
        return self.Lcr - shift(self.LRcr, -1)

    radj = property(lambda self: len(self.Radj))
    ladj = property(lambda self: len(self.Ladj))
    rne = property(lambda self: len(self.Rne))
    rcr = property(lambda self: len(self.Rcr))
    lcr = property(lambda self: len(self.Lcr))
    lrcr = property(lambda self: len(self.LRcr))
    rcr_single = property(lambda self: len(self.Rcr_single))
    lcr_single = property(lambda self: len(self.Lcr_single))
    min = property(lambda self: len(self.Min))

    @property
    def inter(self) -> int:
        # the identity inter(M) - 1 = n - 1 - radj(M)
        return self.n - len(self.Radj)


def match_stats(M: Matching) -> MatchStats:
    arcs = M.arcs
    n = len(arcs)
    by_opener = opener_index(arcs)
    radj = right_adjacencies(arcs)

    rne, rcr, lrcr = set(), set(), set()
    for i in radj:
        o_prev, o = arcs[i - 2][0], arcs[i - 1][0]
        if o < o_prev:
            rne.add(i)
        else:
            rcr.add(i)
            if o_prev + 1 == o:
                lrcr.add(i)

    ladj, lcr = set(), set()
    for o, i in by_opener.items():
        j = by_opener.get(o + 1)
        if j is None:
            continue
        ladj.add(i)
        if arcs[i - 1][1] < arcs[j - 1][1]:
            lcr.add(i)

    first_closer = arcs[0][1]
    return MatchStats(
        n=n,
        Radj=radj,
        Ladj=frozenset(ladj),
        Rne=frozenset(rne),
        Rcr=frozenset(rcr),
        Lcr=frozenset(lcr),
        LRcr=frozenset(lrcr),
        Min=frozenset(i for i, (o, _) in enumerate(arcs, start=1) if o < first_closer),
        has_left_nesting=has_left_nesting(arcs),
        comp=comp(M),
    )


class FillStats:
    """Statistics of a filling, computed lazily.

    ``Des``, ``Asc``, ``Rep`` and the column set ``Rmax`` only make sense for
    column-strict fillings and raise ``ValueError`` otherwise.
    """

    def __init__(self, T: Filling):
        self.T = T
        self.column_strict = filling_predicates(T).column_strict

    def _alpha(self) -> tuple[int, ...]:
        if not self.column_strict:
            raise ValueError("statistic defined only for column-strict fillings")
        return self.T.alpha_int

    @property
    def n(self) -> int:
        return self.T.n

    @property
    def ell(self) -> int:
        return self.T.ell

    @property
    def X(self) -> Set:
        return self.T.X

    @cached_property
    def Min(self) -> Set:
        return frozenset(i for i, j in self.T.dots if j == 1)

    @cached_property
    def Max(self) -> Set:
        lam = self.T.shape
        return frozenset(i for i, j in self.T.dots if j == lam[i])

    @cached_property
    def Rmax(self) -> Set:
        alpha = self._alpha()
        lam = self.T.shape.columns
        depth = [h - a for h, a in zip(lam, alpha)]
        out, best = set(), None
        for i in range(len(depth), 0, -1):
            if best is None or depth[i - 1] < best:
                out.add(i)
                best = depth[i - 1]
        return frozenset(out)

    def _pairs(self, rel) -> Set:
        a = self._alpha()
        return frozenset(i for i in range(2, len(a) + 1) if rel(a[i - 2], a[i - 1]))

    @cached_property
    def Des(self) -> Set:
        return self._pairs(lambda x, y: x > y)

    @cached_property
    def Asc(self) -> Set:
        return self._pairs(lambda x, y: x < y)

    @cached_property
    def Rep(self) -> Set:
        return self._pairs(lambda x, y: x == y)

    @property
    def min(self) -> int:
        return len(self.Min)

    @property
    def max(self) -> int:
        return len(self.Max)

    @cached_property
    def rmax(self) -> int:
        """Dots strictly closer to the top of their column than any dot further right."""
        lam = self.T.shape
        depth = sorted(((i, lam[i] - j) for i, j in self.T.dots), reverse=True)
        count, best, k = 0, None, 0
        # sweep columns right to left; ``best`` is the min depth strictly to the right
        while k < len(depth):
            i = depth[k][0]
            group = []
            while k < len(depth) and depth[k][0] == i:
                group.append(depth[k][1])
                k += 1
            count += sum(1 for d in group if best is None or d < best)
            m = min(group)
            best = m if best is None else min(best, m)
        return count

    @cached_property
    def lmin(self) -> int:
        """Dots strictly to the left of every dot strictly below them."""
        dots = self.T.dots
        count = 0
        for i, j in dots:
            if all(i < i2 for i2, j2 in dots if j2 < j):
                count += 1
        return count

    @property
    def des(self) -> int:
        return len(self.Des)

    @property
    def asc(self) -> int:
        return len(self.Asc)

    @property
    def rep(self) -> int:
        return len(self.Rep)

    @cached_property
    def comp(self) -> int:
        return comp(self.T)


def fill_stats(T: Filling) -> FillStats:
    return FillStats(T)
