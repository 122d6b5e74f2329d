"""Exhaustive distributions and the theorem/conjecture checking engine."""

from __future__ import annotations

import json
import os
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from itertools import islice
from typing import Any, Callable, Iterable, Iterator, Sequence

from . import bijections as bij
from . import enumeration as en
from . import genfunc as gf
from . import ncseries as nc
from . import poly
from .core import (
    BarredPermutation,
    Filling,
    HattedPermutation,
    Matching,
    MarkedMatching,
    Permutation,
    boxcomp,
    boxed_sum,
    comp,
    direct_sum,
)
from .stats import fill_stats, match_stats, perm_stats

Key = tuple[Any, ...]

FAMILIES = {
    "perms": (en.perms, perm_stats),
    "nlm": (en.nlm_matchings, match_stats),
}
FAMILY_ALIASES = {"nlm_matchings": "nlm", "permutations": "perms"}


def family_name(name: str) -> str:
    name = FAMILY_ALIASES.get(name, name)
    if name not in FAMILIES:
        raise ValueError(f"unknown family {name!r}; expected one of {sorted(FAMILIES)}")
    return name


def statistic(obj_stats, name: str):
    try:
        value = getattr(obj_stats, name)
    except AttributeError:
        raise ValueError(f"unknown statistic {name!r}") from None
    if isinstance(value, (set, frozenset)):
        return frozenset(value)
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"{name!r} is not a numeric or set-valued statistic")
    return value


def format_value(v) -> str:
    """Sets are written as sorted comma-joined integers."""
    if isinstance(v, frozenset):
        return ",".join(map(str, sorted(v)))
    return str(v)


def _sort_key(key: Key):
    return tuple((0, v, ()) if isinstance(v, int) else (1, len(v), tuple(sorted(v))) for v in key)


# -- distributions ------------------------------------------------------------


@dataclass
class Distribution:
    family: str
    n: int
    key_schema: tuple[str, ...]
    counts: Counter = field(default_factory=Counter)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def items(self) -> list[tuple[Key, int]]:
        return sorted(self.counts.items(), key=lambda kv: _sort_key(kv[0]))

    def key_text(self, key: Key) -> str:
        return ";".join(format_value(v) for v in key)

    def to_csv(self) -> str:
        lines = ["n,key,count"]
        for key, c in self.items():
            lines.append(f'{self.n},"{self.key_text(key)}",{c}')
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        doc = {
            "family": self.family,
            "n": self.n,
            "key_schema": list(self.key_schema),
            "counts": [
                {"key": [sorted(v) if isinstance(v, frozenset) else v for v in key], "count": c}
                for key, c in self.items()
            ],
        }
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Distribution):
            return NotImplemented
        return self.n == other.n and self.counts == other.counts


def _count_slice(family: str, n: int, stats: tuple[str, ...], jobs: int, part: int) -> Counter:
    gen, stat_fn = FAMILIES[family]
    out: Counter = Counter()
    for obj in islice(gen(n), part, None, jobs):
        st = stat_fn(obj)
        out[tuple(statistic(st, s) for s in stats)] += 1
    return out


def default_jobs() -> int:
    return max(1, os.cpu_count() or 1)


def distribution(family: str, n: int, stats: Sequence[str], jobs: int = 1) -> Distribution:
    """Exact multiset of statistic tuples over all objects of size ``n``."""
    family = family_name(family)
    stats = tuple(stats)
    if n > en.MAX_N:
        raise en.BoundExceeded(f"size {n} exceeds the enumeration cap {en.MAX_N}")
    gen, stat_fn = FAMILIES[family]
    # fail fast on bad statistic names before forking
    probe = stat_fn(next(iter(gen(1))))
    for s in stats:
        statistic(probe, s)
    jobs = max(1, min(jobs, 64))
    if jobs == 1 or n < 7:
        counts = _count_slice(family, n, stats, 1, 0)
    else:
        counts = Counter()
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            futures = [ex.submit(_count_slice, family, n, stats, jobs, k) for k in range(jobs)]
            for f in futures:
                counts.update(f.result())
    return Distribution(family, n, stats, counts)


# -- reports ------------------------------------------------------------------


@dataclass
class CheckReport:
    check_id: str
    n_range: tuple[int, int]
    status: str
    witness: Any = None
    elapsed: float = 0.0

    @property
    def verified(self) -> bool:
        return self.status == "verified"

    def to_dict(self, timing: bool = False) -> dict:
        doc = {
            "check_id": self.check_id,
            "n_range": list(self.n_range),
            "status": self.status,
            "witness": self.witness,
        }
        if timing:
            doc["elapsed"] = round(self.elapsed, 3)
        return doc

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.to_dict(timing), indent=2, sort_keys=True, default=str) + "\n"


class _Counterexample(Exception):
    def __init__(self, witness):
        super().__init__(str(witness))
        self.witness = witness


def _fail(**witness):
    raise _Counterexample(_jsonable(witness))


def _jsonable(v):
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, (set, frozenset)):
        return sorted(v)
    if isinstance(v, bool) or v is None or isinstance(v, (int, str)):
        return v
    if isinstance(v, poly.Poly):
        return poly.to_text(v)
    if isinstance(v, Filling):
        return {"shape": list(v.shape.columns), "dots": sorted(map(list, v.dots))}
    if isinstance(v, Matching):
        return [list(a) for a in v.arcs]
    if isinstance(v, Permutation):
        return list(v.word)
    if isinstance(v, (BarredPermutation, HattedPermutation)):
        return {"word": list(v.word), "marked": sorted(v.X)}
    if isinstance(v, MarkedMatching):
        return {"arcs": [list(a) for a in v.arcs], "marks": sorted(v.marks)}
    return str(v)


def _run(check_id: str, lo: int, hi: int, body: Callable[[], None]) -> CheckReport:
    start = time.perf_counter()
    try:
        body()
        status, witness = "verified", None
    except _Counterexample as exc:
        status, witness = "counterexample", exc.witness
    return CheckReport(check_id, (lo, hi), status, witness, time.perf_counter() - start)


def _expect(cond: bool, **witness) -> None:
    if not cond:
        _fail(**witness)


# -- conjectures --------------------------------------------------------------


def _conjecture_keys(cid: int):
    if cid == 1:
        return (
            lambda st: (st.Lcr, st.Rne, st.Rcr),
            lambda st: (st.Ascbottom, st.P_silly_plus, st.Q_silly_plus),
            ("Lcr", "Rne", "Rcr"),
            ("Ascbottom", "P_silly_plus", "Q_silly_plus"),
        )
    if cid == 2:
        return (
            lambda st: (st.Lcr_single, st.LRcr, st.Rne, st.Rcr_single),
            lambda st: (st.Ascbottom_long, st.R, st.P, st.Q),
            ("Lcr_single", "LRcr", "Rne", "Rcr_single"),
            ("Ascbottom_long", "R", "P", "Q"),
        )
    raise ValueError(f"unknown conjecture {cid!r}; expected 1 or 2")


def check_conjecture(cid: int, n_max: int, n_min: int = 1) -> CheckReport:
    match_key, perm_key, match_names, perm_names = _conjecture_keys(cid)

    def body():
        for n in range(n_min, n_max + 1):
            left: Counter = Counter()
            for m in en.nlm_matchings(n):
                left[match_key(match_stats(m))] += 1
            right: Counter = Counter()
            for p in en.perms(n):
                right[perm_key(perm_stats(p))] += 1
            if left != right:
                key = min((left - right) + (right - left), key=_sort_key)
                _fail(
                    n=n,
                    matching_schema=match_names,
                    permutation_schema=perm_names,
                    key=key,
                    matchings=left[key],
                    permutations=right[key],
                )

    return _run(f"conjecture{cid}", n_min, n_max, body)


# -- theorems -----------------------------------------------------------------


def _check_sbij(n_max: int) -> None:
    for ell in range(1, n_max + 1):
        images = set()
        for T in en.flat_column_strict_fillings(ell):
            bp = bij.phi(T)
            _expect(bij.phi_inv(bp) == T, n=ell, filling=T, failure="round trip")
            images.add(bp)
            ft, ps = fill_stats(T), perm_stats(bp.base)
            X = T.X
            _expect(
                bp.n == T.n
                and comp(bp) == comp(T)
                and ft.Max == ps.Rmin
                and ft.Rmax == ps.Rmax
                and bp.X == X
                and ft.Des & X == ps.P & X
                and ft.Asc & X == ps.Q & X
                and ft.Rep & X == ps.R & X,
                n=ell,
                filling=T,
                image=bp,
                failure="statistic transfer",
            )
        _expect(len(images) == sum(1 for _ in en.barred_perms(ell)), n=ell, failure="not onto")


def _check_ssillybij(n_max: int) -> None:
    for ell in range(1, n_max + 1):
        images = set()
        for T in en.flat_column_strict_fillings(ell):
            hp = bij.phi_silly(T)
            _expect(bij.phi_silly_inv(hp) == T, n=ell, filling=T, failure="round trip")
            images.add(hp)
            ft, ps = fill_stats(T), perm_stats(hp.base)
            X = T.X
            _expect(
                hp.n == T.n
                and comp(hp) == comp(T)
                and ft.Max == ps.Rmin
                and ft.Rmax == ps.Rmax
                and hp.X_plus == X
                and ft.Des & X == ps.P_silly_plus & X
                and (ft.Asc | ft.Rep) & X == ps.Q_silly_plus & X,
                n=ell,
                filling=T,
                image=hp,
                failure="statistic transfer",
            )
        _expect(len(images) == sum(1 for _ in en.hatted_perms(ell)), n=ell, failure="not onto")


def _check_nbij(n_max: int) -> None:
    for ell in range(1, n_max + 1):
        images = set()
        for T in en.flat_column_strict_fillings(ell):
            mm = bij.f_marked(T)
            _expect(bij.f_marked_inv(mm) == T, n=ell, filling=T, failure="round trip")
            images.add(mm)
            ft, ms = fill_stats(T), match_stats(mm.base)
            X = T.X
            _expect(
                mm.n == T.n
                and comp(mm.base) == comp(T)
                and ft.Min == ms.Min
                and mm.X == X
                and ft.Des & X == ms.Rne & X
                and ft.Asc & X == ms.Rcr_single & X
                and ft.Rep & X == ms.LRcr & X,
                n=ell,
                filling=T,
                image=mm,
                failure="statistic transfer",
            )
        _expect(len(images) == sum(1 for _ in en.marked_matchings(ell)), n=ell, failure="not onto")


def _check_g(n_max: int) -> None:
    for ell in range(1, min(n_max, 6) + 1):
        images = set()
        for T in en.staircase_column_positive_fillings(ell):
            rho = bij.g(T)
            _expect(bij.g_inv(rho) == T, n=ell, filling=T, failure="round trip")
            images.add(rho)
            ft, fr = fill_stats(T), fill_stats(rho)
            _expect(
                rho.ell == T.ell
                and rho.n == T.n
                and comp(T) == boxcomp(rho)
                and ft.min == fr.lmin
                and ft.rmax == fr.rmax,
                n=ell,
                filling=T,
                image=rho,
                failure="statistic transfer",
            )
        if ell <= 4:
            _expect(images == set(en.enriched_fillings_by_filter(ell)), n=ell, failure="not onto")


def _check_iota(n_max: int) -> None:
    for ell in range(1, min(n_max, 6) + 1):
        for T in en.staircase_column_positive_fillings(ell):
            U = bij.iota(T)
            a, b = fill_stats(T), fill_stats(U)
            _expect(
                bij.iota(U) == T
                and a.min == b.rmax
                and a.rmax == b.min
                and U.n == T.n
                and U.ell == T.ell
                and comp(U) == comp(T),
                n=ell,
                filling=T,
                image=U,
            )


def _compare_coefficients(name: str, closed, expected: Callable[[int], Sequence], n_max: int):
    for n in range(1, n_max + 1):
        sides = expected(n)
        for k, side in enumerate(sides):
            _expect(closed[n] == side, formula=name, n=n, side=k, closed=closed[n], enumerated=side)


def _check_main_xyz(n_max: int) -> None:
    _compare_coefficients("main_xyz", gf.eval_theorem_main_xyz(n_max), gf.expected_main_xyz, n_max)


def _check_main_sxy(n_max: int) -> None:
    _compare_coefficients("main_sxy", gf.eval_theorem_main_sxy(n_max), gf.expected_main_sxy, n_max)


def _check_conj20(n_max: int) -> None:
    _compare_coefficients("conj20", gf.eval_conj20_formula(n_max), gf.expected_conj20, n_max)


def _check_conj21(n_max: int) -> None:
    closed = gf.eval_theorem_main_sxy(n_max)
    for n in range(1, n_max + 1):
        left, right = gf.eval_conj21_identity(n)
        derived = gf.conj21_from_closed_form(n, closed)
        _expect(left == right == derived, n=n, permutations=left, matchings=right, closed=derived)


def _check_zagier(n_max: int) -> None:
    values = gf.eval_fishburn(n_max + 1)
    for n in range(1, n_max + 1):
        p, m = gf.fishburn_counts(n)
        _expect(values[n] == p == m, n=n, closed=values[n], permutations=p, matchings=m)


def _check_leftcross(n_max: int) -> None:
    for variant in gf.LEFTCROSS_VARIANTS:
        closed = gf.eval_leftcrossing(n_max, variant)
        _compare_coefficients(
            f"leftcrossing-{variant}",
            closed,
            partial(gf.expected_leftcrossing, variant=variant),
            n_max,
        )
    for n in range(1, n_max + 1):
        images = set()
        for M in en.nlm_matchings(n):
            pi = bij.leftcross_to_perm(M)
            images.add(pi)
            ms, ps = match_stats(M), perm_stats(pi)
            _expect(
                ms.Lcr == ps.Ascbottom and ms.LRcr == ps.R,
                n=n,
                matching=M,
                image=pi,
                failure="left crossings to ascent bottoms",
            )
        _expect(len(images) == _factorial(n), n=n, failure="not a bijection")


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def _check_series_equal(name: str, closed: nc.NCSeries, brute: nc.NCSeries) -> None:
    if closed == brute:
        return
    words = sorted(set(closed.terms) | set(brute.terms), key=lambda w: (len(w), w))
    for w in words:
        a, b = closed.terms.get(w, poly.ZERO), brute.terms.get(w, poly.ZERO)
        if a != b:
            _fail(series=name, word=nc.spell(w), closed=a, enumerated=b)


def _check_main_nc(d: int) -> None:
    main = nc.eval_main("general-w", d)
    for family, mapper in (("perms", nc.perm_pqr), ("nlm", nc.nlm_rne_rcr_lrcr)):
        brute = nc.set_s(nc.bar_to_uvw(nc.brute_series(d, family, mapper, nc.BAR_ALPHABET)))
        _check_series_equal(f"general-w/{family}", main, brute)
    main = nc.eval_main("silly-s", d)
    for family, mapper in (
        ("perms", nc.perm_p_qr),
        ("perms", nc.perm_silly),
        ("nlm", nc.nlm_rne_rcr),
    ):
        brute = nc.bar_to_uvw(nc.brute_series(d, family, mapper, nc.BAR_ALPHABET))
        _check_series_equal(f"silly-s/{family}/{mapper.__name__}", main, brute)


def _check_ascbottom_nc(d: int) -> None:
    closed = gf.eval_ascentbottom_nc(d)
    for family, mapper in (("perms", nc.perm_ascbottom), ("nlm", nc.nlm_leftcross)):
        brute = nc.brute_series(d, family, mapper, gf.ASCBOTTOM_ALPHABET)
        _check_series_equal(f"ascbottom/{family}", closed, brute)


THEOREMS: dict[str, Callable[[int], None]] = {
    "sbij": _check_sbij,
    "ssillybij": _check_ssillybij,
    "nbij": _check_nbij,
    "g_transfer": _check_g,
    "iota": _check_iota,
    "main_xyz": _check_main_xyz,
    "main_sxy": _check_main_sxy,
    "main_nc": _check_main_nc,
    "conj20": _check_conj20,
    "conj21": _check_conj21,
    "zagier": _check_zagier,
    "leftcross": _check_leftcross,
    "ascbottom_nc": _check_ascbottom_nc,
}


def check_theorem(check_id: str, n_max: int) -> CheckReport:
    try:
        body = THEOREMS[check_id]
    except KeyError:
        raise ValueError(
            f"unknown theorem id {check_id!r}; expected one of {sorted(THEOREMS)}"
        ) from None
    if n_max < 1:
        raise ValueError("n_max must be positive")
    if n_max > en.MAX_N:
        raise en.BoundExceeded(f"n_max {n_max} exceeds the cap {en.MAX_N}")
    return _run(check_id, 1, n_max, lambda: body(n_max))


# -- direct-sum homomorphisms ---------------------------------------------------


def pairs_up_to(total: int, gen: Callable[[int], Iterable]) -> Iterator[tuple[Any, Any]]:
    """All pairs (a, b) with size(a) + size(b) <= total."""
    cache = {k: list(gen(k)) for k in range(1, total)}
    for i in range(1, total):
        for j in range(1, total - i + 1):
            for a in cache[i]:
                for b in cache[j]:
                    yield a, b


def direct_sum_homomorphisms(total: int) -> list[str]:
    """Names of maps that fail to carry direct sums to (boxed) direct sums."""
    failures = []
    checks = [
        ("phi", bij.phi, direct_sum),
        ("phi_silly", bij.phi_silly, direct_sum),
        ("f", bij.f_marked, direct_sum),
    ]
    for name, fn, plus in checks:
        for a, b in pairs_up_to(total, en.flat_column_strict_fillings):
            if fn(direct_sum(a, b)) != plus(fn(a), fn(b)):
                failures.append(name)
                break
    for a, b in pairs_up_to(min(total, 5), en.staircase_column_positive_fillings):
        if bij.g(direct_sum(a, b)) != boxed_sum(bij.g(a), bij.g(b)):
            failures.append("g")
            break
    return failures


__all__ = [
    "CheckReport",
    "Distribution",
    "THEOREMS",
    "check_conjecture",
    "check_theorem",
    "default_jobs",
    "direct_sum_homomorphisms",
    "distribution",
]
