"""Command-line front end: enumerate, verify, series, bijection."""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from functools import lru_cache
from pathlib import Path
from typing import Callable

from . import bijections as bij
from . import genfunc as gf
from . import ncseries as nc
from . import oracle
from .core import (
    BarredPermutation,
    Filling,
    HattedPermutation,
    Matching,
    MarkedMatching,
    Permutation,
)
from .enumeration import MAX_N, BoundExceeded, nlm_matchings, perms

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE, EXIT_IO, EXIT_CAP = 0, 1, 2, 3, 4
CACHE_ENV = "NESTCROSS_CACHE"


class UsageError(Exception):
    pass


# -- cache --------------------------------------------------------------------


@lru_cache(maxsize=1)
def code_version() -> str:
    """Hash of the package sources, so a code change invalidates every cache entry."""
    h = hashlib.sha256()
    root = Path(__file__).resolve().parent
    for path in sorted(root.rglob("*.py")):
        h.update(path.relative_to(root).as_posix().encode())
        h.update(path.read_bytes())
    return h.hexdigest()[:16]


def cache_dir(flag: str | None) -> Path:
    if flag:
        return Path(flag)
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or Path.home() / ".cache"
    return Path(base) / "nestcross"


def _cached(args, key_parts: list[str], produce: Callable[[], str]) -> str:
    if args.no_cache:
        return produce()
    key = hashlib.sha256("\0".join([code_version(), *key_parts]).encode()).hexdigest()
    path = cache_dir(args.cache_dir) / f"{key}.out"
    if path.is_file():
        return path.read_text(encoding="utf-8")
    text = produce()
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    tmp.write_text(text, encoding="utf-8", newline="\n")
    tmp.replace(path)
    return text


def _emit(args, text: str) -> None:
    if args.output and args.output != "-":
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _check_cap(n: int) -> None:
    if n < 1:
        raise UsageError("size must be at least 1")
    if n > MAX_N:
        raise BoundExceeded(f"{n} exceeds the hard cap {MAX_N}")


# -- JSON object codec ----------------------------------------------------------


def encode(obj) -> dict:
    if isinstance(obj, Filling):
        return {"shape": list(obj.shape.columns), "dots": [list(c) for c in sorted(obj.dots)]}
    if isinstance(obj, BarredPermutation):
        return {"word": list(obj.word), "bars": sorted(obj.bars)}
    if isinstance(obj, HattedPermutation):
        return {"word": list(obj.word), "hats": sorted(obj.hats)}
    if isinstance(obj, Permutation):
        return {"word": list(obj.word)}
    if isinstance(obj, MarkedMatching):
        return {"arcs": [list(a) for a in obj.arcs], "marks": sorted(obj.marks)}
    if isinstance(obj, Matching):
        return {"arcs": [list(a) for a in obj.arcs]}
    raise TypeError(f"cannot encode {type(obj).__name__}")


def decode(doc: dict):
    if "shape" in doc:
        return Filling(doc["shape"], doc.get("dots", []))
    if "word" in doc:
        p = Permutation(doc["word"])
        if "bars" in doc:
            return BarredPermutation(p, doc["bars"])
        if "hats" in doc:
            return HattedPermutation(p, doc["hats"])
        return p
    if "arcs" in doc:
        m = Matching(doc["arcs"])
        return MarkedMatching(m, doc["marks"]) if "marks" in doc else m
    raise ValueError("object must have a 'shape', 'word' or 'arcs' field")


MAPS: dict[str, Callable] = {
    "phi": bij.phi,
    "phi_inv": bij.phi_inv,
    "phi_silly": bij.phi_silly,
    "phi_silly_inv": bij.phi_silly_inv,
    "psi": bij.psi,
    "psi_inv": bij.psi_inv,
    "f": bij.f_marked,
    "f_inv": bij.f_marked_inv,
    "steepen": bij.steepen,
    "flatten": bij.flatten,
    "g": bij.g,
    "g_inv": bij.g_inv,
    "transpose": bij.transpose,
    "iota": bij.iota,
    "leftcross": bij.leftcross_to_perm,
}


# -- commands -------------------------------------------------------------------


def cmd_enumerate(args) -> int:
    _check_cap(args.n)
    family = oracle.family_name(args.family)
    stats = [s for chunk in args.stats for s in chunk.split(",") if s]
    if args.raw:
        key = ["enumerate-raw", family, str(args.n)]

        def produce() -> str:
            gen = perms if family == "perms" else nlm_matchings
            return "".join(json.dumps(encode(o)) + "\n" for o in gen(args.n))

    else:
        if not stats:
            raise UsageError("--stats is required unless --raw is given")
        key = ["enumerate", family, str(args.n), ",".join(stats), args.format]

        def produce() -> str:
            dist = oracle.distribution(family, args.n, stats, jobs=args.jobs)
            return dist.to_json() if args.format == "json" else dist.to_csv()

    _emit(args, _cached(args, key, produce))
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.theorem is None and args.conjecture is None:
        raise UsageError("give --theorem or --conjecture")
    _check_cap(args.n_max)
    if args.conjecture is not None:
        report = oracle.check_conjecture(args.conjecture, args.n_max)
    else:
        report = oracle.check_theorem(args.theorem, args.n_max)
    _emit(args, report.to_json())
    print(
        f"{report.check_id}: {report.status} for n <= {args.n_max} ({report.elapsed:.2f}s)",
        file=sys.stderr,
    )
    return EXIT_OK if report.verified else EXIT_COUNTEREXAMPLE


def _csv(rows, header: str) -> str:
    lines = [header]
    lines += [f'{n},"{label}",{c}' for n, label, c in rows]
    return "\n".join(lines) + "\n"


SERIES_FORMULAS = (
    "fishburn",
    "nc-main",
    "nc-brute",
    "ascbottom-nc",
    "main-xyz",
    "main-sxy",
    "conj20",
    "leftcrossing",
)


def _series_text(args) -> str:
    f = args.formula
    if f == "fishburn":
        return ",".join(map(str, gf.eval_fishburn(args.n_max))) + "\n"
    if f == "nc-main":
        return nc.eval_main(args.variant, args.max_degree).to_text()
    if f == "nc-brute":
        return _brute_text(args)
    if f == "ascbottom-nc":
        return gf.eval_ascentbottom_nc(args.max_degree).to_text()
    if f == "main-xyz":
        series = gf.eval_theorem_main_xyz(args.n_max)
    elif f == "main-sxy":
        series = gf.eval_theorem_main_sxy(args.n_max)
    elif f == "conj20":
        series = gf.eval_conj20_formula(args.n_max)
    else:
        variant = args.variant if args.variant in gf.LEFTCROSS_VARIANTS else "xyzups"
        series = gf.eval_leftcrossing(args.n_max, variant)
    return _csv(series.to_rows(), "n,monomial,coefficient")


def _brute_text(args) -> str:
    d = args.max_degree
    if args.variant == "general-w":
        mappers = {"perms": nc.perm_pqr, "nlm": nc.nlm_rne_rcr_lrcr}
    elif args.variant == "silly-s":
        mappers = {"perms": nc.perm_p_qr, "perms-silly": nc.perm_silly, "nlm": nc.nlm_rne_rcr}
    else:
        raise UsageError(f"nc-brute supports general-w and silly-s, not {args.variant}")
    if args.family not in mappers:
        raise UsageError(f"family must be one of {sorted(mappers)}")
    family = "perms" if args.family.startswith("perms") else "nlm"
    series = nc.bar_to_uvw(nc.brute_series(d, family, mappers[args.family], nc.BAR_ALPHABET))
    if args.variant == "general-w":
        series = nc.set_s(series)
    return series.to_text()


def cmd_series(args) -> int:
    if args.formula in ("nc-main", "nc-brute", "ascbottom-nc"):
        if args.max_degree < 1:
            raise UsageError("--max-degree must be at least 1")
        _check_cap(args.max_degree)
    else:
        _check_cap(args.n_max)
    if args.formula == "nc-main" and args.variant not in nc.VARIANTS:
        raise UsageError(f"--variant must be one of {nc.VARIANTS}")
    key = ["series", args.formula, args.variant, str(args.n_max), str(args.max_degree), args.family]
    _emit(args, _cached(args, key, lambda: _series_text(args)))
    return EXIT_OK


def cmd_bijection(args) -> int:
    fn = MAPS[args.map]
    raw = sys.stdin.read() if args.input in (None, "-") else Path(args.input).read_text()
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise UsageError(f"input is not JSON: {exc}") from None
    _emit(args, json.dumps(encode(fn(decode(doc)))) + "\n")
    return EXIT_OK


# -- argument parsing -------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nestcross",
        description="Enumerate, verify and expand generating functions for pattern statistics "
        "on permutations and left-nesting-free matchings.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", "-o", help="output file (default: stdout)")
    common.add_argument("--cache-dir", help=f"cache directory (default: ${CACHE_ENV})")
    common.add_argument("--no-cache", action="store_true", help="neither read nor write the cache")
    common.add_argument(
        "--jobs",
        type=int,
        default=oracle.default_jobs(),
        help="worker processes (default: all cores)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[common], help="statistic distribution over a family")
    p.add_argument("--family", required=True, choices=["perms", "nlm", "nlm_matchings"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--stats", action="append", default=[], help="comma-separated statistic names")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--raw", action="store_true", help="list the objects as JSON lines instead")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", parents=[common], help="run a theorem or conjecture check")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--theorem", choices=sorted(oracle.THEOREMS))
    g.add_argument("--conjecture", type=int, choices=[1, 2])
    p.add_argument("--n-max", type=int, required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("series", parents=[common], help="expand a generating function")
    p.add_argument("--formula", required=True, choices=SERIES_FORMULAS)
    p.add_argument(
        "--variant", default="general-w", help="general-w, silly-s, full, xyzups or sxyups"
    )
    p.add_argument("--n-max", type=int, default=7)
    p.add_argument("--max-degree", type=int, default=5)
    p.add_argument("--family", default="perms", help="for nc-brute: perms, perms-silly or nlm")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("bijection", parents=[common], help="apply a map to a JSON object")
    p.add_argument("--map", required=True, choices=sorted(MAPS))
    p.add_argument("--input", help="input file (default: stdin)")
    p.set_defaults(func=cmd_bijection)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except BoundExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (UsageError, ValueError, TypeError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
