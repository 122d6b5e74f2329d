"""Exact multivariate integer polynomials used as series coefficients.

Everything lives in one sparse polynomial ring over the integers.  The
statistic variables are ``s r x y z w ups``; ``_a _b _c`` are formal
placeholders for differences such as ``x - y`` that the generating-function
code divides out exactly before substituting them back.
"""

from __future__ import annotations

from typing import Mapping, Union

from sympy import sympify
from sympy.polys.domains import ZZ
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.rings import PolyElement, ring

VARIABLES = ("s", "r", "x", "y", "z", "w", "ups")
FORMAL = ("_a", "_b", "_c")

R, *_GENS = ring(",".join(VARIABLES + FORMAL), ZZ)
GEN = dict(zip(VARIABLES + FORMAL, _GENS))
GEN_SYMBOLS = dict(zip(VARIABLES + FORMAL, R.symbols))

Poly = PolyElement
Coeff = Union[Poly, int]

s, r, x, y, z, w, ups, fa, fb, fc = _GENS
ZERO, ONE = R.zero, R.one


def const(c: Coeff) -> Poly:
    return R(c)


def strip(p: Poly, divisor: Poly) -> Poly:
    """Exact quotient ``p / divisor``; fails loudly if there is a remainder."""
    try:
        return p.exquo(divisor)
    except ExactQuotientFailed as exc:
        raise ArithmeticError(f"{p} is not divisible by {divisor}") from exc


def subs(p: Poly, mapping: Mapping[str, Coeff]) -> Poly:
    if not mapping:
        return p
    return p.compose([(GEN[name], R(v)) for name, v in mapping.items()])


def variables_of(p: Poly) -> set[str]:
    names = VARIABLES + FORMAL
    return {names[k] for m in p.monoms() for k, e in enumerate(m) if e}


def monomial_label(monom: tuple[int, ...]) -> str:
    """``s^2 x^1`` style label of an exponent vector; ``1`` for the constant."""
    names = VARIABLES + FORMAL
    parts = [f"{names[k]}^{e}" for k, e in enumerate(monom) if e]
    return " ".join(parts) if parts else "1"


def coefficient_table(p: Poly) -> list[tuple[str, int]]:
    """(monomial label, integer coefficient) pairs in graded-lex order."""
    return [(monomial_label(m), int(c)) for m, c in p.terms(order="grlex")]


def to_text(p: Poly) -> str:
    """Canonical text form, e.g. ``2*s^2*x - 1``."""
    if not p:
        return "0"
    names = VARIABLES + FORMAL
    out = []
    for m, c in p.terms(order="grlex"):
        c = int(c)
        factors = [n if e == 1 else f"{n}^{e}" for n, e in zip(names, m) if e]
        mag = abs(c)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(mag), *factors])
        if not out:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(out)


def from_text(text: str) -> Poly:
    return R.from_expr(sympify(text.replace("^", "**"), locals=dict(GEN_SYMBOLS)))
