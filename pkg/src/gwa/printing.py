"""Deterministic text output.  Everything printed here re-parses to the same value.

Ordering: graded components by ascending degree, Laurent terms by ascending
exponent.  Scalars themselves print as polynomials in q (or s) with
descending powers.
"""
from __future__ import annotations

from .scalars import Scalar


def _power(var: str, k: int) -> str:
    if k == 0:
        return ""
    if k == 1:
        return var
    return f"{var}^{k}"


def _term(coeff: Scalar, mono: str) -> tuple[bool, str, bool]:
    """Return (negative, body, is_bare_compound_scalar)."""
    neg = coeff.is_negative()
    a = -coeff if neg else coeff
    if not mono:
        return neg, str(a), a.needs_parens()
    if a.is_one():
        return neg, mono, False
    cs = str(a)
    if a.needs_parens():
        cs = f"({cs})"
    return neg, f"{cs}*{mono}", False


def _join(terms: list[tuple[bool, str, bool]]) -> str:
    if not terms:
        return "0"
    multi = len(terms) > 1
    out = []
    for i, (neg, body, compound) in enumerate(terms):
        if compound and multi:
            body = f"({body})"
        if i == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


def _laurent_terms(p, var: str, suffix: str = "") -> list[tuple[bool, str, bool]]:
    terms = []
    for e, c in p.items():
        mono = "*".join(x for x in (_power(var, e), suffix) if x)
        terms.append(_term(c, mono))
    return terms


def format_laurent(p, var: str = "h") -> str:
    return _join(_laurent_terms(p, var))


def _graded(parts: dict, var: str, word) -> str:
    terms = []
    for n in sorted(parts):
        coeff = parts[n]
        w = word(n)
        if not w or len(coeff) == 1:
            terms.extend(_laurent_terms(coeff, var, w))
        else:
            terms.append((False, f"({format_laurent(coeff, var)})*{w}", False))
    return _join(terms)


def _gwa_word(n: int) -> str:
    if n > 0:
        return _power("x", n)
    if n < 0:
        return _power("y", -n)
    return ""


def _loc_word(n: int) -> str:
    return _power("u", n)


def format_gwa(elem) -> str:
    return _graded(elem.parts, "h", _gwa_word)


def format_loc(elem) -> str:
    return _graded(elem.parts, "v", _loc_word)


def format_sigma(c: Scalar, e: int) -> str:
    return _join([_term(c, _power("h", e))])


def format_algebra(spec) -> str:
    return f"sigma={format_sigma(spec.sigma.c, spec.sigma.e)};a={format_laurent(spec.a)}"
