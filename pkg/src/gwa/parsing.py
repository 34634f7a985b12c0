"""Recursive-descent parser for scalars, Laurent polynomials and algebra elements.

Grammar (whitespace is ignored)::

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*
    unary  := ("+" | "-") unary | power
    power  := atom ("^" ["+" | "-"] INT)?
    atom   := INT | NAME | "(" expr ")"

Names: ``q`` and ``s`` (scalars, q = s^2) everywhere, plus ``h`` in Laurent
mode, ``h``, ``x``, ``y`` in gwa mode and ``v``, ``u`` in localized mode.
Division is only allowed by nonzero scalars.  Negative exponents are only
allowed on invertible monomials, so ``x^-1`` is an ExponentError in gwa mode.
"""
from __future__ import annotations

import re

from .algebra import PRESETS, AlgebraSpec, AutoSpec, GwaElement, preset
from .errors import DivisionByZero, ExponentError, ParseError
from .laurent import H, LaurentPoly
from .localized import LocAlgebra, LocElement
from .scalars import Q, S, Scalar

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_]\w*)|(?P<op>[-+*/^()]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            bad = len(text) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[bad]!r}", bad)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, names: dict, mode: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0
        self.names = names
        self.mode = mode

    # -- token helpers ----------------------------------------------------
    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def accept(self, op: str) -> bool:
        kind, val, _ = self.peek()
        if kind == "op" and val == op:
            self.i += 1
            return True
        return False

    def expect(self, op: str):
        if not self.accept(op):
            kind, val, pos = self.peek()
            found = "end of input" if kind == "end" else repr(val)
            raise ParseError(f"expected {op!r}, found {found}", pos)

    # -- grammar ----------------------------------------------------------
    def parse(self):
        value = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {val!r}", pos)
        return value

    def expr(self):
        value = self.term()
        while True:
            if self.accept("+"):
                value = value + self.term()
            elif self.accept("-"):
                value = value - self.term()
            else:
                return value

    def term(self):
        value = self.unary()
        while True:
            if self.accept("*"):
                value = value * self.unary()
            elif self.peek()[:2] == ("op", "/"):
                pos = self.take()[2]
                divisor = self.unary()
                if not isinstance(divisor, Scalar):
                    raise ParseError("division is only allowed by scalars", pos)
                if not divisor:
                    raise ParseError("division by zero", pos)
                value = value * divisor.inverse()
            else:
                return value

    def unary(self):
        if self.accept("-"):
            return -self.unary()
        if self.accept("+"):
            return self.unary()
        return self.power()

    def power(self):
        start = self.peek()[2]
        base = self.atom()
        if not self.accept("^"):
            return base
        sign = 1
        if self.accept("-"):
            sign = -1
        else:
            self.accept("+")
        kind, val, pos = self.take()
        if kind != "int":
            raise ParseError("exponent must be an integer", pos)
        n = sign * int(val)
        if n >= 0:
            return base ** n
        return self.invert(base, start) ** (-n)

    def invert(self, base, pos: int):
        if isinstance(base, Scalar):
            if not base:
                raise ParseError("negative power of zero", pos)
            return base.inverse()
        if isinstance(base, LaurentPoly):
            if len(base) == 1:
                return base ** -1
        elif isinstance(base, GwaElement):
            if base.is_laurent() and base.n_terms() == 1:
                return base.algebra.from_laurent(base.component(0) ** -1)
        elif isinstance(base, LocElement):
            if base.is_monomial():
                return base.inverse()
        if self.mode == "gwa":
            raise ExponentError("negative exponents apply only to scalars and monomials c*h^k "
                                "in gwa mode", pos)
        raise ExponentError(f"negative exponent on a non-monomial factor in {self.mode} mode", pos)

    def atom(self):
        kind, val, pos = self.take()
        if kind == "int":
            return Scalar(int(val))
        if kind == "name":
            try:
                return self.names[val]
            except KeyError:
                allowed = ", ".join(sorted(self.names))
                raise ParseError(f"unknown name {val!r} (allowed: {allowed})", pos) from None
        if kind == "op" and val == "(":
            value = self.expr()
            self.expect(")")
            return value
        found = "end of input" if kind == "end" else repr(val)
        raise ParseError(f"expected a number, name or '(', found {found}", pos)


_SCALARS = {"q": Q, "s": S}


def parse_scalar(text: str) -> Scalar:
    value = _Parser(text, dict(_SCALARS), "scalar").parse()
    return value


def parse_laurent(text: str, var: str = "h") -> LaurentPoly:
    value = _Parser(text, {**_SCALARS, var: H}, "laurent").parse()
    if isinstance(value, Scalar):
        value = LaurentPoly.constant(value)
    return value


def parse_element(text: str, algebra, mode: str | None = None):
    """Parse ``text`` as an element of a GWA (mode "gwa") or a localized algebra."""
    if mode is None:
        mode = "localized" if isinstance(algebra, LocAlgebra) else "gwa"
    if mode == "gwa":
        if not isinstance(algebra, AlgebraSpec):
            raise TypeError("gwa mode needs an AlgebraSpec")
        names = {**_SCALARS, "h": algebra.h, "x": algebra.x, "y": algebra.y}
        lift = algebra.const
    elif mode == "localized":
        if not isinstance(algebra, LocAlgebra):
            raise TypeError("localized mode needs a LocAlgebra")
        names = {**_SCALARS, "v": algebra.v, "u": algebra.u}
        lift = algebra.const
    else:
        raise ValueError(f"unknown mode {mode!r}")
    try:
        value = _Parser(text, names, mode).parse()
    except DivisionByZero as exc:
        raise ParseError(str(exc)) from None
    if isinstance(value, Scalar):
        value = lift(value)
    return value


def _parse_auto(text: str, var: str) -> AutoSpec:
    p = parse_laurent(text, var)
    if len(p) != 1 or p.support[0] not in (1, -1):
        raise ParseError(f"automorphism must have the form c*{var}^1 or c*{var}^-1, got {text!r}")
    (e, c), = p.items()
    return AutoSpec(c, e)


def _fields(text: str, allowed: set[str]) -> dict[str, str]:
    out: dict[str, str] = {}
    offset = 0
    for chunk in text.split(";"):
        if chunk.strip():
            key, sep, value = chunk.partition("=")
            key = key.strip()
            if not sep or key not in allowed:
                raise ParseError(f"expected one of {sorted(allowed)} as key=value, got {chunk.strip()!r}",
                                 offset)
            if key in out:
                raise ParseError(f"duplicate key {key!r}", offset)
            out[key] = value
        offset += len(chunk) + 1
    return out


def parse_algebra(text: str) -> AlgebraSpec:
    """Preset name, or ``sigma=c*h^e;a=<laurent expr>``."""
    name = text.strip()
    if name in PRESETS or "=" not in name:
        return preset(name)
    fields = _fields(text, {"sigma", "a"})
    if set(fields) != {"sigma", "a"}:
        raise ParseError("algebra spec needs both sigma=... and a=...")
    return AlgebraSpec(_parse_auto(fields["sigma"], "h"), parse_laurent(fields["a"]))


def parse_loc_algebra(text: str) -> LocAlgebra:
    """``phi=c*v^e``, e.g. ``phi=q*v`` for the quantum torus."""
    fields = _fields(text, {"phi"})
    if "phi" not in fields:
        raise ParseError("localized algebra spec needs phi=c*v^e")
    return LocAlgebra(_parse_auto(fields["phi"], "v"))


def format_loc_algebra(L: LocAlgebra) -> str:
    from .printing import _join, _power, _term
    return "phi=" + _join([_term(L.phi.c, _power("v", L.phi.e))])
