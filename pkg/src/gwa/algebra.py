"""Degree-one generalized Weyl algebras k[h^{+-1}](sigma, a).

Elements are kept in the graded normal form

    sum_{n>0} p_n(h) x^n  +  p_0(h)  +  sum_{n>0} p_{-n}(h) y^n

with every Laurent coefficient on the left.  Internally a single map
degree -> coefficient is used; we write X^n for x^n (n >= 0) and y^-n (n < 0).

Multiplication rule: (p X^m)(r X^n) = p * sigma^m(r) * C(m, n) * X^(m+n) where
C(m, n) collapses the crossing powers:

    x^m y^k = [prod_{i<j} sigma^(m-i)(a)]     x^(m-j) y^(k-j),   j = min(m, k)
    y^k x^n = [prod_{i<j} sigma^(i-k+1)(a)]   y^(k-j) x^(n-j),   j = min(k, n)
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import AlgebraMismatch, UnknownPreset, ZeroCoefficient, ZeroPolynomial
from .laurent import H, ONE_POLY, ZERO_POLY, LaurentPoly, is_monomial, laurent, substitute
from .scalars import ONE, Q, Scalar, scalar


@dataclass(frozen=True)
class AutoSpec:
    """The automorphism h -> c * h^e of k[h^{+-1}]."""

    c: Scalar
    e: int

    def __post_init__(self):
        object.__setattr__(self, "c", scalar(self.c))
        if not self.c:
            raise ZeroCoefficient("sigma(h) = c*h^e needs c != 0")
        if self.e not in (1, -1):
            raise ValueError("sigma(h) = c*h^e needs e = +1 or -1")

    def __call__(self, p: LaurentPoly) -> LaurentPoly:
        return substitute(p, self.c, self.e)

    def power(self, n: int) -> "AutoSpec":
        if self.e == 1:
            return AutoSpec(self.c ** n, 1)
        return AutoSpec(self.c, -1) if n % 2 else AutoSpec(ONE, 1)

    def inverse(self) -> "AutoSpec":
        return self.power(-1)

    @property
    def is_identity(self) -> bool:
        return self.e == 1 and self.c.is_one()

    @property
    def is_root_of_unity(self) -> bool:
        """c is +-1 with e = +1; the only roots of unity in Q(s)."""
        return self.e == 1 and (self.c.is_one() or (-self.c).is_one())

    def image_of_h(self) -> LaurentPoly:
        return LaurentPoly.monomial(self.c, self.e)


class Family(enum.Enum):
    COMMUTATIVE = "Commutative"
    QUANTUM = "Quantum"
    INVOLUTION = "Involution"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class AlgebraSpec:
    sigma: AutoSpec
    a: LaurentPoly
    _cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    def __post_init__(self):
        if self.a.is_zero():
            raise ZeroPolynomial("the defining polynomial a must be nonzero")

    def __str__(self):
        from .printing import format_algebra
        return format_algebra(self)

    # -- structural data --------------------------------------------------
    @property
    def family(self) -> Family:
        return classify_family(self)

    @property
    def a_is_monomial(self) -> bool:
        return is_monomial(self.a)

    def sigma_power(self, n: int) -> AutoSpec:
        key = ("sigma", n)
        out = self._cache.get(key)
        if out is None:
            out = self._cache[key] = self.sigma.power(n)
        return out

    def shift(self, p: LaurentPoly, n: int) -> LaurentPoly:
        """sigma^n(p)."""
        if not n or p.is_constant():
            return p
        return self.sigma_power(n)(p)

    def collapse(self, m: int, n: int) -> LaurentPoly:
        """C(m, n): the Laurent factor with X^m X^n = C(m, n) X^(m+n)."""
        if (m >= 0 and n >= 0) or (m <= 0 and n <= 0):
            return ONE_POLY
        key = ("collapse", m, n)
        out = self._cache.get(key)
        if out is None:
            out = ONE_POLY
            if m > 0:
                for i in range(min(m, -n)):
                    out = out * self.shift(self.a, m - i)
            else:
                k = -m
                for i in range(min(k, n)):
                    out = out * self.shift(self.a, i - k + 1)
            self._cache[key] = out
        return out

    # -- element constructors --------------------------------------------
    def element(self, parts=None) -> "GwaElement":
        """Build an element from {degree: LaurentPoly | scalar | {exp: coeff}}."""
        clean = {}
        for n, p in (parts or {}).items():
            if isinstance(p, dict):
                p = laurent(p)
            elif not isinstance(p, LaurentPoly):
                p = LaurentPoly.constant(p)
            if p:
                clean[int(n)] = p
        return GwaElement(self, clean)

    def from_laurent(self, p: LaurentPoly) -> "GwaElement":
        return GwaElement(self, {0: p} if p else {})

    def const(self, c) -> "GwaElement":
        return self.from_laurent(LaurentPoly.constant(c))

    @property
    def zero(self) -> "GwaElement":
        return GwaElement(self, {})

    @property
    def one(self) -> "GwaElement":
        return GwaElement(self, {0: ONE_POLY})

    @property
    def h(self) -> "GwaElement":
        return GwaElement(self, {0: H})

    @property
    def h_inv(self) -> "GwaElement":
        return GwaElement(self, {0: LaurentPoly.monomial(1, -1)})

    @property
    def x(self) -> "GwaElement":
        return GwaElement(self, {1: ONE_POLY})

    @property
    def y(self) -> "GwaElement":
        return GwaElement(self, {-1: ONE_POLY})

    def generators(self) -> tuple["GwaElement", "GwaElement", "GwaElement"]:
        return self.h, self.x, self.y


class GwaElement:
    """sum_n parts[n] * X^n.  Immutable; bound to its algebra."""

    __slots__ = ("algebra", "parts", "_hash")

    def __init__(self, algebra: AlgebraSpec, parts: dict):
        self.algebra = algebra
        self.parts = parts
        self._hash = None

    # -- inspection -------------------------------------------------------
    def degrees(self) -> list[int]:
        return sorted(self.parts)

    def component(self, n: int) -> LaurentPoly:
        return self.parts.get(n, ZERO_POLY)

    def homogeneous(self, n: int) -> "GwaElement":
        p = self.parts.get(n)
        return GwaElement(self.algebra, {n: p} if p else {})

    def is_zero(self) -> bool:
        return not self.parts

    def __bool__(self):
        return bool(self.parts)

    def is_laurent(self) -> bool:
        return not self.parts or set(self.parts) == {0}

    def n_terms(self) -> int:
        return sum(len(p) for p in self.parts.values())

    # -- arithmetic -------------------------------------------------------
    def _lift(self, other):
        if isinstance(other, GwaElement):
            if other.algebra != self.algebra:
                raise AlgebraMismatch("elements belong to different algebras")
            return other
        if isinstance(other, LaurentPoly):
            return self.algebra.from_laurent(other)
        if isinstance(other, (int, Fraction, Scalar)):
            return self.algebra.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        parts = dict(self.parts)
        for n, p in other.parts.items():
            w = parts.get(n)
            if w is None:
                parts[n] = p
            else:
                w = w + p
                if w:
                    parts[n] = w
                else:
                    del parts[n]
        return GwaElement(self.algebra, parts)

    __radd__ = __add__

    def __neg__(self):
        return GwaElement(self.algebra, {n: -p for n, p in self.parts.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            return self.scale(other)
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return _mul(self.algebra, self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            return self.scale(other)
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return _mul(self.algebra, other, self)

    def scale(self, k) -> "GwaElement":
        k = scalar(k)
        if not k:
            return GwaElement(self.algebra, {})
        return GwaElement(self.algebra, {n: p.scale(k) for n, p in self.parts.items()})

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result, base = self.algebra.one, self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, GwaElement):
            return self.algebra == other.algebra and self.parts == other.parts
        if isinstance(other, (int, Fraction, Scalar, LaurentPoly)):
            return self == self._lift(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.parts.items()))
        return self._hash

    def __repr__(self):
        return f"GwaElement({self})"

    def __str__(self):
        from .printing import format_gwa
        return format_gwa(self)


def _mul(A: AlgebraSpec, u: GwaElement, v: GwaElement) -> GwaElement:
    out: dict[int, LaurentPoly] = {}
    for m, p in u.parts.items():
        for n, r in v.parts.items():
            term = p * A.shift(r, m)
            c = A.collapse(m, n)
            if len(c) != 1 or not c.constant_term().is_one():
                term = term * c
            k = m + n
            w = out.get(k)
            out[k] = term if w is None else w + term
    return GwaElement(A, {k: p for k, p in out.items() if p})


def gwa_mul(A: AlgebraSpec, u: GwaElement, v: GwaElement) -> GwaElement:
    if u.algebra != A or v.algebra != A:
        raise AlgebraMismatch("operands are not elements of the given algebra")
    return _mul(A, u, v)


def commutator(A: AlgebraSpec, u: GwaElement, v: GwaElement) -> GwaElement:
    """[u, v] = u*v - v*u."""
    return gwa_mul(A, u, v) - gwa_mul(A, v, u)


def classify_family(A: AlgebraSpec) -> Family:
    if A.sigma.e == -1:
        return Family.INVOLUTION
    if A.sigma.c.is_one():
        return Family.COMMUTATIVE
    return Family.QUANTUM


def make_algebra(c, e: int, a) -> AlgebraSpec:
    """``make_algebra(Q, -1, {1: 1, 0: -1})`` is k[h^{+-1}](h -> q/h, h - 1)."""
    if isinstance(a, dict):
        a = laurent(a)
    elif not isinstance(a, LaurentPoly):
        a = LaurentPoly.constant(a)
    return AlgebraSpec(AutoSpec(scalar(c), e), a)


PRESETS = {
    "weyl_q": lambda: make_algebra(Q, 1, {1: 1, 0: -1}),
    "hayashi1": lambda: make_algebra(Q, 1, {2: 1, 0: -1}),
    "hayashi2": lambda: make_algebra(Q, 1, {4: 1, 0: -1}),
    "group_algebra": lambda: make_algebra(ONE, -1, {0: 1}),
    "torus_like": lambda: make_algebra(Q, 1, {1: 1}),
}


def preset(name: str) -> AlgebraSpec:
    try:
        return PRESETS[name]()
    except KeyError:
        raise UnknownPreset(f"unknown preset {name!r}; choose from {', '.join(PRESETS)}") from None
