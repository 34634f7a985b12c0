"""Laurent polynomials k[h^{+-1}] over :class:`~gwa.scalars.Scalar`.

Also hosts the substitution automorphisms h -> c*h^e and the three
identities on (anti)symmetric Laurent polynomials that drive the
decomposition of derivations of involution algebras.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .errors import NotAntisymmetric, NotDivisible, ZeroCoefficient, ZeroPolynomial
from .scalars import ONE, ZERO, Scalar, scalar

HALF = Scalar(Fraction(1, 2))


class LaurentPoly:
    """Finite map exponent -> nonzero Scalar.  Treat instances as immutable."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, object] | None = None):
        c = {}
        if coeffs:
            for e, v in coeffs.items():
                v = scalar(v)
                if v:
                    c[int(e)] = v
        self._c = c
        self._hash = None

    @classmethod
    def _wrap(cls, c: dict) -> "LaurentPoly":
        obj = cls.__new__(cls)
        obj._c = c
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, coeff=1, exp: int = 0) -> "LaurentPoly":
        coeff = scalar(coeff)
        return cls._wrap({exp: coeff} if coeff else {})

    @classmethod
    def constant(cls, coeff) -> "LaurentPoly":
        return cls.monomial(coeff, 0)

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[int, object]]) -> "LaurentPoly":
        acc: dict[int, Scalar] = {}
        for e, v in terms:
            acc[e] = acc.get(e, ZERO) + scalar(v)
        return cls._wrap({e: v for e, v in acc.items() if v})

    # -- inspection -------------------------------------------------------
    def items(self):
        """(exponent, coefficient) pairs in ascending exponent order."""
        return sorted(self._c.items())

    def coeff(self, e: int) -> Scalar:
        return self._c.get(e, ZERO)

    @property
    def support(self) -> list[int]:
        return sorted(self._c)

    def __len__(self):
        return len(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def min_exp(self) -> int:
        return min(self._c)

    def max_exp(self) -> int:
        return max(self._c)

    def is_constant(self) -> bool:
        return not self._c or (len(self._c) == 1 and 0 in self._c)

    def constant_term(self) -> Scalar:
        return self._c.get(0, ZERO)

    # -- ring operations --------------------------------------------------
    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not other._c:
            return self
        if not self._c:
            return other
        c = dict(self._c)
        for e, v in other._c.items():
            w = c.get(e)
            if w is None:
                c[e] = v
            else:
                w = w + v
                if w:
                    c[e] = w
                else:
                    del c[e]
        return LaurentPoly._wrap(c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._wrap({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            return self.scale(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self._c, other._c
        if not a or not b:
            return ZERO_POLY
        if len(b) == 1:
            (eb, vb), = b.items()
            if vb.is_one():
                return LaurentPoly._wrap({e + eb: v for e, v in a.items()})
        out: dict[int, Scalar] = {}
        for ea, va in a.items():
            for eb, vb in b.items():
                e = ea + eb
                w = out.get(e)
                out[e] = va * vb if w is None else w + va * vb
        return LaurentPoly._wrap({e: v for e, v in out.items() if v})

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            return self.scale(other)
        return NotImplemented

    def scale(self, k) -> "LaurentPoly":
        k = scalar(k)
        if not k:
            return ZERO_POLY
        if k.is_one():
            return self
        return LaurentPoly._wrap({e: v * k for e, v in self._c.items()})

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by h^k."""
        if not k:
            return self
        return LaurentPoly._wrap({e + k: v for e, v in self._c.items()})

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if len(self._c) != 1:
                raise NotDivisible("only monomials have Laurent inverses")
            (e, v), = self._c.items()
            return LaurentPoly.monomial(v.inverse() ** (-n), e * n)
        result, base = ONE_POLY, self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self._c == other._c
        other = _coerce(other)
        if other is NotImplemented:
            return False
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    # -- evaluation and substitution --------------------------------------
    def evaluate(self, point) -> Scalar:
        point = scalar(point)
        if not point:
            raise ZeroCoefficient("cannot evaluate a Laurent polynomial at 0")
        total = ZERO
        for e, v in self._c.items():
            total = total + v * point ** e
        return total

    def substitute(self, c, e: int) -> "LaurentPoly":
        """Return p(c*h^e) for e in {+1, -1}."""
        return substitute(self, c, e)

    def divide(self, divisor: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient self / divisor; raises NotDivisible otherwise."""
        q, r = divmod_laurent(self, divisor)
        if r:
            raise NotDivisible(f"{divisor} does not divide {self}")
        return q

    def divides(self, other: "LaurentPoly") -> bool:
        return not divmod_laurent(other, self)[1]

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        from .printing import format_laurent
        return format_laurent(self, "h")


def _coerce(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, (int, Fraction, Scalar)):
        return LaurentPoly.constant(x)
    return NotImplemented


ZERO_POLY = LaurentPoly._wrap({})
ONE_POLY = LaurentPoly._wrap({0: ONE})
H = LaurentPoly._wrap({1: ONE})
H_INV = LaurentPoly._wrap({-1: ONE})


def laurent(terms: Mapping[int, object]) -> LaurentPoly:
    """Convenience constructor: ``laurent({1: 1, 0: -1})`` is h - 1."""
    return LaurentPoly(terms)


def substitute(p: LaurentPoly, c, e: int) -> LaurentPoly:
    c = scalar(c)
    if not c:
        raise ZeroCoefficient("substitution h -> c*h^e needs c != 0")
    if e not in (1, -1):
        raise ValueError("exponent of a substitution must be +1 or -1")
    if c.is_one():
        if e == 1:
            return p
        return LaurentPoly._wrap({-k: v for k, v in p._c.items()})
    return LaurentPoly._wrap({e * k: v * c ** k for k, v in p._c.items()})


def divmod_laurent(p: LaurentPoly, d: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    """Division with remainder after clearing h-powers.

    Writes p = h^a P(h), d = h^b Dp(h) with P, Dp ordinary polynomials with
    nonzero constant term (or P = 0), divides P by Dp in K[h], and returns
    (h^(a-b) Qt, h^a R) so that p = quotient*d + remainder.  The remainder is
    zero exactly when d divides p in k[h^{+-1}].
    """
    if d.is_zero():
        raise ZeroPolynomial("division by the zero polynomial")
    if p.is_zero():
        return ZERO_POLY, ZERO_POLY
    a, b = p.min_exp(), d.min_exp()
    num = {e - a: v for e, v in p._c.items()}
    den = {e - b: v for e, v in d._c.items()}
    dd = max(den)
    lead_inv = den[dd].inverse()
    quo: dict[int, Scalar] = {}
    while num:
        top = max(num)
        if top < dd:
            break
        k = num[top] * lead_inv
        quo[top - dd] = k
        for e, v in den.items():
            key = e + top - dd
            w = num.get(key, ZERO) - k * v
            if w:
                num[key] = w
            else:
                num.pop(key, None)
    quotient = LaurentPoly._wrap({e + a - b: v for e, v in quo.items()})
    remainder = LaurentPoly._wrap({e + a: v for e, v in num.items()})
    return quotient, remainder


def is_monomial(p: LaurentPoly) -> bool:
    if p.is_zero():
        raise ZeroPolynomial("is_monomial is undefined for 0")
    return len(p) == 1


def reflect(p: LaurentPoly, c=1) -> LaurentPoly:
    """p(c*h^-1)."""
    return substitute(p, c, -1)


def is_q_symmetric(p: LaurentPoly, c) -> bool:
    """True iff p(h) = p(c*h^-1)."""
    return p == substitute(p, c, -1)


def divide_by_sym(p: LaurentPoly, c=1) -> LaurentPoly:
    """Return m with p = m*(c*h^-1 - h).

    With c = 1 the divisibility test is that 1 and -1 are roots of p.
    """
    c = scalar(c)
    if c.is_one():
        if p.evaluate(1) or p.evaluate(-1):
            raise NotDivisible(f"1 and -1 are not both roots of {p}")
    divisor = LaurentPoly._wrap({-1: c, 1: -ONE})
    try:
        return p.divide(divisor)
    except NotDivisible:
        raise NotDivisible(f"{p} is not divisible by {divisor}") from None


def extract_sym_factor(p: LaurentPoly, c=1) -> LaurentPoly:
    """Return g with p = (h^2 - c)*g and g(c*h^-1) = g(h).

    Requires p(h) = -(h^2/c)*p(c*h^-1); for c = 1 this reads p(h) = -h^2 p(h^-1).
    """
    c = scalar(c)
    if p != -(reflect(p, c).shift(2).scale(c.inverse())):
        raise NotAntisymmetric(f"{p} does not satisfy p(h) = -(h^2/c) p(c/h)")
    g = p.divide(LaurentPoly._wrap({2: ONE, 0: -c}))
    assert is_q_symmetric(g, c)
    return g


def antisym_split(p: LaurentPoly, c=1) -> tuple[LaurentPoly, LaurentPoly]:
    """Split p = g + r with g(c/h) = -g(h) and r(c/h) = r(h).

    For c = 1 this is the explicit half-antisymmetrization
    g = (1/2) * sum p_i (h^i - h^-i).
    """
    refl = reflect(p, c)
    g = (p - refl).scale(HALF)
    r = (p + refl).scale(HALF)
    return g, r
