"""Exact arithmetic in the rational function field K = Q(s), where q = s^2.

A :class:`Scalar` is stored as a reduced fraction of two integer polynomials
in ``s``.  Polynomials are tuples of ``int`` coefficients, lowest degree
first, with no trailing zeros (the zero polynomial is ``()``).

Canonical form:

* gcd(num, den) = 1 in Q[s];
* the integer content of ``num`` and ``den`` taken together is 1;
* ``den`` has a positive leading coefficient;
* zero is ``() / (1,)``.

Two scalars are equal iff their canonical forms are identical.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import DivisionByZero

Poly = tuple  # tuple[int, ...]

_ONE: Poly = (1,)


# ---------------------------------------------------------------------------
# integer polynomial helpers
# ---------------------------------------------------------------------------

def _trim(c: list[int]) -> Poly:
    n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    return tuple(c[:n])


def _padd(a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return _trim(out)


def _psub(a: Poly, b: Poly) -> Poly:
    out = list(a) + [0] * (len(b) - len(a))
    for i, x in enumerate(b):
        out[i] -= x
    return _trim(out)


def _pneg(a: Poly) -> Poly:
    return tuple(-x for x in a)


def _pmul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    if len(a) == 1:
        k = a[0]
        return tuple(k * x for x in b)
    if len(b) == 1:
        k = b[0]
        return tuple(k * x for x in a)
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return tuple(out)


def _content(a: Poly) -> int:
    g = 0
    for x in a:
        g = gcd(g, x)
        if g == 1:
            break
    return g


def _valuation(a: Poly) -> int:
    for i, x in enumerate(a):
        if x:
            return i
    raise ValueError("valuation of zero polynomial")


def _is_monomial(a: Poly) -> bool:
    return sum(1 for x in a if x) == 1


def _primitive(a: Poly) -> Poly:
    c = _content(a)
    if a[-1] < 0:
        c = -c
    if c == 1:
        return a
    return tuple(x // c for x in a)


def _prem(a: Poly, b: Poly) -> Poly:
    """Pseudo-remainder of a by b (integer arithmetic only)."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while r and len(r) - 1 >= db:
        k = len(r) - 1 - db
        lr = r[-1]
        r = [x * lb for x in r]
        for i, bi in enumerate(b):
            r[i + k] -= lr * bi
        r = list(_trim(r))
    return tuple(r)


def _pdivexact(a: Poly, b: Poly) -> Poly:
    """Quotient a / b, where b is known to divide a in Z[s]."""
    if len(b) == 1:
        k = b[0]
        return tuple(x // k for x in a)
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    q = [0] * (len(a) - db)
    for k in range(len(a) - 1 - db, -1, -1):
        c = r[k + db]
        if c:
            t = c // lb
            q[k] = t
            for i, bi in enumerate(b):
                r[i + k] -= t * bi
    return _trim(q)


def _pgcd(a: Poly, b: Poly) -> Poly:
    """Primitive gcd in Z[s] with positive leading coefficient."""
    if not a:
        return _primitive(b)
    if not b:
        return _primitive(a)
    va, vb = _valuation(a), _valuation(b)
    v = min(va, vb)
    if _is_monomial(a) or _is_monomial(b):
        return (0,) * v + (1,)
    a = _primitive(a[va:])
    b = _primitive(b[vb:])
    if len(a) < len(b):
        a, b = b, a
    while len(b) > 1:
        r = _prem(a, b)
        if not r:
            break
        a, b = b, _primitive(r)
    else:
        # b became a nonzero constant
        return (0,) * v + (1,)
    return (0,) * v + b


def _normalize(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    if not num:
        return (), _ONE
    if not den:
        raise DivisionByZero("zero denominator")
    if den != _ONE:
        g = _pgcd(num, den)
        if g != _ONE:
            num = _pdivexact(num, g)
            den = _pdivexact(den, g)
    c = gcd(_content(num), _content(den))
    if den[-1] < 0:
        c = -c
    if c != 1:
        num = tuple(x // c for x in num)
        den = tuple(x // c for x in den)
    return num, den


# ---------------------------------------------------------------------------
# Scalar
# ---------------------------------------------------------------------------

class Scalar:
    """An element of Q(s), immutable and hashable."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, value=0):
        if isinstance(value, Scalar):
            num, den = value.num, value.den
        elif isinstance(value, int):
            num, den = ((value,) if value else ()), _ONE
        elif isinstance(value, Fraction):
            num, den = _normalize(
                (value.numerator,) if value.numerator else (), (value.denominator,))
        else:
            raise TypeError(f"cannot make a Scalar from {type(value).__name__}")
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def _raw(cls, num: Poly, den: Poly) -> "Scalar":
        obj = cls.__new__(cls)
        obj.num = num
        obj.den = den
        obj._hash = None
        return obj

    @classmethod
    def from_polys(cls, num, den=(1,)) -> "Scalar":
        """Build ``num/den`` from integer coefficient sequences in ``s``."""
        num, den = _trim(list(num)), _trim(list(den))
        if not den:
            raise DivisionByZero("zero denominator")
        return cls._raw(*_normalize(num, den))

    # -- predicates -------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.num

    def is_one(self) -> bool:
        return self.num == _ONE and self.den == _ONE

    def is_polynomial(self) -> bool:
        return self.den == _ONE

    def is_constant(self) -> bool:
        """True when the scalar lies in Q."""
        return len(self.num) <= 1 and len(self.den) == 1

    def is_negative(self) -> bool:
        """Sign convention used for printing: leading numerator coefficient < 0."""
        return bool(self.num) and self.num[-1] < 0

    def to_fraction(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a rational constant")
        return Fraction(self.num[0] if self.num else 0, self.den[0])

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not other.num:
            return self
        if not self.num:
            return other
        if self.den == other.den:
            num = _padd(self.num, other.num)
            if self.den == _ONE:
                return Scalar._raw(num, _ONE) if num else ZERO
            return Scalar._raw(*_normalize(num, self.den))
        num = _padd(_pmul(self.num, other.den), _pmul(other.num, self.den))
        return Scalar._raw(*_normalize(num, _pmul(self.den, other.den)))

    __radd__ = __add__

    def __neg__(self):
        return Scalar._raw(_pneg(self.num), self.den)

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
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not self.num or not other.num:
            return ZERO
        if self.den == _ONE and other.den == _ONE:
            return Scalar._raw(_pmul(self.num, other.num), _ONE)
        return Scalar._raw(*_normalize(_pmul(self.num, other.num),
                                       _pmul(self.den, other.den)))

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if not self.num:
            raise DivisionByZero("inverse of zero")
        num, den = self.den, self.num
        if den[-1] < 0:
            num, den = _pneg(num), _pneg(den)
        return Scalar._raw(num, den)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- comparison / hashing --------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.num == other.num and self.den == other.den
        other = _coerce(other)
        if other is NotImplemented:
            return False
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __bool__(self):
        return bool(self.num)

    # -- printing ---------------------------------------------------------
    def __repr__(self):
        return f"Scalar({self})"

    def __str__(self):
        var = "q" if all(i % 2 == 0 for i, c in enumerate(self.num) if c) and \
            all(i % 2 == 0 for i, c in enumerate(self.den) if c) else "s"
        n = _poly_str(self.num, var)
        if self.den == _ONE:
            return n
        d = _poly_str(self.den, var)
        if sum(1 for c in self.num if c) > 1:
            n = f"({n})"
        if not _is_bare(self.den):
            d = f"({d})"
        return f"{n}/{d}"

    def needs_parens(self) -> bool:
        """True when the printed form has a top-level ``+``/``-``."""
        return self.den == _ONE and sum(1 for c in self.num if c) > 1


def _is_bare(p: Poly) -> bool:
    # an integer, or a lone power of the variable with coefficient 1
    nz = [(i, c) for i, c in enumerate(p) if c]
    return len(nz) == 1 and (nz[0][0] == 0 or nz[0][1] == 1)


def _poly_str(p: Poly, var: str) -> str:
    if not p:
        return "0"
    step = 2 if var == "q" else 1
    parts = []
    for i in range(len(p) - 1, -1, -1):
        c = p[i]
        if not c:
            continue
        k = i // step
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        a = abs(c)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts)


def _coerce(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Fraction)):
        return Scalar(x)
    return NotImplemented


ZERO = Scalar._raw((), _ONE)
ONE = Scalar._raw(_ONE, _ONE)
S = Scalar._raw((0, 1), _ONE)
Q = Scalar._raw((0, 0, 1), _ONE)


def scalar(value) -> Scalar:
    """Coerce an int, Fraction or Scalar to a Scalar."""
    out = _coerce(value)
    if out is NotImplemented:
        raise TypeError(f"cannot make a Scalar from {type(value).__name__}")
    return out


def q_power(k: int) -> Scalar:
    """Return q^k = s^(2k)."""
    return sqrt_q_power(2 * k)


def sqrt_q_power(k: int) -> Scalar:
    """Return s^k, i.e. (q^(1/2))^k."""
    if k >= 0:
        return Scalar._raw((0,) * k + (1,), _ONE)
    return Scalar._raw(_ONE, (0,) * (-k) + (1,))
