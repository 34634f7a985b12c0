"""Skew Laurent rings k[v^{+-1}][u^{+-1}; phi] with u p(v) = phi(p)(v) u.

phi(v) = c*v gives the quantum torus (u v = c v u); phi(v) = c*v^-1 gives
the skew-Laurent ring that localizes involution GWAs.  This module also
holds the embeddings of GWAs into these rings and the constructive
decomposition of derivations of the quantum torus.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import AlgebraSpec, AutoSpec, Family, GwaElement
from .errors import (AlgebraMismatch, InvalidDerivation, NotInvolution, NotQuantum,
                     NotTorus, PullbackFailure)
from .laurent import ONE_POLY, ZERO_POLY, LaurentPoly
from .scalars import ONE, ZERO, Scalar, scalar


@dataclass(frozen=True)
class LocAlgebra:
    phi: AutoSpec
    _cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    @property
    def is_torus(self) -> bool:
        return self.phi.e == 1 and not self.phi.is_root_of_unity

    def phi_power(self, n: int) -> AutoSpec:
        out = self._cache.get(n)
        if out is None:
            out = self._cache[n] = self.phi.power(n)
        return out

    def shift(self, p: LaurentPoly, n: int) -> LaurentPoly:
        if not n or p.is_constant():
            return p
        return self.phi_power(n)(p)

    def element(self, parts=None) -> "LocElement":
        clean = {}
        for j, p in (parts or {}).items():
            if isinstance(p, dict):
                p = LaurentPoly(p)
            elif not isinstance(p, LaurentPoly):
                p = LaurentPoly.constant(p)
            if p:
                clean[int(j)] = p
        return LocElement(self, clean)

    def monomial(self, coeff, v_exp: int, u_exp: int) -> "LocElement":
        return self.element({u_exp: LaurentPoly.monomial(coeff, v_exp)})

    def const(self, c) -> "LocElement":
        return self.element({0: LaurentPoly.constant(c)})

    @property
    def zero(self):
        return LocElement(self, {})

    @property
    def one(self):
        return LocElement(self, {0: ONE_POLY})

    @property
    def u(self):
        return self.monomial(1, 0, 1)

    @property
    def u_inv(self):
        return self.monomial(1, 0, -1)

    @property
    def v(self):
        return self.monomial(1, 1, 0)

    @property
    def v_inv(self):
        return self.monomial(1, -1, 0)


def torus(c) -> LocAlgebra:
    """Quantum torus with u v = c v u."""
    return LocAlgebra(AutoSpec(scalar(c), 1))


def skew_laurent(c=1) -> LocAlgebra:
    """k[v^{+-1}][u^{+-1}; v -> c/v]."""
    return LocAlgebra(AutoSpec(scalar(c), -1))


class LocElement:
    """sum_j parts[j](v) * u^j, coefficients on the left."""

    __slots__ = ("algebra", "parts", "_hash")

    def __init__(self, algebra: LocAlgebra, parts: dict):
        self.algebra = algebra
        self.parts = parts
        self._hash = None

    def component(self, j: int) -> LaurentPoly:
        return self.parts.get(j, ZERO_POLY)

    def is_zero(self) -> bool:
        return not self.parts

    def __bool__(self):
        return bool(self.parts)

    def is_monomial(self) -> bool:
        return len(self.parts) == 1 and len(next(iter(self.parts.values()))) == 1

    def bidegree_terms(self):
        """Yield (v exponent, u exponent, coefficient)."""
        for j in sorted(self.parts):
            for i, c in self.parts[j].items():
                yield i, j, c

    def _lift(self, other):
        if isinstance(other, LocElement):
            if other.algebra != self.algebra:
                raise AlgebraMismatch("elements belong to different localized algebras")
            return other
        if isinstance(other, LaurentPoly):
            return LocElement(self.algebra, {0: other} if other else {})
        if isinstance(other, (int, Fraction, Scalar)):
            return self.algebra.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        parts = dict(self.parts)
        for j, p in other.parts.items():
            w = parts.get(j)
            if w is None:
                parts[j] = p
            else:
                w = w + p
                if w:
                    parts[j] = w
                else:
                    del parts[j]
        return LocElement(self.algebra, parts)

    __radd__ = __add__

    def __neg__(self):
        return LocElement(self.algebra, {j: -p for j, p in self.parts.items()})

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
        return _loc_mul(self.algebra, self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            return self.scale(other)
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return _loc_mul(self.algebra, other, self)

    def scale(self, k):
        k = scalar(k)
        if not k:
            return self.algebra.zero
        return LocElement(self.algebra, {j: p.scale(k) for j, p in self.parts.items()})

    def inverse(self) -> "LocElement":
        """Inverse of a unit.  Units of these rings are exactly the monomials."""
        if not self.is_monomial():
            raise ValueError(f"{self} is not a unit")
        (j, p), = self.parts.items()
        (i, c), = p.items()
        inv = LaurentPoly.monomial(c.inverse(), -i)
        return LocElement(self.algebra, {-j: self.algebra.shift(inv, -j)})

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result, base = self.algebra.one, self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, LocElement):
            return self.algebra == other.algebra and self.parts == other.parts
        if isinstance(other, (int, Fraction, Scalar, LaurentPoly)):
            return self == self._lift(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.parts.items()))
        return self._hash

    def __repr__(self):
        return f"LocElement({self})"

    def __str__(self):
        from .printing import format_loc
        return format_loc(self)


def _loc_mul(L: LocAlgebra, a: LocElement, b: LocElement) -> LocElement:
    out: dict[int, LaurentPoly] = {}
    for i, p in a.parts.items():
        for j, r in b.parts.items():
            term = p * L.shift(r, i)
            k = i + j
            w = out.get(k)
            out[k] = term if w is None else w + term
    return LocElement(L, {k: p for k, p in out.items() if p})


def loc_mul(L: LocAlgebra, a: LocElement, b: LocElement) -> LocElement:
    if a.algebra != L or b.algebra != L:
        raise AlgebraMismatch("operands are not elements of the given localized algebra")
    return _loc_mul(L, a, b)


def loc_commutator(a: LocElement, b: LocElement) -> LocElement:
    return a * b - b * a


# ---------------------------------------------------------------------------
# embeddings
# ---------------------------------------------------------------------------

class Embedding:
    """Injective homomorphism A -> L with h -> v.

    ``x_side``: x -> u, y -> a(v) u^-1.
    ``y_side``: x -> u^-1 a(v), y -> u (involution algebras only).

    In both cases X^n lands on factor(n)(v) * u^(+-n) where factor(n) is a
    product of phi-shifts of a; ``pullback`` divides that factor back out.
    """

    def __init__(self, A: AlgebraSpec, side: str = "x_side"):
        if side not in ("x_side", "y_side"):
            raise ValueError("side must be 'x_side' or 'y_side'")
        self.source = A
        self.side = side
        phi = A.sigma if side == "x_side" else A.sigma.inverse()
        self.target = LocAlgebra(phi)
        self._factors: dict[int, LaurentPoly] = {}
        self._check_relations()

    def u_power(self, n: int) -> int:
        return n if self.side == "x_side" else -n

    def factor(self, n: int) -> LaurentPoly:
        out = self._factors.get(n)
        if out is not None:
            return out
        L, a = self.target, self.source.a
        out = ONE_POLY
        if self.side == "x_side" and n < 0:
            # (a u^-1)^k = a phi^-1(a) ... phi^-(k-1)(a) u^-k
            for i in range(-n):
                out = out * L.shift(a, -i)
        elif self.side == "y_side" and n > 0:
            # (u^-1 a)^n = phi^-1(a) ... phi^-n(a) u^-n
            for i in range(1, n + 1):
                out = out * L.shift(a, -i)
        self._factors[n] = out
        return out

    def __call__(self, elem: GwaElement) -> LocElement:
        if elem.algebra != self.source:
            raise AlgebraMismatch("element is not in the source algebra")
        parts = {}
        for n, p in elem.parts.items():
            parts[self.u_power(n)] = p * self.factor(n)
        return LocElement(self.target, parts)

    def pullback(self, elem: LocElement) -> GwaElement:
        if elem.algebra != self.target:
            raise AlgebraMismatch("element is not in the target algebra")
        parts = {}
        for j, p in elem.parts.items():
            n = j if self.side == "x_side" else -j
            f = self.factor(n)
            if len(f) == 1 and f.constant_term().is_one():
                parts[n] = p
                continue
            try:
                parts[n] = p.divide(f)
            except Exception:
                raise PullbackFailure(
                    f"{elem} is not in the image of {self.source}: "
                    f"u^{j} coefficient not divisible by {f}") from None
        return GwaElement(self.source, parts)

    def contains(self, elem: LocElement) -> bool:
        try:
            self.pullback(elem)
        except PullbackFailure:
            return False
        return True

    def _check_relations(self):
        A = self.source
        h, x, y = (self(g) for g in A.generators())
        a = self(A.from_laurent(A.a))
        sa = self(A.from_laurent(A.sigma(A.a)))
        sh = self(A.from_laurent(A.sigma.image_of_h()))
        sih = self(A.from_laurent(A.sigma.inverse().image_of_h()))
        ok = (y * x == a and x * y == sa and x * h == sh * x and y * h == sih * y)
        if not ok:
            raise AssertionError(f"{self.side} map is not a homomorphism on {A}")


def embed_quantum(A: AlgebraSpec, elem: GwaElement | None = None):
    """h -> v, x -> u, y -> a(v) u^-1 into the quantum torus.

    With ``elem`` given, returns its image; otherwise returns the Embedding.
    """
    if A.family is not Family.QUANTUM:
        raise NotQuantum(f"{A} is not a quantum GWA")
    emb = _embedding(A, "x_side")
    return emb if elem is None else emb(elem)


def embed_involution(A: AlgebraSpec, elem: GwaElement | None = None, side: str = "x_side"):
    if A.family is not Family.INVOLUTION:
        raise NotInvolution(f"{A} is not an involution GWA")
    emb = _embedding(A, side)
    return emb if elem is None else emb(elem)


def _embedding(A: AlgebraSpec, side: str) -> Embedding:
    key = ("embedding", side)
    emb = A._cache.get(key)
    if emb is None:
        emb = A._cache[key] = Embedding(A, side)
    return emb


# ---------------------------------------------------------------------------
# derivations of localized algebras
# ---------------------------------------------------------------------------

class LocDerivation:
    """A derivation of L given by the images of u and v."""

    def __init__(self, algebra: LocAlgebra, Du: LocElement, Dv: LocElement):
        if Du.algebra != algebra or Dv.algebra != algebra:
            raise AlgebraMismatch("derivation images must lie in the algebra")
        self.algebra = algebra
        self.Du = Du
        self.Dv = Dv
        self._pow_cache: dict[int, LocElement] = {}
        self._upow_cache: dict[int, LocElement] = {}

    def on_v_power(self, i: int) -> LocElement:
        L = self.algebra
        out = self._pow_cache.get(i)
        if out is not None:
            return out
        if i == 0:
            out = L.zero
        elif i == 1:
            out = self.Dv
        elif i == -1:
            out = -(L.v_inv * self.Dv * L.v_inv)
        elif i > 1:
            out = self.on_v_power(i - 1) * L.v + L.monomial(1, i - 1, 0) * self.Dv
        else:
            out = self.on_v_power(i + 1) * L.v_inv + L.monomial(1, i + 1, 0) * self.on_v_power(-1)
        self._pow_cache[i] = out
        return out

    def on_u_power(self, j: int) -> LocElement:
        L = self.algebra
        out = self._upow_cache.get(j)
        if out is not None:
            return out
        if j == 0:
            out = L.zero
        elif j == 1:
            out = self.Du
        elif j == -1:
            out = -(L.u_inv * self.Du * L.u_inv)
        elif j > 1:
            out = self.on_u_power(j - 1) * L.u + L.monomial(1, 0, j - 1) * self.Du
        else:
            out = self.on_u_power(j + 1) * L.u_inv + L.monomial(1, 0, j + 1) * self.on_u_power(-1)
        self._upow_cache[j] = out
        return out

    def on_laurent(self, p: LaurentPoly) -> LocElement:
        out = self.algebra.zero
        for i, c in p.items():
            if i:
                out = out + self.on_v_power(i).scale(c)
        return out

    def __call__(self, elem: LocElement) -> LocElement:
        L = self.algebra
        out = L.zero
        for j, p in elem.parts.items():
            uj = L.monomial(1, 0, j)
            out = out + self.on_laurent(p) * uj + LocElement(L, {0: p}) * self.on_u_power(j)
        return out

    def residual(self) -> LocElement:
        """D(u)v + uD(v) - D(phi(v))u - phi(v)D(u); zero iff D is a derivation."""
        L = self.algebra
        phv = L.element({0: L.phi.image_of_h()})
        lhs = self.Du * L.v + L.u * self.Dv
        rhs = self.on_laurent(L.phi.image_of_h()) * L.u + phv * self.Du
        return lhs - rhs

    def is_valid(self) -> bool:
        return self.residual().is_zero()

    def __add__(self, other: "LocDerivation") -> "LocDerivation":
        return LocDerivation(self.algebra, self.Du + other.Du, self.Dv + other.Dv)

    def __sub__(self, other: "LocDerivation") -> "LocDerivation":
        return LocDerivation(self.algebra, self.Du - other.Du, self.Dv - other.Dv)

    def __eq__(self, other):
        if not isinstance(other, LocDerivation):
            return NotImplemented
        return self.algebra == other.algebra and self.Du == other.Du and self.Dv == other.Dv

    __hash__ = None


def loc_inner(L: LocAlgebra, t: LocElement) -> LocDerivation:
    """ad_t(r) = t r - r t."""
    return LocDerivation(L, loc_commutator(t, L.u), loc_commutator(t, L.v))


def loc_delta(L: LocAlgebra, alpha, beta) -> LocDerivation:
    """u -> alpha u, v -> beta v."""
    return LocDerivation(L, L.u.scale(alpha), L.v.scale(beta))


def decompose_torus_derivation(L: LocAlgebra, D: LocDerivation) -> tuple[LocElement, Scalar, Scalar]:
    """Write D = ad_t + delta_{alpha,beta} with t having no constant term.

    A shift (i, j) component of D has D(u) = A v^i u^(j+1), D(v) = B v^(i+1) u^j,
    and the relation forces A (c^j - 1) = B (1 - c^i); ad of T v^i u^j
    produces A = T (1 - c^i), B = T (c^j - 1).
    """
    if not L.is_torus:
        raise NotTorus(f"v -> {L.phi.c}*v^{L.phi.e} is not a quantum torus with c != +-1")
    if D.algebra != L:
        raise AlgebraMismatch("derivation is over a different algebra")
    if not D.is_valid():
        raise InvalidDerivation("images of u, v violate u v = c v u")
    c = L.phi.c
    comps: dict[tuple[int, int], list] = {}
    for i, j, coef in D.Du.bidegree_terms():
        comps.setdefault((i, j - 1), [ZERO, ZERO])[0] = coef
    for i, j, coef in D.Dv.bidegree_terms():
        comps.setdefault((i - 1, j), [ZERO, ZERO])[1] = coef
    alpha, beta = ZERO, ZERO
    t_terms: dict[int, dict[int, Scalar]] = {}
    for (i, j), (A_, B_) in sorted(comps.items()):
        if i == 0 and j == 0:
            alpha, beta = A_, B_
            continue
        if i != 0:
            T = A_ / (1 - c ** i)
        else:
            T = B_ / (c ** j - 1)
        if T:
            t_terms.setdefault(j, {})[i] = T
    t = L.element({j: LaurentPoly(d) for j, d in t_terms.items()})
    if loc_inner(L, t) + loc_delta(L, alpha, beta) != D:
        raise InvalidDerivation("derivation does not decompose; relation check inconsistent")
    return t, alpha, beta
