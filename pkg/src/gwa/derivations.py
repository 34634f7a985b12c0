"""Derivations of GWAs given by the images of h, x and y.

A :class:`Derivation` is extended to the whole algebra through the Leibniz
rule over the graded normal form.  ``validate`` checks the four defining
relations; only validated derivations may be applied.

The two decompositions:

* quantum family, a not a monomial: D = ad_t + delta_alpha;
* involution family: D = ad_t + outer_derivation(z1, z2), computed inside
  the skew-Laurent localization and pulled back.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import AlgebraSpec, Family, GwaElement, commutator
from .errors import (AlgebraMismatch, InvalidDerivation, MonomialA, NotCentral,
                     NotDivisible, NotInvolution, NotQuantum, NotValidated)
from .laurent import HALF, ONE_POLY, LaurentPoly, reflect
from .linalg import det
from .localized import LocDerivation, embed_involution
from .scalars import ONE, Q, Scalar, scalar

RELATIONS = ("yx = a", "xy = sigma(a)", "xh = sigma(h)x", "yh = sigma^-1(h)y")


@dataclass
class ValidationReport:
    """Outcome of :meth:`Derivation.validate`.

    ``failures`` lists (relation index 1..4, relation text, residual) where the
    residual is D(right-hand side) minus the Leibniz expansion of the left.
    """

    failures: list = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.failures

    def __bool__(self):
        return self.valid

    def residual(self, index: int):
        for i, _, r in self.failures:
            if i == index:
                return r
        return None


class Derivation:
    """A linear map determined by Dh, Dx, Dy.  D(h^-1) is derived, never stored."""

    def __init__(self, algebra: AlgebraSpec, Dh: GwaElement, Dx: GwaElement, Dy: GwaElement,
                 validated: bool = False):
        for img in (Dh, Dx, Dy):
            if img.algebra != algebra:
                raise AlgebraMismatch("generator images must lie in the algebra")
        self.algebra = algebra
        self.Dh = Dh
        self.Dx = Dx
        self.Dy = Dy
        self.validated = validated
        self._hpow: dict[int, GwaElement] = {}
        self._word: dict[int, GwaElement] = {}

    # -- Leibniz extension ------------------------------------------------
    def on_h_power(self, i: int) -> GwaElement:
        out = self._hpow.get(i)
        if out is not None:
            return out
        A = self.algebra
        if i == 0:
            out = A.zero
        elif i == 1:
            out = self.Dh
        elif i == -1:
            out = -(A.h_inv * self.Dh * A.h_inv)
        elif i > 1:
            # D(h^i) = D(h^(i-1)) h + h^(i-1) D(h)
            out = self.on_h_power(i - 1) * A.h + A.from_laurent(LaurentPoly.monomial(1, i - 1)) * self.Dh
        else:
            out = (self.on_h_power(i + 1) * A.h_inv
                   + A.from_laurent(LaurentPoly.monomial(1, i + 1)) * self.on_h_power(-1))
        self._hpow[i] = out
        return out

    def on_laurent(self, p: LaurentPoly) -> GwaElement:
        out = self.algebra.zero
        for i, c in p.items():
            if i:
                out = out + self.on_h_power(i).scale(c)
        return out

    def on_word(self, n: int) -> GwaElement:
        """D(X^n) with X^n = x^n (n > 0) or y^-n (n < 0)."""
        out = self._word.get(n)
        if out is not None:
            return out
        A = self.algebra
        if n == 0:
            out = A.zero
        elif n == 1:
            out = self.Dx
        elif n == -1:
            out = self.Dy
        else:
            step = 1 if n > 0 else -1
            prev = A.element({n - step: ONE_POLY})
            gen = A.x if n > 0 else A.y
            out = self.on_word(n - step) * gen + prev * self.on_word(step)
        self._word[n] = out
        return out

    def _apply(self, elem: GwaElement) -> GwaElement:
        A = self.algebra
        out = A.zero
        for n, p in elem.parts.items():
            out = out + self.on_laurent(p) * A.element({n: ONE_POLY})
            if n:
                out = out + A.from_laurent(p) * self.on_word(n)
        return out

    # -- validation and application ---------------------------------------
    def validate(self) -> ValidationReport:
        A = self.algebra
        h, x, y = A.generators()
        a = A.a
        sa = A.sigma(a)
        sh = A.sigma.image_of_h()
        sih = A.sigma.inverse().image_of_h()
        Dh, Dx, Dy = self.Dh, self.Dx, self.Dy
        residuals = [
            self.on_laurent(a) - (Dy * x + y * Dx),
            self.on_laurent(sa) - (Dx * y + x * Dy),
            self.on_laurent(sh) * x + A.from_laurent(sh) * Dx - (Dx * h + x * Dh),
            self.on_laurent(sih) * y + A.from_laurent(sih) * Dy - (Dy * h + y * Dh),
        ]
        report = ValidationReport([(i + 1, RELATIONS[i], r)
                                   for i, r in enumerate(residuals) if r])
        self.validated = report.valid
        return report

    def is_valid(self) -> bool:
        return self.validate().valid

    def apply(self, elem: GwaElement) -> GwaElement:
        if not self.validated:
            raise NotValidated("call validate() first; the images do not define a checked derivation")
        if elem.algebra != self.algebra:
            raise AlgebraMismatch("element is not in the derivation's algebra")
        return self._apply(elem)

    __call__ = apply

    def images(self) -> tuple[GwaElement, GwaElement, GwaElement]:
        return self.Dh, self.Dx, self.Dy

    # -- linear structure -------------------------------------------------
    def _combine(self, other: "Derivation", sign: int) -> "Derivation":
        if other.algebra != self.algebra:
            raise AlgebraMismatch("derivations over different algebras")
        imgs = [s + o.scale(sign) for s, o in zip(self.images(), other.images())]
        return Derivation(self.algebra, *imgs, validated=self.validated and other.validated)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def scale(self, k) -> "Derivation":
        return Derivation(self.algebra, *(i.scale(k) for i in self.images()),
                          validated=self.validated)

    def __eq__(self, other):
        if not isinstance(other, Derivation):
            return NotImplemented
        return self.algebra == other.algebra and self.images() == other.images()

    __hash__ = None

    def __repr__(self):
        return f"Derivation(Dh={self.Dh}, Dx={self.Dx}, Dy={self.Dy})"

    def extend_to(self, side: str = "x_side") -> LocDerivation:
        """The induced derivation of the skew-Laurent localization (involution family)."""
        emb = embed_involution(self.algebra, side=side)
        if side == "x_side":
            return LocDerivation(emb.target, emb(self.Dx), emb(self.Dh))
        return LocDerivation(emb.target, emb(self.Dy), emb(self.Dh))


def validate(D: Derivation) -> ValidationReport:
    return D.validate()


def apply(D: Derivation, elem: GwaElement) -> GwaElement:
    return D.apply(elem)


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------

def make_inner(A: AlgebraSpec, t: GwaElement) -> Derivation:
    """ad_t: r -> t r - r t."""
    h, x, y = A.generators()
    return Derivation(A, commutator(A, t, h), commutator(A, t, x), commutator(A, t, y),
                      validated=True)


def make_delta_alpha(A: AlgebraSpec, alpha) -> Derivation:
    """h -> 0, x -> alpha x, y -> -alpha y."""
    if A.family is not Family.QUANTUM:
        raise NotQuantum(f"{A} is not a quantum GWA")
    alpha = scalar(alpha)
    return Derivation(A, A.zero, A.x.scale(alpha), A.y.scale(-alpha), validated=True)


def make_delta_alpha_beta(A: AlgebraSpec, alpha, beta, y_coeff=None) -> Derivation:
    """h -> beta h, x -> alpha x, y -> y_coeff y (default -alpha).  Returned unvalidated.

    Applying it to yx = a gives (y_coeff + alpha) a = beta h a'(h), so with
    beta != 0 no choice of y_coeff works unless a is a monomial c h^i, where
    y_coeff = i beta - alpha recovers the torus derivation.
    """
    alpha = scalar(alpha)
    y_coeff = -alpha if y_coeff is None else scalar(y_coeff)
    return Derivation(A, A.h.scale(beta), A.x.scale(alpha), A.y.scale(y_coeff))


def _sym_factor(A: AlgebraSpec) -> GwaElement:
    """h^2 - c for sigma(h) = c/h."""
    return A.from_laurent(LaurentPoly({2: 1, 0: -A.sigma.c}))


def outer_derivation(A: AlgebraSpec, z1: GwaElement, z2: GwaElement) -> Derivation:
    """The derivation with h -> (h^2 - c) z1, x -> z2 x whose y-image is forced
    by the localization: D(y) is the pullback of D(a(v) u^-1).

    For a = alpha*h^i this is D(y) = (i (h - c h^-1) z1 - z2) y; for a = 1
    it is the familiar -z2 y.  Raises PullbackFailure when the image of y
    does not lie in A.
    """
    if A.family is not Family.INVOLUTION:
        raise NotInvolution(f"{A} is not an involution GWA")
    emb = embed_involution(A)
    Dh = _sym_factor(A) * z1
    Dx = z2 * A.x
    loc = LocDerivation(emb.target, emb(Dx), emb(Dh))
    Dy = emb.pullback(loc(emb(A.y)))
    return Derivation(A, Dh, Dx, Dy)


def make_D_z1z2(A: AlgebraSpec, z1: GwaElement, z2: GwaElement) -> Derivation:
    """D_{z1,z2}: h -> (h^2 - c) z1, x -> z2 x.

    When a is a monomial the y-image is the one forced by the localization
    (``outer_derivation``), which reduces to -z2 y for constant a.  For
    non-monomial a the literal y -> -z2 y is used; that map is a derivation
    exactly when z1 = 0.
    """
    from .structure import is_central

    if A.family is not Family.INVOLUTION:
        raise NotInvolution(f"{A} is not an involution GWA")
    for name, z in (("z1", z1), ("z2", z2)):
        if not is_central(A, z):
            raise NotCentral(f"{name} = {z} is not central in {A}")
    if A.a_is_monomial:
        return outer_derivation(A, z1, z2)
    return Derivation(A, _sym_factor(A) * z1, z2 * A.x, -(z2 * A.y))


# ---------------------------------------------------------------------------
# decompositions
# ---------------------------------------------------------------------------

def _require_valid(D: Derivation):
    report = D.validate()
    if not report.valid:
        i, rel, r = report.failures[0]
        raise InvalidDerivation(f"relation ({i}) {rel} fails with residual {r}")


def decompose_quantum(D: Derivation) -> tuple[GwaElement, Scalar]:
    """Return (t, alpha) with D = ad_t + delta_alpha and t without constant term.

    ad of tau(h) X^d sends h to tau (c^d - 1) h X^d, so for d != 0 the degree-d
    part of D(h) determines tau_d by exact division.  The degree-0 part of t
    and alpha come from the degree-1 part of D(x): ad_tau(x) = (tau - sigma(tau)) x.
    """
    A = D.algebra
    if A.family is not Family.QUANTUM:
        raise NotQuantum(f"{A} is not a quantum GWA")
    if A.sigma.is_root_of_unity:
        raise NotQuantum(f"sigma(h) = {A.sigma.c}*h has a root of unity parameter")
    if A.a_is_monomial:
        raise MonomialA("a is a monomial; the algebra is a quantum torus, use the torus decomposition")
    _require_valid(D)
    c = A.sigma.c
    parts: dict[int, LaurentPoly] = {}
    for d, w in D.Dh.parts.items():
        if d == 0:
            raise InvalidDerivation("D(h) has a nonzero degree-0 part")
        try:
            parts[d] = w.divide(LaurentPoly.monomial(c ** d - 1, 1))
        except NotDivisible:
            raise InvalidDerivation(f"degree {d} part of D(h) is not divisible by h") from None
    r = D.Dx.component(1)
    alpha = r.coeff(0)
    t0 = {i: ci / (1 - c ** i) for i, ci in r.items() if i}
    if t0:
        parts[0] = LaurentPoly(t0)
    t = A.element(parts)
    if make_inner(A, t) + make_delta_alpha(A, alpha) != D:
        raise InvalidDerivation("D is not of the form ad_t + delta_alpha")
    return t, alpha


def decompose_involution(D: Derivation) -> tuple[GwaElement, GwaElement, GwaElement]:
    """Return (t, z1, z2) with D = ad_t + outer_derivation(z1, z2).

    Works in the skew-Laurent ring L = k[v^+-1][u^+-1; v -> c/v] through the
    x-side embedding.  For a u-degree d the v-image is w_d u^d and the u-image
    carries r_d u^(d+1):

    * odd d: ad_{tau u^d}(v) = tau (c v^-1 - v) u^d, so tau = w_d / (c v^-1 - v);
    * even d: ad kills v, so w_d = (v^2 - c) z1_d; the symmetric half of r_d
      is z2_d and tau_d is half of the antisymmetric half.

    The pieces are pulled back to A and the result is checked on h, x, y.
    t is normalized to have antisymmetric coefficients in even degrees.
    """
    A = D.algebra
    if A.family is not Family.INVOLUTION:
        raise NotInvolution(f"{A} is not an involution GWA")
    _require_valid(D)
    c = A.sigma.c
    emb = embed_involution(A)
    L = emb.target
    Dv, Du = emb(D.Dh), emb(D.Dx)
    odd_div = LaurentPoly({-1: c, 1: -1})
    even_div = LaurentPoly({2: 1, 0: -c})
    quarter = HALF * HALF
    tau, z1, z2 = {}, {}, {}
    for d in sorted(set(Dv.parts) | {j - 1 for j in Du.parts}):
        w, r = Dv.component(d), Du.component(d + 1)
        try:
            if d % 2:
                tau[d] = w.divide(odd_div)
                continue
            g = w.divide(even_div)
        except NotDivisible:
            raise InvalidDerivation(f"u-degree {d} part of D(h) has the wrong shape") from None
        if reflect(g, c) != g:
            raise InvalidDerivation(f"u-degree {d} part of D(h) is not (h^2 - c) times a symmetric factor")
        z1[d] = g
        rr = reflect(r, c)
        z2[d] = (r + rr).scale(HALF)
        tau[d] = (r - rr).scale(quarter)
    t = emb.pullback(L.element(tau))
    z1e = emb.pullback(L.element(z1))
    z2e = emb.pullback(L.element(z2))
    try:
        rebuilt = make_inner(A, t) + outer_derivation(A, z1e, z2e)
    except Exception as exc:
        raise InvalidDerivation(f"outer part does not restrict to A: {exc}") from None
    if rebuilt != D:
        raise InvalidDerivation("D is not of the form ad_t + D_{z1,z2}")
    return t, z1e, z2e


# ---------------------------------------------------------------------------
# the matrix M
# ---------------------------------------------------------------------------

def build_matrix_M(n: int) -> list[list[Scalar]]:
    """n x n matrix with entries q^(ij) - 1, 1 <= i, j <= n."""
    if n < 1:
        raise ValueError("n must be positive")
    return [[Q ** (i * j) - ONE for j in range(1, n + 1)] for i in range(1, n + 1)]


def det_M(n: int) -> Scalar:
    return det(build_matrix_M(n))
