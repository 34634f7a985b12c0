"""Centers, units and isomorphisms of GWAs."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt

from .algebra import AlgebraSpec, Family, GwaElement, commutator
from .errors import NotInvolution, PullbackFailure, RootOfUnityUnsupported
from .laurent import LaurentPoly
from .localized import embed_involution
from .scalars import ONE, Scalar, _pmul, _trim


# ---------------------------------------------------------------------------
# centers
# ---------------------------------------------------------------------------

def is_central(A: AlgebraSpec, u: GwaElement) -> bool:
    """True iff u commutes with h, x and y (which generate A; h^-1 follows)."""
    return all(not commutator(A, u, g) for g in A.generators())


def central_generators(A: AlgebraSpec) -> list[GwaElement]:
    """Generators of the center.

    Involution family: h + c h^-1, x^2, y^2.  Quantum family with c not a
    root of unity: the center is the base field, so the list is empty.
    Commutative family: the whole algebra, generated by h, x, y.
    """
    family = A.family
    if family is Family.COMMUTATIVE:
        return [A.h, A.x, A.y]
    if family is Family.QUANTUM:
        if A.sigma.is_root_of_unity:
            raise RootOfUnityUnsupported("the center for c = -1 is not computed")
        return []
    c = A.sigma.c
    return [A.from_laurent(LaurentPoly({1: 1, -1: c})), A.x * A.x, A.y * A.y]


# ---------------------------------------------------------------------------
# units
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class UnitForm:
    """A unit whose image in the skew-Laurent localization is coefficient * v^h_power * u^x_power."""

    coefficient: Scalar
    h_power: int
    x_power: int

    def element(self, A: AlgebraSpec) -> GwaElement:
        emb = embed_involution(A)
        return emb.pullback(emb.target.monomial(self.coefficient, self.h_power, self.x_power))


def unit_classify(A: AlgebraSpec, u: GwaElement) -> UnitForm | None:
    """Classify u as a unit of an involution GWA, or return None if it is not one.

    The localization is a domain whose units are the monomials; u is a unit
    of A iff its image is a monomial whose inverse pulls back to A.
    """
    if A.family is not Family.INVOLUTION:
        raise NotInvolution(f"{A} is not an involution GWA")
    emb = embed_involution(A)
    image = emb(u)
    if not image.is_monomial():
        return None
    try:
        inv = emb.pullback(image.inverse())
    except PullbackFailure:
        return None
    assert u * inv == A.one and inv * u == A.one
    (j, p), = image.parts.items()
    (i, coeff), = p.items()
    return UnitForm(coeff, i, j)


# ---------------------------------------------------------------------------
# isomorphisms of involution GWAs
# ---------------------------------------------------------------------------

class GwaMap:
    """Algebra map A -> B given by the images of h, x and y; h must go to a unit monomial."""

    def __init__(self, source: AlgebraSpec, target: AlgebraSpec,
                 h_image: GwaElement, x_image: GwaElement, y_image: GwaElement):
        self.source = source
        self.target = target
        self.h_image = h_image
        self.x_image = x_image
        self.y_image = y_image
        p = h_image.component(0)
        if not h_image.is_laurent() or len(p) != 1:
            raise ValueError("h must map to a monomial of the base ring")
        self._h = p
        self._h_inv = p ** -1

    def on_laurent(self, p: LaurentPoly) -> GwaElement:
        out = LaurentPoly()
        for i, c in p.items():
            out = out + (self._h ** i if i >= 0 else self._h_inv ** (-i)).scale(c)
        return self.target.from_laurent(out)

    def __call__(self, elem: GwaElement) -> GwaElement:
        B = self.target
        out = B.zero
        for n, p in elem.parts.items():
            word = self.x_image ** n if n >= 0 else self.y_image ** (-n)
            out = out + self.on_laurent(p) * word
        return out

    def relation_residuals(self) -> list[GwaElement]:
        A = self.source
        h, x, y = self.h_image, self.x_image, self.y_image
        sh = self.on_laurent(A.sigma.image_of_h())
        sih = self.on_laurent(A.sigma.inverse().image_of_h())
        return [
            y * x - self.on_laurent(A.a),
            x * y - self.on_laurent(A.sigma(A.a)),
            x * h - sh * x,
            y * h - sih * y,
        ]

    def respects_relations(self) -> bool:
        return not any(self.relation_residuals())

    def then(self, other: "GwaMap") -> "GwaMap":
        """other o self."""
        return GwaMap(self.source, other.target,
                      other(self.h_image), other(self.x_image), other(self.y_image))

    def is_identity(self) -> bool:
        A = self.source
        return self.source == self.target and (self.h_image, self.x_image, self.y_image) == A.generators()


@dataclass
class IsoWitness:
    """psi: A1 -> A2 with psi(h1) = alpha h2^eps and

    psi(x1) = p^-1 c2^-l h2^l X,  psi(y1) = X'

    where (X, X') = (x2, y2) for tau = 0 and (y2, x2) for tau = 1.  It exists
    when a2(sigma2^tau(h)) = p h^l a1(alpha h^eps) and alpha^2 = c1 c2^-eps.
    """

    forward: GwaMap
    inverse: GwaMap
    p: Scalar
    l: int
    tau: int
    eps: int
    alpha: Scalar
    _verified: bool = field(default=False, repr=False)

    @property
    def h_image(self):
        return self.forward.h_image

    @property
    def x_image(self):
        return self.forward.x_image

    @property
    def y_image(self):
        return self.forward.y_image

    def verify(self) -> bool:
        ok = (self.forward.respects_relations() and self.inverse.respects_relations()
              and self.forward.then(self.inverse).is_identity()
              and self.inverse.then(self.forward).is_identity())
        self._verified = ok
        return ok

    def to_dict(self) -> dict:
        return {
            "p": str(self.p), "l": self.l, "tau": self.tau, "eps": self.eps,
            "alpha": str(self.alpha),
            "h": str(self.h_image), "x": str(self.x_image), "y": str(self.y_image),
            "inverse": {"h": str(self.inverse.h_image), "x": str(self.inverse.x_image),
                        "y": str(self.inverse.y_image)},
        }


def _poly_sqrt(p: tuple) -> tuple | None:
    """Integer polynomial square root in Z[s], or None."""
    if not p:
        return ()
    v = next(i for i, c in enumerate(p) if c)
    if v % 2:
        return None
    p = p[v:]
    n = len(p) - 1
    if n % 2 or p[-1] <= 0:
        return None
    lead = isqrt(p[-1])
    if lead * lead != p[-1]:
        return None
    m = n // 2
    # solve for the coefficients of r from the top down so that r^2 = p
    rf = [Fraction(0)] * (m + 1)
    rf[m] = Fraction(lead)
    for k in range(m - 1, -1, -1):
        # coefficient of s^(m + k) in r^2 is 2 r_m r_k + sum_{i+j=m+k, k<i,j<m} r_i r_j
        acc = sum(rf[i] * rf[m + k - i] for i in range(k + 1, m) if 0 <= m + k - i <= m)
        rf[k] = (Fraction(p[m + k]) - acc) / (2 * lead)
    if any(x.denominator != 1 for x in rf):
        return None
    r = [int(x) for x in rf]
    if _trim(list(_pmul(tuple(r), tuple(r)))) != p:
        return None
    return (0,) * (v // 2) + tuple(r)


def _sqrt(c: Scalar) -> Scalar | None:
    """Exact square root in Q(s) up to sign, or None if c is not a square."""
    if not c:
        return c
    # c = n/d = (n d)/d^2
    root = _poly_sqrt(_trim(list(_pmul(c.num, c.den))))
    if root is None:
        return None
    return Scalar.from_polys(root, c.den)


def _ext_gcd_combination(diffs: list[int]) -> tuple[int, list[int]]:
    """g = gcd(diffs) and integers m with sum m_k diffs_k = g."""
    g, coeffs = 0, []
    for d in diffs:
        # extended Euclid on (g, d)
        old_r, r = g, d
        old_s, s = 1, 0
        old_t, t = 0, 1
        while r:
            qt = old_r // r
            old_r, r = r, old_r - qt * r
            old_s, s = s, old_s - qt * s
            old_t, t = t, old_t - qt * t
        if old_r < 0:
            old_r, old_s, old_t = -old_r, -old_s, -old_t
        coeffs = [m * old_s for m in coeffs] + [old_t]
        g = old_r
    return g, coeffs


def _alpha_candidates(b: LaurentPoly, a1: LaurentPoly, eps: int, l: int, C: Scalar) -> list[Scalar]:
    """Candidates for alpha from the identity b(h) = p h^l a1(alpha h^eps), alpha^2 = C."""
    ks = a1.support
    k0 = ks[0]
    base = b.coeff(eps * k0 + l) / a1.coeff(k0)
    diffs, ratios = [], []
    for k in ks[1:]:
        diffs.append(k - k0)
        ratios.append((b.coeff(eps * k + l) / a1.coeff(k)) / base)
    g, ms = _ext_gcd_combination(diffs) if diffs else (0, [])
    if g % 2 == 1:
        ag = ONE
        for m, rt in zip(ms, ratios):
            ag = ag * rt ** m
        return [ag / C ** ((g - 1) // 2)]
    root = _sqrt(C)
    if root is None:
        return []
    return [root, -root] if root else [root]


def _build_witness(A1: AlgebraSpec, A2: AlgebraSpec, p: Scalar, l: int, tau: int, eps: int,
                   alpha: Scalar) -> IsoWitness:
    c2 = A2.sigma.c
    X, Xp = (A2.x, A2.y) if tau == 0 else (A2.y, A2.x)
    hl = A2.from_laurent(LaurentPoly.monomial(p.inverse() * c2 ** (-l), l))
    forward = GwaMap(A1, A2, A2.from_laurent(LaurentPoly.monomial(alpha, eps)), hl * X, Xp)
    # inverse: h2 -> alpha^-eps h1^eps, X -> p c2^l alpha^(l eps) h1^(-l eps) x1, X' -> y1
    back_h = A1.from_laurent(LaurentPoly.monomial(alpha ** (-eps), eps))
    back_X = A1.from_laurent(LaurentPoly.monomial(p * c2 ** l * alpha ** (l * eps), -l * eps)) * A1.x
    back_Xp = A1.y
    if tau == 0:
        inverse = GwaMap(A2, A1, back_h, back_X, back_Xp)
    else:
        inverse = GwaMap(A2, A1, back_h, back_Xp, back_X)
    return IsoWitness(forward, inverse, p, l, tau, eps, alpha)


def iso_involution(A1: AlgebraSpec, A2: AlgebraSpec) -> IsoWitness | None:
    """Search for an isomorphism A1 -> A2 of the standard shape; None if there is none.

    Algebras of different families are never isomorphic.  Among involution
    algebras a monomial a cannot be matched with a non-monomial one (x^2 is a
    central unit in the first case and not in the second).
    """
    f1, f2 = A1.family, A2.family
    if f1 is not f2:
        return None
    if f1 is not Family.INVOLUTION:
        raise NotInvolution("isomorphism testing is implemented for involution GWAs only")
    if A1.a_is_monomial != A2.a_is_monomial:
        return None
    c1, c2 = A1.sigma.c, A2.sigma.c
    a1 = A1.a
    for tau in (0, 1):
        b = A2.shift(A2.a, tau)
        for eps in (1, -1):
            S1 = sorted(eps * k for k in a1.support)
            S2 = b.support
            if len(S1) != len(S2):
                continue
            l = S2[0] - S1[0]
            if [k + l for k in S1] != S2:
                continue
            C = c1 * c2 ** (-eps)
            for alpha in _alpha_candidates(b, a1, eps, l, C):
                if not alpha or alpha * alpha != C:
                    continue
                k0 = a1.support[0]
                p = b.coeff(eps * k0 + l) / (a1.coeff(k0) * alpha ** k0)
                rhs = a1.substitute(alpha, eps).shift(l).scale(p)
                if rhs != b:
                    continue
                w = _build_witness(A1, A2, p, l, tau, eps, alpha)
                if w.verify():
                    return w
    return None
