"""Random element generators and independent oracles shared by the tests."""
from __future__ import annotations

import random
from fractions import Fraction

import sympy
from hypothesis import strategies as st

from gwa.algebra import AlgebraSpec, GwaElement, make_algebra
from gwa.laurent import LaurentPoly
from gwa.localized import LocAlgebra, LocElement
from gwa.scalars import Q, S, Scalar, q_power

s_sym = sympy.Symbol("s")
h_sym = sympy.Symbol("h")


# ---------------------------------------------------------------------------
# random generators (seeded, for the bulk counts the acceptance suite asks for)
# ---------------------------------------------------------------------------

def rand_scalar(rng: random.Random, rich: bool = False) -> Scalar:
    k = rng.choice([1, 1, 1, 2, 3, -1, -2])
    if rich:
        c = rng.choice([Scalar(k), q_power(rng.randint(-2, 2)) * k, Q + k, S * k,
                        Scalar(Fraction(k, 3)), (Q - 2) / (Q + 1)])
    else:
        c = rng.choice([Scalar(k), q_power(rng.randint(-2, 2)) * k, Q + k])
    return c


def rand_laurent(rng: random.Random, width: int = 4, terms: tuple[int, int] = (1, 3),
                 rich: bool = False) -> LaurentPoly:
    n = rng.randint(*terms)
    return LaurentPoly.from_terms((rng.randint(-width, width), rand_scalar(rng, rich)) for _ in range(n))


def rand_gwa(A: AlgebraSpec, rng: random.Random, deg: int = 4, width: int = 4,
             terms: tuple[int, int] = (1, 3)) -> GwaElement:
    out = A.zero
    for _ in range(rng.randint(*terms)):
        out = out + A.element({rng.randint(-deg, deg): LaurentPoly.monomial(
            rand_scalar(rng), rng.randint(-width, width))})
    return out


def rand_loc(L: LocAlgebra, rng: random.Random, deg: int = 3, width: int = 3,
             terms: tuple[int, int] = (1, 3)) -> LocElement:
    out = L.zero
    for _ in range(rng.randint(*terms)):
        out = out + L.monomial(rand_scalar(rng), rng.randint(-width, width), rng.randint(-deg, deg))
    return out


# ---------------------------------------------------------------------------
# hypothesis strategies
# ---------------------------------------------------------------------------

small_ints = st.integers(min_value=-5, max_value=5)
int_polys = st.lists(small_ints, min_size=0, max_size=4)


@st.composite
def scalars(draw, allow_zero: bool = True):
    num = draw(int_polys)
    den = draw(int_polys.filter(lambda p: any(p)))
    value = Scalar.from_polys(num, den)
    if not allow_zero and not value:
        value = Scalar(1)
    return value


@st.composite
def laurents(draw, width: int = 3, max_terms: int = 3):
    terms = draw(st.lists(st.tuples(st.integers(-width, width), scalars()), max_size=max_terms))
    return LaurentPoly.from_terms(terms)


@st.composite
def gwa_elements(draw, A: AlgebraSpec, deg: int = 3, width: int = 3, max_terms: int = 3):
    parts = draw(st.lists(st.tuples(st.integers(-deg, deg), st.integers(-width, width),
                                    st.sampled_from([1, -1, 2, 3]), st.integers(-1, 1)),
                          max_size=max_terms))
    out = A.zero
    for n, i, k, qp in parts:
        out = out + A.element({n: LaurentPoly.monomial(q_power(qp) * k, i)})
    return out


# ---------------------------------------------------------------------------
# oracles
# ---------------------------------------------------------------------------

def poly_to_sympy(coeffs) -> sympy.Expr:
    return sum((c * s_sym ** i for i, c in enumerate(coeffs)), sympy.Integer(0))


def scalar_to_sympy(c: Scalar) -> sympy.Expr:
    return poly_to_sympy(c.num) / poly_to_sympy(c.den)


def laurent_to_sympy(p: LaurentPoly) -> sympy.Expr:
    return sum((scalar_to_sympy(c) * h_sym ** e for e, c in p.items()), sympy.Integer(0))


def sympy_equal(a, b) -> bool:
    return sympy.simplify(a - b) == 0


class WordOracle:
    """GWA multiplication by naive rewriting of words in x and y.

    Elements are {word: coefficient} with words tuples over "x", "y" and the
    Laurent coefficient on the left.  Products push coefficients leftwards one
    letter at a time and then replace the leftmost "yx" by a and "xy" by
    sigma(a), again pushing the inserted polynomial left letter by letter.
    No closed formula for crossing powers is used.
    """

    def __init__(self, A: AlgebraSpec):
        self.A = A
        self.sig = A.sigma
        self.sig_inv = A.sigma.inverse()

    def push(self, word, r: LaurentPoly) -> LaurentPoly:
        for letter in reversed(word):
            r = self.sig(r) if letter == "x" else self.sig_inv(r)
        return r

    def reduce(self, coeff: LaurentPoly, word: tuple, out: dict):
        while True:
            for i in range(len(word) - 1):
                pair = word[i:i + 2]
                if pair == ("y", "x"):
                    rep = self.A.a
                    break
                if pair == ("x", "y"):
                    rep = self.sig(self.A.a)
                    break
            else:
                out[word] = out.get(word, LaurentPoly()) + coeff
                return
            coeff = coeff * self.push(word[:i], rep)
            word = word[:i] + word[i + 2:]

    def from_gwa(self, e: GwaElement) -> dict:
        return {(("x",) * n if n >= 0 else ("y",) * (-n)): p for n, p in e.parts.items()}

    def to_gwa(self, d: dict) -> GwaElement:
        parts = {}
        for word, p in d.items():
            if not p:
                continue
            n = len(word) if (not word or word[0] == "x") else -len(word)
            parts[n] = parts.get(n, LaurentPoly()) + p
        return self.A.element(parts)

    def mul(self, u: GwaElement, v: GwaElement) -> GwaElement:
        out: dict = {}
        for w1, p in self.from_gwa(u).items():
            for w2, r in self.from_gwa(v).items():
                self.reduce(p * self.push(w1, r), w1 + w2, out)
        return self.to_gwa(out)


def cofactor_det(m):
    """Determinant by Laplace expansion along the first row."""
    n = len(m)
    if n == 1:
        return m[0][0]
    total = Scalar(0)
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = m[0][j] * cofactor_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def involution(c, a) -> AlgebraSpec:
    return make_algebra(c, -1, a)
