import random

import pytest
import sympy

from gwa.algebra import make_algebra, preset
from gwa.derivations import (Derivation, apply, build_matrix_M, decompose_involution,
                             decompose_quantum, det_M, make_D_z1z2, make_delta_alpha,
                             make_delta_alpha_beta, make_inner, outer_derivation, validate)
from gwa.errors import (InvalidDerivation, MonomialA, NotCentral, NotInvolution, NotQuantum,
                        NotValidated)
from gwa.laurent import laurent
from gwa.scalars import ONE, Q, ZERO

from tests.support import cofactor_det, rand_gwa, s_sym, scalar_to_sympy

G = preset("group_algebra")
W = preset("weyl_q")
INV_Q = make_algebra(Q, -1, {1: 1, 0: -1})
INV_1 = make_algebra(1, -1, {1: 1, 0: -1})


def test_inner_is_valid_everywhere():
    for name in ["weyl_q", "hayashi1", "hayashi2", "group_algebra", "torus_like"]:
        A = preset(name)
        D = make_inner(A, A.x)
        D.validated = False
        assert validate(D).valid


def test_spec_validate_examples():
    report = validate(make_D_z1z2(INV_1, INV_1.one, INV_1.zero))
    assert not report.valid
    assert report.residual(1) == INV_1.from_laurent(laurent({2: 1, 0: -1}))
    assert not validate(make_delta_alpha_beta(W, 0, 1)).valid
    assert not validate(make_delta_alpha_beta(W, 3, 1)).valid
    assert not validate(make_delta_alpha_beta(preset("torus_like"), 3, 1)).valid
    assert validate(make_delta_alpha_beta(preset("torus_like"), 3, 1, y_coeff=1 - 3)).valid
    for k in (0, 1):
        assert not validate(make_delta_alpha_beta(W, 3, 1, y_coeff=k - 3)).valid


def test_apply_requires_validation():
    D = Derivation(W, W.zero, W.x, W.y.scale(-1))
    with pytest.raises(NotValidated):
        apply(D, W.x)
    D.validate()
    assert apply(D, W.one) == W.zero


def test_apply_inner_equals_commutator():
    rng = random.Random(4)
    for name in ["weyl_q", "group_algebra", "hayashi1"]:
        A = preset(name)
        for _ in range(20):
            t, u = rand_gwa(A, rng, deg=3, width=3), rand_gwa(A, rng, deg=3, width=3)
            assert make_inner(A, t).apply(u) == t * u - u * t


def test_delta_alpha():
    alpha = Q + 2
    D = make_delta_alpha(W, alpha)
    assert D.is_valid()
    assert D.apply(W.x * W.x) == (W.x * W.x).scale(2 * alpha)
    assert D.apply(W.y * W.x) == W.zero
    assert make_delta_alpha(W, 0).images() == (W.zero, W.zero, W.zero)
    with pytest.raises(NotQuantum):
        make_delta_alpha(G, 1)


@pytest.mark.parametrize("D", [
    make_inner(W, W.h * W.x + W.y),
    make_delta_alpha(W, 2) + make_inner(W, W.x * W.x),
    make_D_z1z2(G, G.from_laurent(laurent({1: 1, -1: 1})), G.x * G.x),
    outer_derivation(INV_Q, INV_Q.from_laurent(laurent({1: 1, -1: Q, 0: -1 - Q})), INV_Q.y * INV_Q.y),
])
def test_leibniz(D):
    assert D.is_valid()
    A = D.algebra
    rng = random.Random(8)
    for _ in range(40):
        u, v = rand_gwa(A, rng, deg=2, width=2), rand_gwa(A, rng, deg=2, width=2)
        assert D.apply(u * v) == D.apply(u) * v + u * D.apply(v)


def test_make_inner_examples():
    D = make_inner(G, G.x)
    assert D.Dh == G.element({1: laurent({-1: 1, 1: -1})})
    assert make_inner(G, G.one).images() == (G.zero, G.zero, G.zero)
    assert make_inner(G, G.h).Dx == G.element({1: laurent({1: 1, -1: -1})})


def test_make_D_z1z2_examples():
    assert make_D_z1z2(G, G.one, G.zero).is_valid()
    assert make_D_z1z2(G, G.zero, G.x * G.x).is_valid()
    z = INV_1.from_laurent(laurent({1: 1, -1: 1}))
    assert not make_D_z1z2(INV_1, z, INV_1.zero).is_valid()
    assert make_D_z1z2(INV_1, INV_1.zero, INV_1.x * INV_1.x).is_valid()
    with pytest.raises(NotCentral):
        make_D_z1z2(INV_Q, INV_Q.from_laurent(laurent({1: 1, -1: 1})), INV_Q.zero)
    with pytest.raises(NotInvolution):
        make_D_z1z2(W, W.zero, W.zero)


def test_monomial_a_outer_derivation():
    # a = 2 h^3: the y-image is (3 (h - c h^-1) z1 - z2) y
    A = make_algebra(Q, -1, {3: 2})
    z1 = A.one
    D = make_D_z1z2(A, z1, A.zero)
    assert D.is_valid()
    assert D.Dy == A.from_laurent(laurent({1: 3, -1: -3 * Q})) * A.y


def test_decompose_quantum_examples():
    assert decompose_quantum(make_delta_alpha(W, 2)) == (W.zero, 2)
    t = W.h * W.x
    assert decompose_quantum(make_inner(W, t)) == (t, ZERO)
    assert decompose_quantum(make_inner(W, W.y) + make_delta_alpha(W, 1)) == (W.y, ONE)
    with pytest.raises(MonomialA):
        decompose_quantum(make_inner(preset("torus_like"), preset("torus_like").x))
    with pytest.raises(InvalidDerivation):
        decompose_quantum(make_delta_alpha_beta(W, 0, 1))
    with pytest.raises(NotQuantum):
        decompose_quantum(make_inner(G, G.x))


def test_decompose_involution_examples():
    assert decompose_involution(Derivation(G, G.zero, G.zero, G.zero)) == (G.zero, G.zero, G.zero)
    z1 = G.from_laurent(laurent({1: 1, -1: 1}))
    z2 = G.x * G.x
    assert decompose_involution(make_D_z1z2(G, z1, z2)) == (G.zero, z1, z2)
    assert decompose_involution(make_inner(G, G.x)) == (G.x, G.zero, G.zero)
    with pytest.raises(InvalidDerivation):
        decompose_involution(make_D_z1z2(INV_1, INV_1.one, INV_1.zero))


def test_decompose_involution_normalizes_even_part():
    # h + h^-1 is central, so ad_h = ad_{(h - h^-1)/2}
    D = make_inner(G, G.h)
    t, z1, z2 = decompose_involution(D)
    assert t == G.from_laurent(laurent({1: ONE / 2, -1: -ONE / 2}))
    assert not z1 and not z2


def test_matrix_m():
    assert build_matrix_M(1) == [[Q - 1]]
    assert det_M(1) == Q - 1
    m2 = build_matrix_M(2)
    assert m2 == [[Q - 1, Q ** 2 - 1], [Q ** 2 - 1, Q ** 4 - 1]]
    assert det_M(2) == cofactor_det(m2) == Q * (Q - 1) ** 3 * (Q + 1)
    for n in range(1, 5):
        m = build_matrix_M(n)
        assert det_M(n) == cofactor_det(m)
    with pytest.raises(ValueError):
        build_matrix_M(0)


def test_matrix_m_against_sympy():
    q = sympy.Symbol("q")
    for n in range(1, 6):
        ref = sympy.Matrix(n, n, lambda i, j: q ** ((i + 1) * (j + 1)) - 1).det(method="berkowitz")
        assert sympy.expand(scalar_to_sympy(det_M(n)) - ref.subs(q, s_sym ** 2)) == 0
        assert ref != 0
