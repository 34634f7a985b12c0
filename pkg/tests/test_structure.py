import random

import pytest

from gwa.algebra import make_algebra, preset
from gwa.errors import NotInvolution, RootOfUnityUnsupported
from gwa.laurent import laurent
from gwa.scalars import ONE, Q, S
from gwa.structure import (UnitForm, _sqrt, central_generators, is_central, iso_involution,
                           unit_classify)

from tests.support import rand_gwa

G = preset("group_algebra")
INV_Q = make_algebra(Q, -1, {1: 1, 0: -1})


def test_is_central_examples():
    assert is_central(G, G.from_laurent(laurent({1: 1, -1: 1})))
    assert not is_central(G, G.h)
    assert is_central(INV_Q, INV_Q.x * INV_Q.x)
    assert is_central(INV_Q, INV_Q.from_laurent(laurent({1: 1, -1: Q})))
    assert not is_central(INV_Q, INV_Q.from_laurent(laurent({1: 1, -1: 1})))


def test_central_generators():
    gens = central_generators(G)
    assert G.from_laurent(laurent({1: 1, -1: 1})) in gens and G.x * G.x in gens
    assert central_generators(preset("weyl_q")) == []
    assert INV_Q.y * INV_Q.y in central_generators(INV_Q)
    comm = make_algebra(1, 1, {1: 1, 0: 1})
    assert central_generators(comm) == [comm.h, comm.x, comm.y]
    with pytest.raises(RootOfUnityUnsupported):
        central_generators(make_algebra(-1, 1, {1: 1, 0: -1}))


@pytest.mark.parametrize("A", [G, INV_Q, make_algebra(Q + 1, -1, {2: 1, 0: 3}),
                               make_algebra(1, 1, {1: 1, 0: 1})])
def test_generator_combinations_central(A):
    gens = central_generators(A)
    rng = random.Random(1)
    for _ in range(20):
        z = A.const(rng.randint(-3, 3))
        for _ in range(rng.randint(1, 3)):
            z = z + gens[rng.randrange(len(gens))] * gens[rng.randrange(len(gens))].scale(rng.randint(1, 3))
        assert is_central(A, z)


def test_unit_examples():
    assert unit_classify(G, G.h.scale(3) * G.h) == UnitForm(3, 2, 0)
    assert unit_classify(G, G.x) == UnitForm(1, 0, 1)
    assert unit_classify(INV_Q, INV_Q.x) is None
    assert unit_classify(INV_Q, INV_Q.h + INV_Q.one) is None
    with pytest.raises(NotInvolution):
        unit_classify(preset("weyl_q"), preset("weyl_q").h)


def test_unit_form_reconstructs():
    A = make_algebra(Q, -1, {2: 3})
    rng = random.Random(6)
    for _ in range(20):
        form = UnitForm(Q ** rng.randint(-2, 2) * rng.choice([1, -2, 5]), rng.randint(-3, 3),
                        rng.randint(-3, 3))
        u = form.element(A)
        assert unit_classify(A, u) == form


def test_exact_sqrt():
    assert _sqrt(Q) in (S, -S)
    assert _sqrt((Q + 1) ** 2 / 4) in ((Q + 1) / 2, -(Q + 1) / 2)
    assert _sqrt(Q + 1) is None
    assert _sqrt(-ONE) is None


def test_iso_examples():
    A1 = make_algebra(Q, -1, {1: 1, -1: Q})
    w = iso_involution(A1, A1)
    assert (w.p, w.l, w.tau, w.eps, w.alpha) == (1, 0, 0, 1, 1)
    A2 = make_algebra(Q, -1, {2: 1, 0: Q})
    w = iso_involution(A1, A2)
    assert (w.p, w.l, w.tau, w.eps, w.alpha) == (1, 1, 0, 1, 1)
    assert w.verify()
    assert iso_involution(make_algebra(Q, -1, {0: 1}), INV_Q) is None


def test_iso_gates():
    assert iso_involution(G, preset("weyl_q")) is None
    with pytest.raises(NotInvolution):
        iso_involution(preset("weyl_q"), preset("hayashi1"))


def test_iso_witness_maps_elements():
    A1 = make_algebra(Q, -1, {1: 1, -1: Q})
    A2 = make_algebra(Q, -1, {2: 1, 0: Q})
    w = iso_involution(A1, A2)
    rng = random.Random(12)
    for _ in range(20):
        u, v = rand_gwa(A1, rng, deg=2, width=2), rand_gwa(A1, rng, deg=2, width=2)
        assert w.forward(u * v) == w.forward(u) * w.forward(v)
        assert w.inverse(w.forward(u)) == u


def test_iso_both_monomial():
    w = iso_involution(make_algebra(Q, -1, {0: 1}), make_algebra(1, -1, {0: 1}))
    assert w is not None and w.alpha in (S, -S)
    assert iso_involution(make_algebra(S, -1, {0: 1}), make_algebra(1, -1, {0: 1})) is None


def test_witness_json():
    w = iso_involution(INV_Q, INV_Q)
    d = w.to_dict()
    assert d["h"] == "h" and d["tau"] == 0 and set(d["inverse"]) == {"h", "x", "y"}
