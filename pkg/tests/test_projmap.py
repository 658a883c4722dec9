import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from redeimaps.ffield import make_field
from redeimaps.projmap import (
    INF,
    MobiusMap,
    RationalMap,
    decode_point,
    encode_point,
    eta_inv,
    eta_map,
    p1_points,
    reciprocal,
    rho_inv,
    rho_map,
)
from redeimaps.redei import RedeiSpec, redei_coeffs

from conftest import SMALL_FIELDS, all_extensions

F5 = make_field(5)


def test_mobius_apply_examples(e5):
    K = e5.field
    assert MobiusMap.identity(F5)(3) == 3
    rho = rho_map(e5)
    assert rho(INF) == 1
    assert rho(e5.beta_bar) == 0
    assert rho(e5.beta) is INF
    assert rho_inv(e5)(rho(7)) == 7
    assert rho_inv(e5)(INF) == e5.beta
    assert K.q == 25


def test_rho_shapes(e5, e2):
    K = e5.field
    assert rho_map(e5) == MobiusMap.make(K, 1, e5.beta, 1, K.neg(e5.beta))
    K2 = e2.field
    assert rho_map(e2) == MobiusMap.make(K2, 1, K2.add(e2.beta, 1), 1, e2.beta)


def test_mobius_compose_inverse(e5):
    K = e5.field
    rho = rho_map(e5)
    assert MobiusMap.identity(K).compose(rho) == rho
    assert rho_inv(e5).compose(rho).is_identity()
    assert rho.inverse() == rho_inv(e5)
    assert eta_map(e5).inverse() == eta_inv(e5)
    assert reciprocal(F5).inverse() == reciprocal(F5)
    with pytest.raises(ValueError):
        MobiusMap.make(F5, 1, 2, 2, 4)


def test_eta_examples(e5):
    eta = eta_map(e5)
    K = e5.field
    assert eta(0) == 1
    assert eta(INF) == K.div(e5.beta_bar, e5.beta)
    assert sorted(eta(x) for x in p1_points(F5)) == sorted(e5.mu_elements())


@pytest.mark.parametrize("pk", SMALL_FIELDS + [(2, 4), (11, 1)])
def test_rho_eta_biject_onto_mu(pk):
    for ext in all_extensions(*pk):
        mu = set(ext.mu_elements())
        for m in (rho_map(ext), eta_map(ext)):
            image = [m(x) for x in p1_points(ext.base)]
            assert len(set(image)) == ext.q + 1
            assert set(image) == mu


mobius_f5 = st.tuples(*[st.integers(0, 4)] * 4).filter(lambda t: (t[0] * t[3] - t[1] * t[2]) % 5)


@given(mobius_f5, mobius_f5)
def test_mobius_compose_pointwise(m1, m2):
    a, b = MobiusMap.make(F5, *m1), MobiusMap.make(F5, *m2)
    ab = a.compose(b)
    for x in p1_points(F5):
        assert ab(x) == a(b(x))
    assert a.inverse().compose(a).is_identity()


def test_ratmap_eval_examples():
    f = RationalMap.make(F5, (2, 0, 1), (0, 2))
    assert f(0) is INF
    assert f(INF) is INF
    assert f(1) == 4
    ident = RationalMap.identity(F5)
    for x in p1_points(F5):
        assert ident(x) == x
    assert RationalMap.make(F5, (1,), (0, 1))(INF) == 0
    assert RationalMap.make(F5, (0, 3), (1, 1))(INF) == 3


def test_ratmap_normalisation():
    # (x^2 - 1)/(2x - 2) reduces to (x + 1)/2 = 3x + 3
    f = RationalMap.make(F5, (4, 0, 1), (3, 2))
    assert f == RationalMap(F5, (3, 3), (1,))
    assert f.degree == 1
    with pytest.raises(ValueError):
        RationalMap.make(F5, (1,), ())


def test_compose_and_conjugate_examples(e5):
    x2, x3 = RationalMap.monomial(F5, 2), RationalMap.monomial(F5, 3)
    assert x2.compose(x3) == RationalMap.monomial(F5, 6)
    r2 = redei_coeffs(RedeiSpec(e5, 2))
    assert r2.conjugate(MobiusMap.identity(F5)) == r2
    assert r2.conjugate(reciprocal(F5)) == RationalMap.make(F5, (0, 2), (1, 0, 2))


def random_map(rng, F, deg):
    while True:
        num = [rng.randrange(F.q) for _ in range(deg + 1)]
        den = [rng.randrange(F.q) for _ in range(deg + 1)]
        if any(den):
            f = RationalMap.make(F, num, den)
            if f.degree >= 1:
                return f


@pytest.mark.parametrize("pk", [(5, 1), (7, 1), (3, 2), (2, 3)])
def test_compose_pointwise(pk):
    F = make_field(*pk)
    rng = random.Random(99)
    for _ in range(30):
        f, g = random_map(rng, F, rng.randint(1, 3)), random_map(rng, F, rng.randint(1, 3))
        fg = f.compose(g)
        assert fg.degree == f.degree * g.degree
        for x in p1_points(F):
            assert fg(x) == f(g(x))


def test_evaluation_over_extension(e5):
    f = RationalMap.make(F5, (2, 0, 1), (0, 2))
    K = e5.field
    b = e5.beta
    want = K.div(K.add(K.mul(b, b), 2), K.mul(2, b))
    assert f(b, over=K) == want
    with pytest.raises(Exception):
        f(0, over=make_field(7))


def test_restrict_rejects_extension_coefficients(e5):
    K = e5.field
    with pytest.raises(ValueError):
        RationalMap.make(K, (e5.beta, 1), (1,)).restrict(F5)


def test_point_encoding():
    F4 = make_field(2, 2)
    assert encode_point(F4, INF) == "inf"
    assert decode_point(F4, "inf") is INF
    assert decode_point(F4, "1,1") == 3
    assert RationalMap.make(F5, (2, 0, 1), (0, 2)).format() == "num: 1,0,3 / den: 0,1"


@settings(max_examples=50)
@given(st.integers(0, 4), st.integers(0, 4))
def test_infinity_is_first_class(a, b):
    m = MobiusMap.make(F5, 1, a, 0, 1) if b == 0 else MobiusMap.make(F5, a, 1, 1, 0)
    assert m(m.inverse()(INF)) is INF
