import pytest

from redeimaps.cheby import ChebySpec, cheby_eval
from redeimaps.projmap import INF, eta_map
from redeimaps.trig import TrigCtx2, TrigCtxOdd, tan2_multiply, tan_odd_addition, trig2_identities

from conftest import all_extensions, ext_for


def test_definitions_at_zero(e2):
    for ext in all_extensions(2, 2):
        ctx = TrigCtx2(ext)
        assert ctx.sin(0) == 0 and ctx.cos(0) == 1 and ctx.tan(0) == 0
    ctx = TrigCtxOdd(ext_for(5, 1, 2))
    assert ctx.sin(0) == 0 and ctx.cos(0) == 1 and ctx.tan(0) == 0
    assert tan_odd_addition(ctx, 0, 0)


def test_f4_values(e2):
    K = e2.field
    omega = e2.beta
    ctx = TrigCtx2(e2, omega)
    assert ctx.ord == 3
    assert ctx.sin(1) == K.add(omega, K.mul(omega, omega)) == 1
    assert all(trig2_identities(ctx, 1, 2))
    a, b = tan2_multiply(ctx, 1, 2)
    assert a == b
    assert ctx.tan(2) is INF


def test_periodicity_and_negative_k():
    ext = all_extensions(2, 2)[1]
    ctx = TrigCtx2(ext)
    for k in range(-20, 20):
        assert ctx.sin(k + ctx.ord) == ctx.sin(k)
        assert ctx.cos(k - ctx.ord) == ctx.cos(k)


def test_identities_zero_pair():
    for ext in all_extensions(2, 3):
        assert all(trig2_identities(TrigCtx2(ext), 0, 0))


def test_f16_full_sweep():
    for ext in all_extensions(2, 2):
        ctx = TrigCtx2(ext)
        assert ctx.ord == 15
        for k in range(15):
            for l in range(15):
                assert all(trig2_identities(ctx, k, l))
            for n in range(1, 9):
                a, b = tan2_multiply(ctx, k, n)
                assert a == b


@pytest.mark.parametrize("pk", [(2, 1), (2, 2), (2, 3)])
def test_tan_is_eta_preimage_of_zeta_squared(pk):
    for ext in all_extensions(*pk):
        ctx = TrigCtx2(ext)
        K = ext.field
        eta = eta_map(ext)
        for k in range(ctx.ord):
            assert eta(ctx.tan(k)) == K.pow(ctx.zeta, 2 * k)


def test_non_generator_zeta():
    ext = all_extensions(2, 3)[0]
    K = ext.field
    zeta = K.pow(K.primitive_element, 9)
    ctx = TrigCtx2(ext, zeta)
    assert ctx.ord == 7
    for k in range(7):
        for l in range(7):
            assert all(trig2_identities(ctx, k, l))


def test_context_validation(e5, e2):
    with pytest.raises(ValueError):
        TrigCtx2(e5)
    with pytest.raises(ValueError):
        TrigCtxOdd(e2)
    with pytest.raises(ValueError):
        TrigCtx2(e2, 0)


def test_odd_sweep_f25():
    ext = ext_for(5, 1, 2)
    ctx = TrigCtxOdd(ext)
    assert ctx.ord == 24
    K = ext.field
    assert K.mul(ctx.i_elem, ctx.i_elem) == ext.alpha
    for k in range(24):
        for l in range(24):
            assert tan_odd_addition(ctx, k, l)
        for n in range(1, 9):
            assert cheby_eval(ChebySpec(ext, n), ctx.tan(k)) == ctx.tan(n * k)


def test_odd_definitions_satisfy_classical_relations():
    # cos^2 - alpha sin^2 = 1 with i^2 = alpha, the analogue of cosh^2 - sinh^2
    for ext in all_extensions(7):
        ctx = TrigCtxOdd(ext)
        K = ext.field
        for k in range(ctx.ord):
            c, s = K(ctx.cos(k)), K(ctx.sin(k))
            assert c * c - K(ext.alpha) * s * s == 1
