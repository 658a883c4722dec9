import pytest

from redeimaps.cheby import (
    ChebySpec,
    affine_bijective,
    cheby_coeffs,
    cheby_combine,
    cheby_combine_display,
    cheby_display,
    cheby_eval,
    cheby_is_involution,
    cheby_permutes_affine,
    cheby_permutes_p1,
)
from redeimaps.ffield import make_field
from redeimaps.projmap import INF, RationalMap, p1_points, reciprocal
from redeimaps.redei import RedeiSpec, is_bijective, redei_coeffs

from conftest import SMALL_FIELDS, all_extensions, ext_for


def test_coeff_examples(e5, e2):
    assert cheby_coeffs(ChebySpec(e5, 1)) == RationalMap.identity(e5.base)
    assert cheby_display(ChebySpec(e5, 2)) == ((0, 2), (1, 0, 2))
    assert cheby_coeffs(ChebySpec(e5, 2), verify=True) == RationalMap.make(e5.base, (0, 2), (1, 0, 2))
    assert cheby_coeffs(ChebySpec(e2, 2), verify=True) == RationalMap(e2.base, (0, 0, 1), (1, 0, 1))


def test_spec_validation(e5):
    with pytest.raises(ValueError):
        ChebySpec(e5, 0)


@pytest.mark.parametrize("pk", SMALL_FIELDS + [(2, 4), (11, 1)])
def test_conjugation_identity(pk):
    for ext in all_extensions(*pk):
        for n in range(1, 13):
            c = cheby_coeffs(ChebySpec(ext, n))
            assert c == redei_coeffs(RedeiSpec(ext, n)).conjugate(reciprocal(ext.base))
            assert c.degree == n


def test_eval_examples(e5, e7):
    for n in (1, 2, 5, 6):
        assert cheby_eval(ChebySpec(e5, n), 0) == 0
    assert cheby_eval(ChebySpec(e5, 2), 1) == 4
    c3 = cheby_coeffs(ChebySpec(e7, 3))
    assert cheby_eval(ChebySpec(e7, 3), INF) == c3(INF)


@pytest.mark.parametrize("pk", [(5, 1), (3, 2), (2, 2), (2, 3)])
def test_eval_agrees_with_coeffs_on_extension(pk):
    for ext in all_extensions(*pk):
        for n in range(1, 9):
            spec = ChebySpec(ext, n)
            c = cheby_coeffs(spec)
            for x in p1_points(ext.field):
                assert c(x, over=ext.field) == cheby_eval(spec, x)


def test_combine_examples(e5, e2):
    for ext in (e5, e2, ext_for(2, 2, 2)):
        for u in p1_points(ext.base):
            assert cheby_combine(ext, u, 0) == u
    assert cheby_combine(e5, 1, 1) == 4 == cheby_eval(ChebySpec(e5, 2), 1)
    assert cheby_combine_display(e5, 1, 1) == 4
    assert cheby_combine(e2, 1, 1) is INF
    assert cheby_eval(ChebySpec(e2, 2), 1) is INF
    assert cheby_combine_display(e2, 1, 1) is None


@pytest.mark.parametrize("pk", [(7, 1), (3, 2), (2, 3)])
def test_addition_and_display(pk):
    for ext in all_extensions(*pk):
        C = {n: cheby_coeffs(ChebySpec(ext, n)) for n in range(1, 17)}
        for m in range(1, 9):
            for n in range(1, 9):
                for x in p1_points(ext.base):
                    u, v = C[m](x), C[n](x)
                    got = cheby_combine(ext, u, v)
                    assert got == C[m + n](x)
                    d = cheby_combine_display(ext, u, v)
                    assert d is None or d == got


def test_odd_combiner_is_velocity_addition():
    for ext in all_extensions(7):
        F = ext.base
        assert ext.beta_sum == 0
        for u in F.elements():
            for v in F.elements():
                den = F.add(1, F.mul(ext.alpha, F.mul(u, v)))
                if den:
                    assert cheby_combine(ext, u, v) == F.div(F.add(u, v), den)


@pytest.mark.parametrize("pk", [(5, 1), (2, 2)])
def test_commutation(pk):
    for ext in all_extensions(*pk):
        C = {n: cheby_coeffs(ChebySpec(ext, n)) for n in range(1, 9)}
        for m in range(1, 9):
            for n in range(1, 9):
                assert C[m].compose(C[n]) == C[n].compose(C[m]) == cheby_coeffs(ChebySpec(ext, m * n))


def test_permutes_examples():
    e5 = ext_for(5, 1, 2)
    assert cheby_permutes_p1(ChebySpec(e5, 5), verify=True)
    assert not cheby_permutes_p1(ChebySpec(e5, 2), verify=True)
    e8 = all_extensions(2, 3)[0]
    spec = ChebySpec(e8, 3)
    brute = is_bijective(lambda x: cheby_eval(spec, x), p1_points(e8.base))
    assert brute is False
    assert cheby_permutes_p1(spec, verify=True) is False


def test_permutes_affine_examples(e7):
    e5 = ext_for(5, 1, 2)
    assert cheby_permutes_affine(ChebySpec(e5, 5), verify=True)
    assert not cheby_permutes_affine(ChebySpec(e5, 2), verify=True)
    assert cheby_eval(ChebySpec(e5, 2), 0) == 0
    assert cheby_eval(ChebySpec(e5, 2), INF) == 0
    assert cheby_permutes_affine(ChebySpec(e7, 3), verify=True)
    with pytest.raises(ValueError):
        cheby_permutes_affine(ChebySpec(ext_for(2, 1, 1), 3))


def test_even_n_collides_at_zero(e5):
    # C_n(0) = 0 for every n (odd-power numerator, unit constant term in the denominator);
    # for even n also C_n(inf) = 0, so 0 and inf collide and F_q is not permuted
    for n in (2, 4, 6, 8):
        spec = ChebySpec(e5, n)
        assert cheby_eval(spec, 0) == 0
        assert cheby_eval(spec, INF) == 0
        assert not affine_bijective(spec)


def test_even_q_affine_data_is_exposed():
    # for even q the affine criterion is not asserted; the brute-force answer is still available
    e4 = all_extensions(2, 2)[0]
    table = {n: affine_bijective(ChebySpec(e4, n)) for n in range(1, 7)}
    assert table[1] is True
    assert all(isinstance(v, bool) for v in table.values())


def test_involution_examples(e7):
    e5 = ext_for(5, 1, 2)
    assert cheby_is_involution(ChebySpec(e7, 3), verify=True)
    assert cheby_is_involution(ChebySpec(e5, 5), verify=True)
    assert not cheby_is_involution(ChebySpec(e5, 3), verify=True)


def test_invalid_alpha_rejected_at_spec():
    from redeimaps.ffield import Extension, QuadraticField

    F = make_field(5)
    bogus = Extension(F, 4, QuadraticField(F, 4), 5, 20)
    with pytest.raises(ValueError):
        ChebySpec(bogus, 2)
