"""Tangent-Chebyshev maps C_n(x, alpha) = (1/x) o R_n(x, alpha) o (1/x)."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from . import poly
from .ffield import Extension, is_valid_alpha
from .projmap import INF, RationalMap, eta_inv, eta_map, p1_points, point_mul, point_pow, reciprocal
from .redei import RedeiSpec, _check_size, binomials_mod, is_bijective, redei_coeffs


@dataclass(frozen=True)
class ChebySpec:
    ext: Extension
    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"degree n must be a positive integer, got {self.n!r}")
        if not is_valid_alpha(self.ext.base, self.ext.alpha):
            raise ValueError("alpha must be a nonsquare (odd q) or have trace 1 (even q)")

    @property
    def redei(self) -> RedeiSpec:
        return RedeiSpec(self.ext, self.n)


def cheby_display(spec: ChebySpec) -> tuple[tuple, tuple]:
    """Unnormalised numerator and denominator of the binomial formula over F_q."""
    ext, n = spec.ext, spec.n
    _check_size(n)
    F = ext.base
    binom = binomials_mod(n, F.p)
    num = [0] * (n + 1)
    den = [0] * (n + 1)
    if ext.odd:
        a_pow = 1
        for i in range(n // 2 + 1):
            den[2 * i] = F.mul(F.from_int(binom[2 * i]), a_pow)
            if 2 * i + 1 <= n:
                num[2 * i + 1] = F.mul(F.from_int(binom[2 * i + 1]), a_pow)
            a_pow = F.mul(a_pow, ext.alpha)
        return poly.trim(num), poly.trim(den)
    K = ext.field
    b, bb = ext.beta, ext.beta_bar
    bi, bbi = 1, 1
    for i in range(n + 1):
        if binom[i]:
            num[i] = K.add(bi, bbi)
            den[i] = K.add(K.mul(bb, bi), K.mul(b, bbi))
        bi, bbi = K.mul(bi, b), K.mul(bbi, bb)
    if any(not K.in_base(c) for c in num + den):
        raise AssertionError("even-q Chebyshev coefficients escaped F_q")
    return poly.trim(num), poly.trim(den)


def cheby_coeffs(spec: ChebySpec, verify: bool = False) -> RationalMap:
    """C_n as a reduced rational map over F_q.

    With ``verify``, also checks equality with R_n conjugated by 1/x.
    """
    num, den = cheby_display(spec)
    f = RationalMap.make(spec.ext.base, num, den)
    if verify:
        F = spec.ext.base
        g = redei_coeffs(spec.redei).conjugate(reciprocal(F))
        assert f == g, f"C_n differs from the 1/x-conjugate of R_n for {spec}"
    return f


def cheby_eval(spec: ChebySpec, pt):
    """C_n at a point of P^1(F_q) or P^1(F_{q^2}) via eta^-1 o x^n o eta."""
    ext = spec.ext
    u = eta_map(ext)(pt)
    return eta_inv(ext)(point_pow(ext.field, u, spec.n))


def cheby_combine(ext: Extension, u, v):
    """H(u, v) = eta^-1(eta(u) eta(v)); sends (C_m(x), C_n(x)) to C_{m+n}(x)."""
    eta = eta_map(ext)
    return eta_inv(ext)(point_mul(ext.field, eta(u), eta(v)))


def cheby_combine_display(ext: Extension, u, v, field=None):
    """(u + v - (beta + beta_bar) uv) / (1 + alpha uv) for finite u, v with nonzero
    denominator, else None.  ``field`` defaults to F_q; pass F_{q^2} for extension points."""
    if u is INF or v is INF:
        return None
    F = ext.base if field is None else field
    uv = F.mul(u, v)
    den = F.add(1, F.mul(ext.alpha, uv))
    if den == 0:
        return None
    return F.div(F.sub(F.add(u, v), F.mul(ext.beta_sum, uv)), den)


def cheby_permutes_p1(spec: ChebySpec, verify: bool = False) -> bool:
    """Whether C_n permutes P^1(F_q): gcd(n, q + 1) = 1."""
    result = gcd(spec.n, spec.ext.q + 1) == 1
    if verify:
        brute = is_bijective(lambda x: cheby_eval(spec, x), p1_points(spec.ext.base))
        assert brute == result, f"gcd criterion disagrees with brute force for {spec}"
    return result


def affine_bijective(spec: ChebySpec) -> bool:
    """Brute force: does C_n map F_q bijectively onto F_q?  Any q."""
    return is_bijective(lambda x: cheby_eval(spec, x), spec.ext.base.elements())


def cheby_permutes_affine(spec: ChebySpec, verify: bool = False) -> bool:
    """Whether C_n permutes F_q, for odd q: gcd(n, q + 1) = 1."""
    if not spec.ext.odd:
        raise ValueError("the affine permutation criterion is only established for odd q")
    result = gcd(spec.n, spec.ext.q + 1) == 1
    if verify:
        assert affine_bijective(spec) == result, f"gcd criterion disagrees with brute force for {spec}"
    return result


def cheby_is_involution(spec: ChebySpec, verify: bool = False) -> bool:
    """Whether C_n o C_n is the identity on P^1(F_q): n^2 = 1 mod q + 1."""
    result = (spec.n * spec.n - 1) % (spec.ext.q + 1) == 0
    if verify:
        brute = all(cheby_eval(spec, cheby_eval(spec, x)) == x for x in p1_points(spec.ext.base))
        assert brute == result, f"involution criterion disagrees with brute force for {spec}"
    return result
