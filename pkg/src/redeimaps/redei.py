"""Redei rational functions R_n(x, alpha) over F_q.

Three constructions are kept side by side:

* :func:`redei_display` / :func:`redei_coeffs` -- the binomial sums,
* :func:`redei_symbolic` -- rho^-1 o x^n o rho composed symbolically over F_{q^2},
* :func:`redei_eval` -- pointwise rho, n-th power, rho^-1 (O(log n) multiplications).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, gcd

from . import poly
from .ffield import Extension
from .projmap import INF, MobiusMap, RationalMap, p1_points, point_mul, point_pow, rho_inv, rho_map

MAX_COEFF_DEGREE = 10**6


@dataclass(frozen=True)
class RedeiSpec:
    ext: Extension
    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"degree n must be a positive integer, got {self.n!r}")


def binomials_mod(n: int, p: int) -> list[int]:
    """C(n, i) mod p for i = 0..n, via Lucas' theorem."""
    digits = []
    m = n
    while m:
        m, r = divmod(m, p)
        digits.append(r)
    out = []
    for i in range(n + 1):
        c, j = 1, i
        for nd in digits:
            j, jd = divmod(j, p)
            if jd > nd:
                c = 0
                break
            c = c * comb(nd, jd) % p
        out.append(c)
    return out


def _check_size(n: int):
    if n > MAX_COEFF_DEGREE:
        raise ValueError(f"n={n} exceeds the coefficient-construction cap {MAX_COEFF_DEGREE}")


def redei_display(spec: RedeiSpec, beta: int | None = None) -> tuple[tuple, tuple]:
    """Numerator and denominator of the explicit binomial formula, over F_q, unnormalised.

    For even q the sums are formed in F_{q^2} from ``beta`` (default: ext.beta)
    and must land in F_q.
    """
    ext, n = spec.ext, spec.n
    _check_size(n)
    F = ext.base
    binom = binomials_mod(n, F.p)
    num = [0] * (n + 1)
    den = [0] * (n + 1)
    if ext.odd:
        a_pow = 1
        for i in range(n // 2 + 1):
            num[n - 2 * i] = F.mul(F.from_int(binom[2 * i]), a_pow)
            if 2 * i + 1 <= n:
                den[n - 2 * i - 1] = F.mul(F.from_int(binom[2 * i + 1]), a_pow)
            a_pow = F.mul(a_pow, ext.alpha)
        return poly.trim(num), poly.trim(den)
    K = ext.field
    b = ext.beta if beta is None else beta
    bb = K.add(b, 1)
    bi, bbi = 1, 1
    for i in range(n + 1):
        if binom[i]:
            num[n - i] = K.add(K.mul(bb, bi), K.mul(b, bbi))
            den[n - i] = K.add(bi, bbi)
        bi, bbi = K.mul(bi, b), K.mul(bbi, bb)
    if any(not K.in_base(c) for c in num + den):
        raise AssertionError("even-q Redei coefficients escaped F_q")
    return poly.trim(num), poly.trim(den)


def redei_coeffs(spec: RedeiSpec) -> RationalMap:
    """R_n(x, alpha) as a reduced rational map over F_q with monic denominator."""
    num, den = redei_display(spec)
    return RationalMap.make(spec.ext.base, num, den)


def redei_symbolic(spec: RedeiSpec, beta: int | None = None) -> RationalMap:
    """rho^-1 o x^n o rho composed over F_{q^2} and restricted to F_q.

    Passing ``beta=ext.beta_bar`` builds the same map from the other root of h.
    """
    ext = spec.ext
    _check_size(spec.n)
    K = ext.field
    b = ext.beta if beta is None else beta
    bb = K.conj(b)
    rho = MobiusMap.make(K, 1, K.neg(bb), 1, K.neg(b))
    xn = RationalMap.monomial(K, spec.n)
    composed = rho.inverse().to_rational().compose(xn.compose(rho))
    return composed.restrict(ext.base)


def redei_eval(spec: RedeiSpec, pt):
    """R_n at a point of P^1(F_q) or P^1(F_{q^2})."""
    ext = spec.ext
    u = rho_map(ext)(pt)
    return rho_inv(ext)(point_pow(ext.field, u, spec.n))


def redei_combine(ext: Extension, u, v):
    """rho^-1(rho(u) rho(v)); sends (R_m(x), R_n(x)) to R_{m+n}(x)."""
    rho = rho_map(ext)
    return rho_inv(ext)(point_mul(ext.field, rho(u), rho(v)))


def redei_combine_display(ext: Extension, u, v):
    """(uv + alpha) / (u + v - (beta + beta_bar)) where that is a finite quotient, else None."""
    if u is INF or v is INF:
        return None
    F = ext.base
    den = F.sub(F.add(u, v), ext.beta_sum)
    if den == 0:
        return None
    return F.div(F.add(F.mul(u, v), ext.alpha), den)


def is_bijective(f, domain) -> bool:
    domain = list(domain)
    image = {f(x) for x in domain}
    return len(image) == len(domain) and image == set(domain)


def redei_permutes(spec: RedeiSpec, verify: bool = False) -> bool:
    """Whether R_n permutes P^1(F_q): gcd(n, q + 1) = 1.

    With ``verify`` the criterion is checked against a full scan of P^1(F_q).
    """
    result = gcd(spec.n, spec.ext.q + 1) == 1
    if verify:
        brute = is_bijective(lambda x: redei_eval(spec, x), p1_points(spec.ext.base))
        assert brute == result, f"gcd criterion disagrees with brute force for {spec}"
    return result
