"""Finite-field trigonometry over F_{q^2}.

Even q::

    sin(k) = z^k + z^-k,   cos(k) = beta z^k + beta_bar z^-k,   tan = sin / cos

Odd q, with i = beta (so i^2 = alpha)::

    cos(k) = (z^k + z^-k) / 2,   sin(k) = (z^k - z^-k) / (2 i),   tan = sin / cos

In both cases tan(k) = eta^-1(z^(2k)), which is what makes C_n act on
tangents as multiplication of the angle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from .cheby import ChebySpec, cheby_coeffs, cheby_combine, cheby_combine_display
from .ffield import Extension
from .projmap import INF


@dataclass(frozen=True)
class _Trig:
    ext: Extension
    zeta: int | None = None
    ord: int = field(init=False)

    def __post_init__(self):
        K = self.ext.field
        z = K.primitive_element if self.zeta is None else K.check(self.zeta)
        if z == 0:
            raise ValueError("zeta must be nonzero")
        object.__setattr__(self, "zeta", z)
        object.__setattr__(self, "ord", K.order(z))

    @property
    def K(self):
        return self.ext.field

    def _z(self, k: int) -> tuple[int, int]:
        K = self.K
        zk = K.pow(self.zeta, k % self.ord)
        return zk, K.inv(zk)

    def tan(self, k: int):
        c = self.cos(k)
        return INF if c == 0 else self.K.div(self.sin(k), c)

    def tan_combine(self, t1, t2):
        """The tangent-addition rational display where finite, else eta-lifting."""
        out = cheby_combine_display(self.ext, t1, t2, field=self.K)
        return cheby_combine(self.ext, t1, t2) if out is None else out

    def tan_multiply(self, k: int, n: int):
        """(C_n(tan k), tan(nk)), C_n evaluated from its coefficients."""
        f = cheby_coeffs(ChebySpec(self.ext, n))
        return f(self.tan(k), over=self.K), self.tan(n * k)


class TrigCtx2(_Trig):
    """Characteristic-2 trigonometry for a fixed zeta in F_{q^2}^*."""

    def __post_init__(self):
        if self.ext.odd:
            raise ValueError("TrigCtx2 needs even q")
        super().__post_init__()

    def sin(self, k: int) -> int:
        zk, zi = self._z(k)
        return self.K.add(zk, zi)

    def cos(self, k: int) -> int:
        K = self.K
        zk, zi = self._z(k)
        return K.add(K.mul(self.ext.beta, zk), K.mul(self.ext.beta_bar, zi))


class TrigIdentities(NamedTuple):
    power: bool
    pythagoras: bool
    sin_sum: bool
    cos_sum: bool
    tan_sum: bool


def trig2_identities(ctx: TrigCtx2, k: int, l: int) -> TrigIdentities:
    K = ctx.K
    al, bb = K(ctx.ext.alpha), K(ctx.ext.beta_bar)
    sk, ck, sl, cl = K(ctx.sin(k)), K(ctx.cos(k)), K(ctx.sin(l)), K(ctx.cos(l))
    zk = K(ctx.zeta) ** k
    return TrigIdentities(
        power=zk == ck + bb * sk,
        pythagoras=ck * ck + sk * ck + al * sk * sk == 1,
        sin_sum=K(ctx.sin(k + l)) == sk * cl + sl * ck + sk * sl,
        cos_sum=K(ctx.cos(k + l)) == ck * cl + al * sk * sl,
        tan_sum=ctx.tan(k + l) == ctx.tan_combine(ctx.tan(k), ctx.tan(l)),
    )


def tan2_multiply(ctx: TrigCtx2, k: int, n: int):
    return ctx.tan_multiply(k, n)


class TrigCtxOdd(_Trig):
    """Odd-q trigonometry, taking i = beta."""

    def __post_init__(self):
        if not self.ext.odd:
            raise ValueError("TrigCtxOdd needs odd q")
        super().__post_init__()

    @property
    def i_elem(self) -> int:
        return self.ext.beta

    def cos(self, k: int) -> int:
        K = self.K
        zk, zi = self._z(k)
        return K.div(K.add(zk, zi), K.from_int(2))

    def sin(self, k: int) -> int:
        K = self.K
        zk, zi = self._z(k)
        return K.div(K.sub(zk, zi), K.mul(K.from_int(2), self.i_elem))


def tan_odd_addition(ctx: TrigCtxOdd, k: int, l: int) -> bool:
    """tan(k + l) == (tan k + tan l) / (1 + i^2 tan k tan l), projectively."""
    return ctx.tan(k + l) == ctx.tan_combine(ctx.tan(k), ctx.tan(l))
