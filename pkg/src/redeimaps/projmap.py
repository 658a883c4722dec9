"""Points of the projective line, Moebius maps and reduced rational maps."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from . import poly
from .ffield import Extension, Field, FieldError


class _Infinity:
    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "inf"

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()
Point = Union[int, _Infinity]


def p1_points(F: Field) -> list:
    """All q + 1 points of P^1(F): the field elements in order, then inf."""
    return list(F.elements()) + [INF]


def encode_point(F: Field, pt) -> str:
    return "inf" if pt is INF else F.encode(pt)


def decode_point(F: Field, text: str):
    return INF if text.strip().lower() == "inf" else F.decode(text)


def point_mul(F: Field, u, v):
    """Product on P^1 away from 0 * inf."""
    if u is INF or v is INF:
        if u == 0 or v == 0:
            raise ValueError("0 * inf is undefined")
        return INF
    return F.mul(u, v)


def point_pow(F: Field, u, n: int):
    if n < 1:
        raise ValueError("exponent must be positive")
    if u is INF or u == 0:
        return u
    return F.pow(u, n)


def _lift(F: Field, G: Field | None) -> Field:
    """Field for evaluation: ``G`` may be a quadratic extension of ``F``."""
    if G is None or G == F:
        return F
    if getattr(G, "base", None) == F:
        return G
    raise FieldError(f"cannot evaluate a map over {F!r} at points of {G!r}")


@dataclass(frozen=True)
class MobiusMap:
    """x -> (a x + b) / (c x + d), normalised so the first nonzero of (a, b, c, d) is 1."""

    field: Field
    a: int
    b: int
    c: int
    d: int

    @classmethod
    def make(cls, F: Field, a: int, b: int, c: int, d: int) -> MobiusMap:
        if F.sub(F.mul(a, d), F.mul(b, c)) == 0:
            raise ValueError("degenerate Moebius map: ad - bc = 0")
        lead = next(x for x in (a, b, c, d) if x)
        s = F.inv(lead)
        return cls(F, *(F.mul(x, s) for x in (a, b, c, d)))

    @classmethod
    def identity(cls, F: Field) -> MobiusMap:
        return cls(F, 1, 0, 0, 1)

    def __call__(self, pt):
        F = self.field
        if pt is INF:
            return INF if self.c == 0 else F.div(self.a, self.c)
        den = F.add(F.mul(self.c, pt), self.d)
        if den == 0:
            return INF
        return F.div(F.add(F.mul(self.a, pt), self.b), den)

    def compose(self, other: MobiusMap) -> MobiusMap:
        """``self o other``."""
        if other.field != self.field:
            raise FieldError("Moebius maps over different fields")
        F = self.field
        m, ad = F.mul, F.add
        a, b, c, d = self.a, self.b, self.c, self.d
        e, f, g, h = other.a, other.b, other.c, other.d
        return MobiusMap.make(
            F,
            ad(m(a, e), m(b, g)),
            ad(m(a, f), m(b, h)),
            ad(m(c, e), m(d, g)),
            ad(m(c, f), m(d, h)),
        )

    def inverse(self) -> MobiusMap:
        F = self.field
        return MobiusMap.make(F, self.d, F.neg(self.b), F.neg(self.c), self.a)

    def is_identity(self) -> bool:
        return (self.a, self.b, self.c, self.d) == (1, 0, 0, 1)

    def to_rational(self) -> RationalMap:
        return RationalMap.make(self.field, (self.b, self.a), (self.d, self.c))


def reciprocal(F: Field) -> MobiusMap:
    """x -> 1/x."""
    return MobiusMap(F, 0, 1, 1, 0)


def rho_map(ext: Extension) -> MobiusMap:
    """rho(x) = (x - beta_bar) / (x - beta); sends P^1(F_q) onto mu_{q+1}."""
    K = ext.field
    return MobiusMap.make(K, 1, K.neg(ext.beta_bar), 1, K.neg(ext.beta))


def rho_inv(ext: Extension) -> MobiusMap:
    """rho^-1(x) = (beta x - beta_bar) / (x - 1)."""
    K = ext.field
    return MobiusMap.make(K, ext.beta, K.neg(ext.beta_bar), 1, K.neg(1))


def eta_map(ext: Extension) -> MobiusMap:
    """eta(x) = rho(1/x) = (beta_bar x - 1) / (beta x - 1)."""
    K = ext.field
    return MobiusMap.make(K, ext.beta_bar, K.neg(1), ext.beta, K.neg(1))


def eta_inv(ext: Extension) -> MobiusMap:
    """eta^-1(x) = 1 / rho^-1(x) = (x - 1) / (beta x - beta_bar)."""
    K = ext.field
    return MobiusMap.make(K, 1, K.neg(1), ext.beta, K.neg(ext.beta_bar))


@dataclass(frozen=True)
class RationalMap:
    """num/den over ``field`` with gcd(num, den) = 1 and den monic.

    Build through :meth:`make`; two maps are equal iff their normalised
    coefficient tuples are.
    """

    field: Field
    num: tuple
    den: tuple

    @classmethod
    def make(cls, F: Field, num, den) -> RationalMap:
        num, den = poly.trim(num), poly.trim(den)
        if not den:
            raise ValueError("zero denominator")
        g = poly.gcd(F, num, den) if num else (1,)
        if len(g) > 1:
            num = poly.divmod_(F, num, g)[0]
            den = poly.divmod_(F, den, g)[0]
        if not num:
            den = (1,)
        s = F.inv(den[-1])
        return cls(F, poly.scale(F, num, s), poly.scale(F, den, s))

    @classmethod
    def identity(cls, F: Field) -> RationalMap:
        return cls(F, (0, 1), (1,))

    @classmethod
    def monomial(cls, F: Field, n: int) -> RationalMap:
        return cls(F, (0,) * n + (1,), (1,))

    @property
    def degree(self) -> int:
        return max(poly.degree(self.num), poly.degree(self.den))

    def __call__(self, pt, over: Field | None = None):
        """Evaluate at a point of P^1(F) or, with ``over``, of P^1 of an extension of F."""
        K = _lift(self.field, over)
        dn, dd = poly.degree(self.num), poly.degree(self.den)
        if pt is INF:
            if dn > dd:
                return INF
            if dn < dd:
                return 0
            return K.div(self.num[-1], self.den[-1])
        d = poly.evaluate(K, self.den, pt)
        if d == 0:
            return INF
        return K.div(poly.evaluate(K, self.num, pt), d)

    def lift(self, K: Field) -> RationalMap:
        """The same map viewed over an extension field ``K``."""
        _lift(self.field, K)
        return RationalMap(K, self.num, self.den)

    def restrict(self, F: Field) -> RationalMap:
        """View a map over F_{q^2} as one over F_q; every coefficient must lie in F_q."""
        if getattr(self.field, "base", None) != F:
            raise FieldError(f"{F!r} is not the base of {self.field!r}")
        if any(c >= F.q for c in self.num + self.den):
            raise ValueError("coefficients do not lie in the base field")
        return RationalMap(F, self.num, self.den)

    def compose(self, g: RationalMap | MobiusMap) -> RationalMap:
        """``self o g``, computed symbolically from the homogenised numerator and denominator."""
        if isinstance(g, MobiusMap):
            g = g.to_rational()
        if g.field != self.field:
            raise FieldError("rational maps over different fields")
        F = self.field
        d = self.degree
        P, Q = g.num, g.den
        p_pows = [(1,)]
        q_pows = [(1,)]
        for _ in range(d):
            p_pows.append(poly.mul(F, p_pows[-1], P))
            q_pows.append(poly.mul(F, q_pows[-1], Q))
        num: tuple = ()
        den: tuple = ()
        for i in range(d + 1):
            term = poly.mul(F, p_pows[i], q_pows[d - i])
            if i < len(self.num) and self.num[i]:
                num = poly.add(F, num, poly.scale(F, term, self.num[i]))
            if i < len(self.den) and self.den[i]:
                den = poly.add(F, den, poly.scale(F, term, self.den[i]))
        return RationalMap.make(F, num, den)

    def conjugate(self, m: MobiusMap) -> RationalMap:
        """m^-1 o self o m."""
        return m.inverse().to_rational().compose(self.compose(m))

    def format(self) -> str:
        return format_coeffs(self.field, self.num, self.den)


def format_coeffs(F: Field, num, den) -> str:
    """CLI text form, ascending degree: ``num: c0,c1,... / den: c0,...``.

    Coefficients print as integers for prime fields and as ``[d0;d1;...]``
    digit groups otherwise.
    """

    def one(c):
        if F.degree == 1:
            return str(c)
        return "[" + F.encode(c).replace(",", ";") + "]"

    def vec(a):
        return ",".join(one(c) for c in a) if a else "0"

    return f"num: {vec(num)} / den: {vec(den)}"
