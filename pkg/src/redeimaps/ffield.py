"""Finite fields F_{p^k} and the quadratic extensions F_{q^2} = F_q[x]/h(x).

Elements are plain Python ints.  An element of F_{p^k} = F_p[t]/irr(t) is
stored as the integer whose base-p digits are its little-endian coefficients,
so ``3`` in F_5 is 3 and ``1 + t`` in F_4 is ``1 + 1*2 = 3``.  An element
``a0 + a1*beta`` of a quadratic extension is stored as ``a0 + a1*q``; its
base-p digits are then the coefficients of a0 followed by those of a1.  In
every field the constants 0 and 1 are the ints 0 and 1, and F_q sits inside
F_{q^2} as the ints below q.

Arithmetic lives on the field object (``F.mul(a, b)``).  ``F(a)`` wraps an
element in :class:`Elem` for operator syntax where formulas get long.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from math import isqrt

from . import poly

DEFAULT_MAX_ORDER = 1 << 20
# fields at most this large get log/antilog multiplication tables
TABLE_LIMIT = 1 << 12


class FieldError(ValueError):
    """Invalid field parameters or an element outside its field."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorisation by trial division."""
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


class Field:
    """Operations shared by all finite fields.  Subclasses define ``_mul``,
    ``add``, ``neg`` and ``_inv`` on the int encoding."""

    p: int
    q: int
    degree: int  # over F_p

    zero = 0
    one = 1

    def _setup_tables(self):
        self._exp = None
        self._log = None
        if self.degree > 1 and self.q <= TABLE_LIMIT:
            g = self.primitive_element
            n = self.q - 1
            exp = [1] * (2 * n)
            log = [0] * self.q
            x = 1
            for i in range(n):
                exp[i] = exp[i + n] = x
                log[x] = i
                x = self._mul(x, g)
            self._exp, self._log = exp, log

    def mul(self, a: int, b: int) -> int:
        if self._exp is None:
            return self._mul(a, b)
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self._exp is not None:
            return self._exp[self.q - 1 - self._log[a]]
        return self._inv(a)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        """``a**e`` by square-and-multiply; negative ``e`` allowed for a != 0."""
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 1 if e == 0 else 0
        e %= self.q - 1
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            e >>= 1
            if e:
                a = self.mul(a, a)
        return result

    def from_int(self, n: int) -> int:
        """Image of the integer ``n`` under Z -> F."""
        return n % self.p

    def elements(self) -> range:
        return range(self.q)

    def check(self, a) -> int:
        if not isinstance(a, int) or not 0 <= a < self.q:
            raise FieldError(f"{a!r} is not an element of {self}")
        return a

    def digits(self, a: int) -> tuple[int, ...]:
        """Coefficients over F_p, little-endian, exactly ``degree`` long."""
        out = []
        for _ in range(self.degree):
            a, r = divmod(a, self.p)
            out.append(r)
        return tuple(out)

    def from_digits(self, ds) -> int:
        ds = list(ds)
        if len(ds) > self.degree or any(not 0 <= d < self.p for d in ds):
            raise FieldError(f"coefficients {ds} out of range for {self}")
        v = 0
        for d in reversed(ds):
            v = v * self.p + d
        return v

    def encode(self, a: int) -> str:
        return ",".join(str(d) for d in self.digits(self.check(a)))

    def decode(self, text: str) -> int:
        try:
            ds = [int(tok) for tok in text.strip().split(",")]
        except ValueError:
            raise FieldError(f"bad element encoding {text!r}") from None
        return self.from_digits(ds)

    @cached_property
    def _order_factors(self) -> tuple[int, ...]:
        return tuple(factorize(self.q - 1))

    def order(self, a: int) -> int:
        """Multiplicative order of a nonzero element."""
        if a == 0:
            raise ZeroDivisionError("zero has no multiplicative order")
        n = self.q - 1
        for r in self._order_factors:
            while n % r == 0 and self.pow(a, n // r) == 1:
                n //= r
        return n

    def is_generator(self, a: int) -> bool:
        n = self.q - 1
        return a != 0 and all(self.pow(a, n // r) != 1 for r in self._order_factors)

    @cached_property
    def primitive_element(self) -> int:
        """Smallest generator of the multiplicative group."""
        for a in range(1, self.q):
            if self.is_generator(a):
                return a
        raise AssertionError("no generator found")  # pragma: no cover

    def __call__(self, a) -> Elem:
        return Elem(self, self.check(a))


class FiniteField(Field):
    """F_{p^k} = F_p[t]/irr(t); ``irr`` is little-endian and monic, ``None`` when k = 1."""

    def __init__(self, p: int, k: int = 1, irr: tuple[int, ...] | None = None):
        self.p, self.k = p, k
        self.degree = k
        self.q = p**k
        self.irr = None if k == 1 else tuple(irr)
        if k > 1:
            if self.irr is None or len(self.irr) != k + 1 or self.irr[-1] != 1:
                raise FieldError("need a monic irreducible of degree k")
            if p == 2:
                self._irr_bits = sum(c << i for i, c in enumerate(self.irr))
        self._setup_tables()

    def __repr__(self):
        return f"GF({self.p}^{self.k})" if self.k > 1 else f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, FiniteField) and (self.p, self.k, self.irr) == (
            other.p,
            other.k,
            other.irr,
        )

    def __hash__(self):
        return hash((self.p, self.k, self.irr))

    @property
    def spec(self) -> str:
        return str(self.p) if self.k == 1 else f"{self.p}^{self.k}"

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        p = self.p
        out, place = 0, 1
        while a or b:
            a, x = divmod(a, p)
            b, y = divmod(b, p)
            out += ((x + y) % p) * place
            place *= p
        return out

    def neg(self, a: int) -> int:
        if self.k == 1:
            return -a % self.p
        if self.p == 2:
            return a
        return self.from_digits(-d % self.p for d in self.digits(a))

    def _mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return a * b % self.p
        if self.p == 2:
            prod = 0
            while b:
                if b & 1:
                    prod ^= a
                a <<= 1
                b >>= 1
            k, m = self.k, self._irr_bits
            for i in range(prod.bit_length() - 1, k - 1, -1):
                if prod >> i & 1:
                    prod ^= m << (i - k)
            return prod
        prime = _prime_field(self.p)
        c = poly.mod(prime, poly.mul(prime, poly.trim(self.digits(a)), poly.trim(self.digits(b))), self.irr)
        return self.from_digits(c)

    def _inv(self, a: int) -> int:
        if self.k == 1:
            return pow(a, -1, self.p)
        return self.pow(a, self.q - 2)

    def trace(self, a: int) -> int:
        """Absolute trace Tr_{F_q/F_p}(a)."""
        t, x = 0, a
        for _ in range(self.k):
            t = self.add(t, x)
            x = self.pow(x, self.p)
        return t


_PRIME_FIELDS: dict[int, FiniteField] = {}


def _prime_field(p: int) -> FiniteField:
    F = _PRIME_FIELDS.get(p)
    if F is None:
        F = _PRIME_FIELDS[p] = FiniteField(p)
    return F


def is_irreducible(p: int, f: tuple[int, ...]) -> bool:
    """Rabin's test for a monic f over F_p: no common factor with t^(p^i) - t, i <= deg/2."""
    F = _prime_field(p)
    f = poly.trim(f)
    k = poly.degree(f)
    if k < 1:
        return False
    if k == 1:
        return True
    t = (0, 1)
    x = t
    for _ in range(k // 2):
        x = poly.powmod(F, x, p, f)
        if poly.degree(poly.gcd(F, poly.sub(F, x, t), f)) > 0:
            return False
    return True


def make_field(p: int, k: int = 1, max_order: int = DEFAULT_MAX_ORDER) -> FiniteField:
    """F_{p^k} modelled with the lexicographically least monic irreducible of degree k.

    Candidates are ordered by their coefficient vector read from degree k-1
    down to the constant term.
    """
    if not isinstance(p, int) or not is_prime(p):
        raise FieldError(f"characteristic {p!r} is not prime")
    if not isinstance(k, int) or k < 1:
        raise FieldError(f"extension degree must be >= 1, got {k!r}")
    if p**k > max_order:
        raise FieldError(f"field order {p}^{k} exceeds the bound {max_order}")
    if k == 1:
        return _prime_field(p)
    for high_to_low in product(range(p), repeat=k):
        irr = tuple(reversed(high_to_low)) + (1,)
        if irr[0] != 0 and is_irreducible(p, irr):
            return FiniteField(p, k, irr)
    raise AssertionError("no irreducible found")  # pragma: no cover


def parse_field_spec(text: str, max_order: int = DEFAULT_MAX_ORDER) -> FiniteField:
    """``"p"`` or ``"p^k"`` -> field."""
    try:
        if "^" in text:
            p, k = (int(s) for s in text.split("^"))
        else:
            p, k = int(text), 1
    except ValueError:
        raise FieldError(f"bad field spec {text!r}; expected p or p^k") from None
    return make_field(p, k, max_order)


def is_valid_alpha(F: FiniteField, alpha: int) -> bool:
    """True iff x^2 - alpha (odd q) or x^2 + x + alpha (even q) is irreducible over F."""
    F.check(alpha)
    if F.p == 2:
        return F.trace(alpha) == 1
    return alpha != 0 and F.pow(alpha, (F.q - 1) // 2) == F.neg(1)


def enumerate_alphas(F: FiniteField) -> list[int]:
    return [a for a in F.elements() if is_valid_alpha(F, a)]


class QuadraticField(Field):
    """F_q[x]/h(x) with h = x^2 - alpha (odd q) or x^2 + x + alpha (even q).

    The class of x is the element ``q`` itself.
    """

    def __init__(self, base: FiniteField, alpha: int):
        self.base = base
        self.alpha = alpha
        self.p = base.p
        self.Q = base.q
        self.q = base.q**2
        self.degree = 2 * base.degree
        self.char2 = base.p == 2
        self._setup_tables()

    def __repr__(self):
        return f"{self.base!r}[x]/(x^2{'+x' if self.char2 else ''}{'+' if self.char2 else '-'}{self.alpha})"

    def __eq__(self, other):
        return isinstance(other, QuadraticField) and (self.base, self.alpha) == (other.base, other.alpha)

    def __hash__(self):
        return hash((self.base, self.alpha))

    def split(self, a: int) -> tuple[int, int]:
        a1, a0 = divmod(a, self.Q)
        return a0, a1

    def join(self, a0: int, a1: int) -> int:
        return a0 + a1 * self.Q

    def add(self, a: int, b: int) -> int:
        if self.char2:
            return a ^ b
        B, Q = self.base, self.Q
        a1, a0 = divmod(a, Q)
        b1, b0 = divmod(b, Q)
        return B.add(a0, b0) + B.add(a1, b1) * Q

    def neg(self, a: int) -> int:
        if self.char2:
            return a
        a1, a0 = divmod(a, self.Q)
        return self.base.neg(a0) + self.base.neg(a1) * self.Q

    def _mul(self, a: int, b: int) -> int:
        Q = self.Q
        a1, a0 = divmod(a, Q)
        b1, b0 = divmod(b, Q)
        B = self.base
        if B.k == 1 and not self.char2:
            p, al = B.p, self.alpha
            return (a0 * b0 + al * a1 % p * b1) % p + (a0 * b1 + a1 * b0) % p * Q
        m, ad = B.mul, B.add
        hi = m(a1, b1)
        c0 = ad(m(a0, b0), m(self.alpha, hi))
        c1 = ad(m(a0, b1), m(a1, b0))
        if self.char2:
            # x^2 = x + alpha
            c1 = ad(c1, hi)
        return c0 + c1 * Q

    def conj(self, a: int) -> int:
        """The q-th power (Frobenius) map, swapping the two roots of h."""
        a0, a1 = self.split(a)
        if self.char2:
            return self.join(a0 ^ a1, a1)
        return self.join(a0, self.base.neg(a1))

    def norm(self, a: int) -> int:
        n = self._mul(a, self.conj(a))
        assert n < self.Q
        return n

    def _inv(self, a: int) -> int:
        n_inv = self.base.inv(self.norm(a))
        a0, a1 = self.split(self.conj(a))
        return self.join(self.base.mul(a0, n_inv), self.base.mul(a1, n_inv))

    def in_base(self, a: int) -> bool:
        return a < self.Q


@dataclass(frozen=True, eq=False)
class Extension:
    """A valid alpha for F_q together with F_{q^2} and the two roots of h."""

    base: FiniteField
    alpha: int
    field: QuadraticField
    beta: int
    beta_bar: int

    def __eq__(self, other):
        return isinstance(other, Extension) and (self.base, self.alpha) == (other.base, other.alpha)

    def __hash__(self):
        return hash((self.base, self.alpha))

    def __repr__(self):
        return f"Extension({self.base!r}, alpha={self.base.encode(self.alpha)})"

    @property
    def q(self) -> int:
        return self.base.q

    @property
    def odd(self) -> bool:
        return self.base.p != 2

    @property
    def h(self) -> tuple[int, ...]:
        """Little-endian coefficients of h over F_q."""
        B = self.base
        return (B.neg(self.alpha), 0, 1) if self.odd else (self.alpha, 1, 1)

    @property
    def beta_sum(self) -> int:
        """beta + beta_bar: 0 for odd q, 1 for even q."""
        return self.field.add(self.beta, self.beta_bar)

    @cached_property
    def mu_generator(self) -> int:
        """An element of order exactly q + 1 in F_{q^2}^*."""
        K = self.field
        return K.pow(K.primitive_element, self.q - 1)

    def mu_elements(self) -> list[int]:
        """mu_{q+1} listed as successive powers of :attr:`mu_generator`."""
        K, g = self.field, self.mu_generator
        out, x = [], 1
        for _ in range(self.q + 1):
            out.append(x)
            x = K.mul(x, g)
        return out


def make_extension(F: FiniteField, alpha: int) -> Extension:
    if not is_valid_alpha(F, alpha):
        raise FieldError(f"alpha={F.encode(alpha)} does not give an irreducible h over {F!r}")
    K = QuadraticField(F, alpha)
    beta = F.q
    return Extension(F, alpha, K, beta, K.conj(beta))


def mu_generator(ext: Extension) -> int:
    return ext.mu_generator


class Elem:
    """Operator wrapper around a field element.  Plain ints on either side
    of an operator are read as integer constants, not encodings."""

    __slots__ = ("F", "v")

    def __init__(self, F: Field, v: int):
        self.F, self.v = F, v

    def _other(self, other) -> int:
        if isinstance(other, Elem):
            if other.F != self.F:
                raise FieldError(f"mixed fields {self.F!r} and {other.F!r}")
            return other.v
        if isinstance(other, int):
            return self.F.from_int(other)
        return NotImplemented

    def __add__(self, other):
        return Elem(self.F, self.F.add(self.v, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return Elem(self.F, self.F.sub(self.v, self._other(other)))

    def __rsub__(self, other):
        return Elem(self.F, self.F.sub(self._other(other), self.v))

    def __mul__(self, other):
        return Elem(self.F, self.F.mul(self.v, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return Elem(self.F, self.F.div(self.v, self._other(other)))

    def __rtruediv__(self, other):
        return Elem(self.F, self.F.div(self._other(other), self.v))

    def __neg__(self):
        return Elem(self.F, self.F.neg(self.v))

    def __pow__(self, e: int):
        return Elem(self.F, self.F.pow(self.v, e))

    def __eq__(self, other):
        if isinstance(other, (Elem, int)):
            return self.v == self._other(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.v)

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return f"<{self.F.encode(self.v)} in {self.F!r}>"
