"""Dense univariate polynomials over a finite field.

A polynomial is a tuple of field elements (ints, see :mod:`redeimaps.ffield`),
little-endian, with no trailing zeros.  The zero polynomial is ``()``.
Every function takes the field as its first argument so the same code serves
F_p, F_{p^k} and the quadratic extensions.
"""

from __future__ import annotations

from typing import Sequence

Poly = tuple


def trim(a: Sequence[int]) -> Poly:
    n = len(a)
    while n and a[n - 1] == 0:
        n -= 1
    return tuple(a[:n])


def degree(a: Poly) -> int:
    """Degree of ``a``; the zero polynomial has degree -1."""
    return len(a) - 1


def add(F, a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = F.add(out[i], c)
    return trim(out)


def neg(F, a: Poly) -> Poly:
    return tuple(F.neg(c) for c in a)


def sub(F, a: Poly, b: Poly) -> Poly:
    return add(F, a, neg(F, b))


def scale(F, a: Poly, c: int) -> Poly:
    if c == 0:
        return ()
    return trim([F.mul(x, c) for x in a])


def mul(F, a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    if F.degree == 1:
        # plain integer convolution, reduced once at the end
        p = F.p
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return trim([c % p for c in out])
    out = [0] * (len(a) + len(b) - 1)
    fadd, fmul = F.add, F.mul
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = fadd(out[i + j], fmul(x, y))
    return trim(out)


def power(F, a: Poly, e: int) -> Poly:
    result: Poly = (1,)
    base = a
    while e:
        if e & 1:
            result = mul(F, result, base)
        e >>= 1
        if e:
            base = mul(F, base, base)
    return result


def divmod_(F, a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    db = len(b) - 1
    if len(a) - 1 < db:
        return (), a
    inv_lead = F.inv(b[-1])
    rem = list(a)
    quo = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        c = F.mul(c, inv_lead)
        quo[i - db] = c
        off = i - db
        for j, bj in enumerate(b):
            if bj:
                rem[off + j] = F.sub(rem[off + j], F.mul(c, bj))
    return trim(quo), trim(rem[:db])


def mod(F, a: Poly, b: Poly) -> Poly:
    return divmod_(F, a, b)[1]


def monic(F, a: Poly) -> Poly:
    if not a or a[-1] == 1:
        return a
    return scale(F, a, F.inv(a[-1]))


def gcd(F, a: Poly, b: Poly) -> Poly:
    """Monic gcd; ``gcd(0, 0) == ()``."""
    while b:
        a, b = b, mod(F, a, b)
    return monic(F, a)


def evaluate(F, a: Poly, x: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = F.add(F.mul(acc, x), c)
    return acc


def powmod(F, a: Poly, e: int, m: Poly) -> Poly:
    result: Poly = mod(F, (1,), m)
    base = mod(F, a, m)
    while e:
        if e & 1:
            result = mod(F, mul(F, result, base), m)
        e >>= 1
        if e:
            base = mod(F, mul(F, base, base), m)
    return result
