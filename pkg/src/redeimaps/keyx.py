"""Toy Diffie-Hellman-style exchange over the commuting family C_n.

Both parties publish C_a(x0) and C_b(x0); since C_a o C_b = C_ab = C_b o C_a
they arrive at the same point.  Discrete logarithms in mu_{q+1} are easy at
the field sizes supported here, so this is a demonstration only.

Secrets are drawn with ``random.Random(seed)`` from [2, q^2] and redrawn until
coprime to q + 1, so a fixed seed always gives the same transcript.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import gcd

from .cheby import ChebySpec, cheby_eval
from .ffield import Extension, FieldError, is_valid_alpha, make_extension, parse_field_spec
from .projmap import INF, decode_point, encode_point

VERSION = "KEYX1"


class WireError(ValueError):
    """Malformed or unsupported key-exchange message."""


@dataclass(frozen=True)
class KeyxParams:
    ext: Extension
    x0: object  # point of P^1(F_q)

    def __post_init__(self):
        if self.x0 is not INF:
            self.ext.base.check(self.x0)


@dataclass(frozen=True)
class KeyxSecret:
    n: int


def keygen(params: KeyxParams, seed: int) -> KeyxSecret:
    q = params.ext.q
    rng = random.Random(seed)
    while True:
        n = rng.randint(2, q * q)
        if gcd(n, q + 1) == 1:
            return KeyxSecret(n)


def derive_public(params: KeyxParams, secret: KeyxSecret):
    return cheby_eval(ChebySpec(params.ext, secret.n), params.x0)


def derive_shared(params: KeyxParams, secret: KeyxSecret, peer_public):
    return cheby_eval(ChebySpec(params.ext, secret.n), peer_public)


def encode_message(params: KeyxParams, public) -> str:
    F = params.ext.base
    return " ".join(
        [
            VERSION,
            F.spec,
            F.encode(params.ext.alpha),
            encode_point(F, params.x0),
            encode_point(F, public),
        ]
    )


def decode_message(line: str) -> tuple[KeyxParams, object]:
    """Parse a wire line into (params, public point)."""
    parts = line.split()
    if not parts:
        raise WireError("empty message")
    if parts[0] != VERSION:
        raise WireError(f"unknown version tag {parts[0]!r}")
    if len(parts) != 5:
        raise WireError(f"expected 5 fields, got {len(parts)}")
    _, spec, alpha_s, x0_s, pub_s = parts
    try:
        F = parse_field_spec(spec)
        alpha = F.decode(alpha_s)
        if not is_valid_alpha(F, alpha):
            raise WireError(f"alpha {alpha_s} is not valid for field {spec}")
        x0 = decode_point(F, x0_s)
        public = decode_point(F, pub_s)
    except FieldError as exc:
        raise WireError(str(exc)) from None
    return KeyxParams(make_extension(F, alpha), x0), public
