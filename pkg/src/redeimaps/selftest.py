"""Exhaustive small-field checks, one per acceptance criterion.

Each check raises ``AssertionError`` on the first counterexample and
otherwise returns a short summary.  ``run`` prints one PASS/FAIL line per
check and is what ``redeimaps selftest`` calls.
"""

from __future__ import annotations

import sys
import time
from math import gcd
from typing import Callable

from .cheby import (
    ChebySpec,
    affine_bijective,
    cheby_coeffs,
    cheby_combine,
    cheby_combine_display,
    cheby_eval,
    cheby_is_involution,
)
from .fgraph import build_graph, canonical_form, power_map_graph
from .ffield import enumerate_alphas, make_extension, make_field
from .keyx import KeyxParams, decode_message, derive_public, derive_shared, encode_message, keygen
from .projmap import RationalMap, p1_points, reciprocal
from .redei import RedeiSpec, is_bijective, redei_coeffs, redei_combine, redei_combine_display, redei_eval
from .trig import TrigCtx2, TrigCtxOdd, tan2_multiply, tan_odd_addition, trig2_identities

FIELDS = {2: (2, 1), 3: (3, 1), 4: (2, 2), 5: (5, 1), 7: (7, 1), 8: (2, 3), 9: (3, 2), 11: (11, 1),
          13: (13, 1), 16: (2, 4), 17: (17, 1), 25: (5, 2), 27: (3, 3), 32: (2, 5),
          251: (251, 1), 256: (2, 8)}  # fmt: skip

ODD_Q = (3, 5, 7, 9, 11, 13)
EVEN_Q = (2, 4, 8, 16)
QUICK_ODD_Q = (3, 5, 7)
QUICK_EVEN_Q = (2, 4)
N_RANGE = range(1, 13)


def field(q: int):
    return make_field(*FIELDS[q])


def extensions(q: int):
    F = field(q)
    return [make_extension(F, a) for a in enumerate_alphas(F)]


def _test_set(quick: bool):
    return (QUICK_ODD_Q + QUICK_EVEN_Q) if quick else (ODD_Q + EVEN_Q)


def check_alpha_count(quick: bool = False) -> str:
    qs = _test_set(quick) + (() if quick else (17, 25, 27, 32))
    for q in qs:
        got = len(enumerate_alphas(field(q)))
        assert got == q // 2, f"q={q}: {got} alphas, expected {q // 2}"
    return f"{len(qs)} fields"


def check_definition_vs_display(quick: bool = False) -> str:
    count = 0
    for q in _test_set(quick):
        for ext in extensions(q):
            pts = p1_points(ext.field)
            for n in N_RANGE:
                spec = RedeiSpec(ext, n)
                f = redei_coeffs(spec)
                for x in pts:
                    assert f(x, over=ext.field) == redei_eval(spec, x), f"q={q} {ext} n={n} x={x}"
                count += len(pts)
    return f"{count} point evaluations"


def check_conjugation(quick: bool = False) -> str:
    count = 0
    for q in _test_set(quick):
        for ext in extensions(q):
            inv_x = reciprocal(ext.base)
            pts = p1_points(ext.field)
            for n in N_RANGE:
                spec = ChebySpec(ext, n)
                c = cheby_coeffs(spec)
                assert c == redei_coeffs(spec.redei).conjugate(inv_x), f"q={q} {ext} n={n}"
                for x in pts:
                    assert c(x, over=ext.field) == cheby_eval(spec, x), f"q={q} {ext} n={n} x={x}"
                count += 1
    return f"{count} (q, alpha, n) triples"


def check_permutation(quick: bool = False) -> str:
    count = 0
    for q in _test_set(quick):
        for ext in extensions(q):
            P1 = p1_points(ext.base)
            for n in N_RANGE:
                expect = gcd(n, q + 1) == 1
                r = RedeiSpec(ext, n)
                c = ChebySpec(ext, n)
                assert is_bijective(lambda x: redei_eval(r, x), P1) == expect, f"R q={q} {ext} n={n}"
                assert is_bijective(lambda x: cheby_eval(c, x), P1) == expect, f"C q={q} {ext} n={n}"
                if ext.odd:
                    assert affine_bijective(c) == expect, f"affine q={q} {ext} n={n}"
                count += 1
    return f"{count} (q, alpha, n) triples"


def check_commutation(quick: bool = False) -> str:
    count = 0
    for q in _test_set(quick):
        for ext in extensions(q):
            P1 = p1_points(ext.base)
            R = {n: redei_coeffs(RedeiSpec(ext, n)) for n in range(1, 9)}
            C = {n: cheby_coeffs(ChebySpec(ext, n)) for n in range(1, 9)}
            for fam in (R, C):
                for m in range(1, 9):
                    for n in range(m, 9):
                        mn, nm = fam[m].compose(fam[n]), fam[n].compose(fam[m])
                        assert mn == nm, f"q={q} {ext} m={m} n={n}"
                        assert all(fam[m](fam[n](x)) == fam[n](fam[m](x)) for x in P1)
                        count += 1
    return f"{count} symbolic + pointwise pairs"


def check_addition(quick: bool = False) -> str:
    count = displays = 0
    for q in _test_set(quick):
        for ext in extensions(q):
            P1 = p1_points(ext.base)
            R = {n: redei_coeffs(RedeiSpec(ext, n)) for n in range(1, 17)}
            C = {n: cheby_coeffs(ChebySpec(ext, n)) for n in range(1, 17)}
            fams = ((R, redei_combine, redei_combine_display), (C, cheby_combine, cheby_combine_display))
            for fam, combine, display in fams:
                for m in range(1, 9):
                    for n in range(1, 9):
                        for x in P1:
                            u, v, want = fam[m](x), fam[n](x), fam[m + n](x)
                            got = combine(ext, u, v)
                            assert got == want, f"q={q} {ext} m={m} n={n} x={x}"
                            d = display(ext, u, v)
                            if d is not None:
                                assert d == got, f"display q={q} {ext} u={u} v={v}"
                                displays += 1
                            count += 1
    return f"{count} points, {displays} display agreements"


def _graph(f: Callable, ext):
    return build_graph(f, p1_points(ext.base))


def check_functional_graphs(quick: bool = False) -> str:
    count = 0
    for q in _test_set(quick):
        for ext in extensions(q):
            for n in N_RANGE:
                target = canonical_form(power_map_graph(ext, n))
                r, c = RedeiSpec(ext, n), ChebySpec(ext, n)
                assert canonical_form(_graph(lambda x: redei_eval(r, x), ext)) == target, f"R q={q} n={n}"
                assert canonical_form(_graph(lambda x: cheby_eval(c, x), ext)) == target, f"C q={q} n={n}"
                count += 1
    return f"{count} (q, alpha, n) triples"


def check_involutions(quick: bool = False) -> str:
    count = 0
    for q in _test_set(quick):
        for ext in extensions(q):
            P1 = p1_points(ext.base)
            for n in range(1, 21):
                spec = ChebySpec(ext, n)
                brute = all(cheby_eval(spec, cheby_eval(spec, x)) == x for x in P1)
                assert cheby_is_involution(spec) == brute, f"q={q} {ext} n={n}"
                count += 1
    return f"{count} (q, alpha, n) triples"


def check_trigonometry(quick: bool = False) -> str:
    pairs = 0
    for q in (2, 4) if quick else (2, 4, 8):
        for ext in extensions(q):
            K = ext.field
            g = K.primitive_element
            for zeta in (g, K.mul(g, g)):
                ctx = TrigCtx2(ext, zeta)
                for k in range(ctx.ord):
                    for l in range(ctx.ord):
                        res = trig2_identities(ctx, k, l)
                        assert all(res), f"q={q} {ext} zeta={zeta} k={k} l={l}: {res}"
                        pairs += 1
                    for n in range(1, 9):
                        a, b = tan2_multiply(ctx, k, n)
                        assert a == b, f"tan multiply q={q} zeta={zeta} k={k} n={n}"
    for q in (5,) if quick else (5, 7, 9):
        for ext in extensions(q):
            ctx = TrigCtxOdd(ext)
            for k in range(ctx.ord):
                for l in range(ctx.ord):
                    assert tan_odd_addition(ctx, k, l), f"odd q={q} {ext} k={k} l={l}"
                    pairs += 1
                for n in range(1, 9):
                    a, b = ctx.tan_multiply(k, n)
                    assert a == b, f"odd tan multiply q={q} k={k} n={n}"
    return f"{pairs} (k, l) pairs"


def check_alpha_injectivity(quick: bool = False) -> str:
    count = 0
    for q in (5, 8) if quick else (5, 7, 8, 9, 13):
        exts = extensions(q)
        for n in (2, 3):
            if n == exts[0].base.p:
                continue
            maps = [redei_coeffs(RedeiSpec(e, n)) for e in exts]
            assert len(set(maps)) == len(maps), f"q={q} n={n}: two alphas give the same R_n"
            count += 1
    return f"{count} (q, n) cases"


def check_key_exchange(quick: bool = False) -> str:
    trials = 10 if quick else 100
    for q in (13, 16, 251, 256):
        F = field(q)
        alphas = enumerate_alphas(F)
        for t in range(trials):
            ext = make_extension(F, alphas[t % len(alphas)])
            params = KeyxParams(ext, (7 * t + 1) % q)
            a, b = keygen(params, 2 * t), keygen(params, 2 * t + 1)
            for s in (a, b):
                assert 2 <= s.n <= q * q and gcd(s.n, q + 1) == 1, f"q={q} bad secret {s.n}"
            A, B = derive_public(params, a), derive_public(params, b)
            assert derive_shared(params, a, B) == derive_shared(params, b, A), f"q={q} trial {t}"
            for pub in (A, B):
                assert decode_message(encode_message(params, pub)) == (params, pub), f"q={q} wire"
    return f"{4 * trials} exchanges"


def check_performance(quick: bool = False) -> str:
    F = field(251)
    alphas = enumerate_alphas(F)
    exts = [make_extension(F, a) for a in (alphas[0], alphas[len(alphas) // 2], alphas[-1])]
    P1 = p1_points(F)
    spec = ChebySpec(exts[0], 10**9)
    t0 = time.perf_counter()
    for x in P1:
        cheby_eval(spec, x)
    per_point = (time.perf_counter() - t0) / len(P1)
    assert per_point < 1e-3, f"{per_point * 1e3:.3f} ms per point"
    for ext in exts[:1] if quick else exts:
        for n in N_RANGE:
            s = ChebySpec(ext, n)
            c: RationalMap = cheby_coeffs(s)
            assert all(c(x) == cheby_eval(s, x) for x in P1), f"q=251 {ext} n={n}"
    return f"{per_point * 1e6:.1f} us per point at n=10^9"


CRITERIA: list[tuple[int, str, Callable[[bool], str]]] = [
    (1, "alpha count", check_alpha_count),
    (2, "definition vs display", check_definition_vs_display),
    (3, "conjugation by 1/x", check_conjugation),
    (4, "permutation criteria", check_permutation),
    (5, "commutation", check_commutation),
    (6, "addition laws", check_addition),
    (7, "functional graphs", check_functional_graphs),
    (8, "involutions", check_involutions),
    (9, "trigonometry", check_trigonometry),
    (10, "alpha injectivity", check_alpha_injectivity),
    (11, "key exchange", check_key_exchange),
    (12, "evaluation performance", check_performance),
]


def run(quick: bool = False, out=sys.stdout) -> bool:
    ok = True
    for num, name, fn in CRITERIA:
        t0 = time.perf_counter()
        try:
            detail = fn(quick)
            status = "PASS"
        except AssertionError as exc:
            detail, status, ok = str(exc), "FAIL", False
        print(f"{status} {num:2d} {name}: {detail} ({time.perf_counter() - t0:.2f}s)", file=out)
    return ok
