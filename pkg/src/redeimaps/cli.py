"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 domain error (bad field, alpha,
element ...), 3 selftest failure.
"""

from __future__ import annotations

import argparse
import sys

from . import selftest
from .cheby import (
    ChebySpec,
    affine_bijective,
    cheby_coeffs,
    cheby_combine,
    cheby_display,
    cheby_eval,
    cheby_is_involution,
    cheby_permutes_affine,
    cheby_permutes_p1,
)
from .fgraph import build_graph, cycle_stats, power_map_graph, to_dot
from .ffield import FieldError, enumerate_alphas, make_extension, parse_field_spec
from .keyx import KeyxParams, decode_message, derive_public, derive_shared, encode_message, keygen
from .projmap import decode_point, encode_point, format_coeffs, p1_points
from .redei import RedeiSpec, redei_coeffs, redei_combine, redei_display, redei_eval, redei_permutes
from .trig import TrigCtx2, TrigCtxOdd


class UsageError(Exception):
    pass


class DomainError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _flag(flag: str, fn, *args):
    """Run a parser for one flag's value, naming the flag on failure."""
    try:
        return fn(*args)
    except (FieldError, ValueError) as exc:
        raise DomainError(f"{flag}: {exc}") from None


def _ext(args):
    F = _flag("--field", parse_field_spec, args.field)
    alpha = _flag("--alpha", F.decode, args.alpha)
    return _flag("--alpha", make_extension, F, alpha)


def _n(args, flag="--n"):
    if args.n < 1:
        raise DomainError(f"{flag}: degree must be >= 1, got {args.n}")
    return args.n


def _bool(b: bool) -> str:
    return "true" if b else "false"


def cmd_alphas(args):
    F = _flag("--field", parse_field_spec, args.field)
    return [F.encode(a) for a in enumerate_alphas(F)]


def _coeff_lines(args, F, display, normalized):
    if args.normalized:
        return [normalized.format()]
    return [format_coeffs(F, *display)]


def cmd_redei(args):
    ext = _ext(args)
    spec = _flag("--n", RedeiSpec, ext, _n(args))
    F = ext.base
    if args.coeffs:
        return _coeff_lines(args, F, redei_display(spec), redei_coeffs(spec))
    if args.permutes:
        return [_bool(redei_permutes(spec))]
    x = _flag("--eval", decode_point, F, args.eval)
    return [encode_point(F, redei_eval(spec, x))]


def cmd_cheby(args):
    ext = _ext(args)
    spec = _flag("--n", ChebySpec, ext, _n(args))
    F = ext.base
    if args.coeffs:
        return _coeff_lines(args, F, cheby_display(spec), cheby_coeffs(spec))
    if args.involution:
        return [_bool(cheby_is_involution(spec))]
    if args.permutes:
        return [_bool(cheby_permutes_p1(spec))]
    if args.affine:
        return [_bool(cheby_permutes_affine(spec) if ext.odd else affine_bijective(spec))]
    x = _flag("--eval", decode_point, F, args.eval)
    return [encode_point(F, cheby_eval(spec, x))]


def cmd_combine(args):
    ext = _ext(args)
    F = ext.base
    u = _flag("--u", decode_point, F, args.u)
    v = _flag("--v", decode_point, F, args.v)
    combine = cheby_combine if args.cheby else redei_combine
    return [encode_point(F, combine(ext, u, v))]


def cmd_graph(args):
    ext = _ext(args)
    n = _n(args)
    F = ext.base
    if args.map == "power":
        g = power_map_graph(ext, n)
    else:
        if args.map == "redei":
            spec = RedeiSpec(ext, n)
            f = lambda x: redei_eval(spec, x)  # noqa: E731
        else:
            spec = ChebySpec(ext, n)
            f = lambda x: cheby_eval(spec, x)  # noqa: E731
        g = build_graph(f, p1_points(F), lambda x: encode_point(F, x))
    if args.format == "dot":
        return to_dot(g, args.map).splitlines()
    return [cycle_stats(g)]


def cmd_trig(args):
    ext = _ext(args)
    K = ext.field
    zeta = None if args.zeta is None else _flag("--zeta", K.decode, args.zeta)
    cls = TrigCtxOdd if ext.odd else TrigCtx2
    ctx = _flag("--zeta", cls, ext, zeta)
    lines = [f"# zeta={K.encode(ctx.zeta)} order={ctx.ord}", "# k sin cos tan"]
    for k in range(ctx.ord):
        lines.append(f"{k} {K.encode(ctx.sin(k))} {K.encode(ctx.cos(k))} {encode_point(K, ctx.tan(k))}")
    return lines


def cmd_keyx_demo(args):
    ext = _ext(args)
    x0 = _flag("--x0", decode_point, ext.base, args.x0)
    params = KeyxParams(ext, x0)
    a, b = keygen(params, args.seed_a), keygen(params, args.seed_b)
    msg_a = encode_message(params, derive_public(params, a))
    msg_b = encode_message(params, derive_public(params, b))
    # each side parses the other's line as it would off the wire
    _, pub_b = decode_message(msg_b)
    _, pub_a = decode_message(msg_a)
    s_a = derive_shared(params, a, pub_b)
    s_b = derive_shared(params, b, pub_a)
    F = ext.base
    return [
        f"A: {msg_a}",
        f"B: {msg_b}",
        f"shared A: {encode_point(F, s_a)}",
        f"shared B: {encode_point(F, s_b)}",
        f"agree: {_bool(s_a == s_b)}",
    ]


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="redeimaps", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def field_alpha(p):
        p.add_argument("--field", required=True, help='field spec, "p" or "p^k"')
        p.add_argument("--alpha", required=True, help="alpha as comma-separated coefficients")

    p = sub.add_parser("alphas", help="list valid alpha values")
    p.add_argument("--field", required=True)
    p.set_defaults(func=cmd_alphas)

    for name, func in (("redei", cmd_redei), ("cheby", cmd_cheby)):
        p = sub.add_parser(name, help=f"{'Redei' if name == 'redei' else 'tangent-Chebyshev'} map of degree n")
        field_alpha(p)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--normalized", action="store_true", help="print the reduced, monic-denominator form")
        g = p.add_mutually_exclusive_group(required=True)
        g.add_argument("--coeffs", action="store_true")
        g.add_argument("--eval", metavar="X")
        g.add_argument("--permutes", action="store_true", help="does the map permute P^1(F_q)")
        if name == "cheby":
            g.add_argument("--involution", action="store_true")
            g.add_argument("--affine", action="store_true", help="does the map permute F_q")
        p.set_defaults(func=func)

    p = sub.add_parser("combine", help="addition combiner for R or C values")
    field_alpha(p)
    p.add_argument("--u", required=True)
    p.add_argument("--v", required=True)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--redei", action="store_true")
    g.add_argument("--cheby", action="store_true")
    p.set_defaults(func=cmd_combine)

    p = sub.add_parser("graph", help="functional graph of R_n, C_n on P^1(F_q) or x^n on mu_{q+1}")
    field_alpha(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--map", choices=("redei", "cheby", "power"), required=True)
    p.add_argument("--format", choices=("dot", "cycles"), default="cycles")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("trig", help="sin/cos/tan table over F_{q^2}")
    field_alpha(p)
    p.add_argument("--zeta", help="element of F_{q^2} (default: smallest generator)")
    p.add_argument("--table", action="store_true", required=True)
    p.set_defaults(func=cmd_trig)

    p = sub.add_parser("keyx", help="toy key exchange")
    ksub = p.add_subparsers(dest="keyx_command", required=True, parser_class=_Parser)
    d = ksub.add_parser("demo", help="run both sides of one exchange")
    field_alpha(d)
    d.add_argument("--x0", required=True)
    d.add_argument("--seed-a", type=int, required=True)
    d.add_argument("--seed-b", type=int, required=True)
    d.set_defaults(func=cmd_keyx_demo)

    p = sub.add_parser("selftest", help="run the acceptance checks")
    p.add_argument("--quick", action="store_true")
    p.set_defaults(func=None)
    return parser


def run(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    if args.command == "selftest":
        return 0 if selftest.run(quick=args.quick, out=out) else 3
    try:
        lines = args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    for line in lines:
        print(line, file=out)
    return 0


def main():
    sys.exit(run())
