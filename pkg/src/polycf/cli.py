"""Command line front end.

Subcommands: eval, identify, limit, convert, triangularize.  Polynomials are
written in the text grammar of :mod:`polycf.algebra` (variable n or x).  All
numeric output is exact fraction strings; pass --digits for an additional
decimal rendering computed by integer long division.  Exit codes: 0 success,
1 domain error (the message carries the library error name), 2 parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .algebra import Poly, is_inf, parse_factored, parse_poly
from .errors import NonTelescoping, PolycfError, PolyParseError
from .euler import EulerTriple, euler_partial_value, trivial_triple
from .identify import identify
from .limits import (
    beta_degree1,
    cf_limit_from_zeta,
    dominant_limit,
    numeric_limit,
    telescoping_zeta_sum,
)
from .matforms import (
    euler_cf_matrix,
    euler_left_eigen,
    rederive_euler_sum,
    to_cf_form,
    to_integral_cf_form,
    triangularize,
    PolyMat2,
)
from .mobius import CFSpec, constant_cf_limit, CFLimit, _state_at


def _poly_arg(text: str) -> Poly:
    try:
        return parse_poly(text)
    except PolyParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _factored_arg(text: str):
    try:
        return parse_factored(text)
    except PolyParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _rat_arg(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"bad rational {text!r}: {exc}") from None


def _positive_int(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return n


def _matrix_arg(text: str) -> tuple:
    parts = text.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError("need four comma-separated entries A,B,C,D")
    return tuple(_poly_arg(p) for p in parts)


# Flags whose value is a polynomial or rational and may begin with a minus
# sign; argparse would read such a value as an option, so `--b -n^6` is
# folded into `--b=-n^6` before parsing.
_VALUE_FLAGS = {"--a", "--b", "--head", "--eps", "--b-factored", "--h1", "--h2", "--matrix"}


def _normalize_argv(argv: list) -> list:
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_FLAGS and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def decimal_string(q: Fraction, digits: int) -> str:
    """Decimal rendering of q truncated to `digits` places, no floats."""
    sign = "-" if q < 0 else ""
    n, d = abs(q.numerator), q.denominator
    whole, rem = divmod(n, d)
    if digits == 0:
        return f"{sign}{whole}"
    frac = rem * 10**digits // d
    return f"{sign}{whole}.{frac:0{digits}d}"


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="polycf",
        description="exact polynomial continued fractions: evaluate, identify, solve",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("eval", help="exact convergent of head + K b(n)/a(n)")
    ev.add_argument("--a", type=_poly_arg, required=True, help="partial denominators a(n)")
    ev.add_argument("--b", type=_poly_arg, required=True, help="partial numerators b(n)")
    ev.add_argument("--head", type=_rat_arg, default=Fraction(0), help="term added in front")
    ev.add_argument("--depth", type=_positive_int, required=True, help="number of terms")
    ev.add_argument("--reduced", action="store_true", help="print the pair in lowest terms")
    ev.add_argument("--digits", type=_positive_int, help="also print a decimal rendering")

    idf = sub.add_parser("identify", help="find Euler-family triples for (a, b)")
    idf.add_argument("--a", type=_poly_arg, required=True)
    idf.add_argument("--b", type=_poly_arg, required=True)
    idf.add_argument(
        "--b-factored",
        type=_factored_arg,
        default=None,
        help='pre-factored form of b, e.g. "-(n)^3*(n+1)^3"',
    )
    idf.add_argument("--jobs", type=_positive_int, default=1, help="parallel workers")

    lim = sub.add_parser("limit", help="estimate or solve the CF limit")
    lim.add_argument("--a", type=_poly_arg, required=True)
    lim.add_argument("--b", type=_poly_arg, required=True)
    lim.add_argument("--eps", type=_rat_arg, default=Fraction(1, 10**9))
    lim.add_argument("--max-depth", type=_positive_int, default=1 << 16)
    lim.add_argument("--closed-form", action="store_true", help="try exact closed forms")
    lim.add_argument("--digits", type=_positive_int, help="decimal rendering of estimates")

    cv = sub.add_parser("convert", help="companion (CF) form of a 2x2 polynomial family")
    cv.add_argument(
        "--matrix",
        type=_matrix_arg,
        required=True,
        metavar="A,B,C,D",
        help='row-major entries of M(n), e.g. "n+1,n^2,2n+1,3"',
    )

    tr = sub.add_parser("triangularize", help="Euler partial value via the triangular route")
    tr.add_argument("--h1", type=_poly_arg, required=True)
    tr.add_argument("--h2", type=_poly_arg, required=True)
    tr.add_argument("--depth", type=_positive_int, required=True)
    return ap


def _cmd_eval(args) -> int:
    cf = CFSpec(b=args.b, a=args.a, head=args.head)
    state = _state_at(cf, args.depth)
    h = args.head
    p, q = state.p, state.q
    num = h.numerator * q + h.denominator * p
    den = h.denominator * q
    if den == 0:
        print("inf")
        return 0
    if args.reduced:
        v = Fraction(num, den)
        num, den = v.numerator, v.denominator
    print(f"{num}/{den}")
    if args.digits:
        print(decimal_string(Fraction(num, den), args.digits))
    return 0


def _cmd_identify(args) -> int:
    report = identify(args.a, args.b, factored=args.b_factored, jobs=args.jobs)
    print(json.dumps(report.to_dict(), indent=2))
    return 0


def _render_closed_form(t: EulerTriple) -> list[str]:
    lines = [
        f"triple: h1 = {t.h1.to_text()}, h2 = {t.h2.to_text()}, f = {t.f.to_text()}"
    ]
    try:
        combo = telescoping_zeta_sum(t)
        form = cf_limit_from_zeta(t, combo)
        lines.append(f"sum = {combo}")
        if combo.status == combo.DIVERGENT:
            lines.append(f"cf = {form.divergent_value()} (sum diverges)")
        else:
            lines.append(f"cf = {form}")
        return lines
    except NonTelescoping as exc:
        lines.append(f"not telescoping: {exc}")
    if t.f == Poly.one():
        dom = dominant_limit(t)
        if dom is not None:
            lines.append(f"cf = {dom} (dominant growth)")
            return lines
        if t.h1.degree <= 1 and t.h2.degree <= 1:
            try:
                form = beta_degree1(t.h1, t.h2)
                lines.append(str(form))
                return lines
            except PolycfError as exc:
                lines.append(f"no Beta form: {exc.__class__.__name__}: {exc}")
    lines.append("no closed form found")
    return lines


def _cmd_limit(args) -> int:
    if args.a.degree in (0, None) and args.b.degree in (0, None):
        res = constant_cf_limit(args.a.coeff(0), args.b.coeff(0))
        print(res.kind)
        if res.kind == CFLimit.CONVERGES:
            print(f"root: {res.root}")
            if args.digits:
                print(decimal_string(res.root.approx(args.digits + 5), args.digits))
        return 0
    est = numeric_limit(CFSpec(b=args.b, a=args.a), args.eps, args.max_depth)
    if est.value is None:
        print("estimate: none")
    elif is_inf(est.value):
        print("estimate: inf")
    elif args.digits:
        print(f"estimate: {decimal_string(est.value, args.digits)}")
    else:
        print(f"estimate: {est.value}")
    if est.last_delta is None:
        print("delta: none")
    elif args.digits:
        print(f"delta: {decimal_string(est.last_delta, args.digits)}")
    else:
        print(f"delta: {est.last_delta}")
    print(f"depth: {est.depth_used}")
    print(f"verdict: {est.verdict}")
    if args.closed_form:
        report = identify(args.a, args.b)
        if not report.solutions:
            print("no closed form found (no Euler-family match)")
        else:
            for line in _render_closed_form(report.solutions[0]):
                print(line)
    return 0


def _cmd_convert(args) -> int:
    m = PolyMat2(*args.matrix)
    cfm, u, init = to_cf_form(m)
    print(f"cf form: {cfm}")
    print(f"coboundary: {u}")
    print(f"init: [{init.a}, {init.b}; {init.c}, {init.d}]")
    print(f"integral form: {to_integral_cf_form(m)}")
    return 0


def _cmd_triangularize(args) -> int:
    h1, h2, n = args.h1, args.h2, args.depth
    t, alpha = triangularize(euler_cf_matrix(h1, h2), euler_left_eigen(h1, h2))
    print(f"T: {t}")
    print(f"alpha = {alpha}, lambda = {h2.to_text()}")
    v1 = rederive_euler_sum(h1, h2, n)
    v2 = euler_partial_value(trivial_triple(h1, h2), n - 1)
    s1 = "inf" if is_inf(v1) else str(v1)
    s2 = "inf" if is_inf(v2) else str(v2)
    print(f"triangular route K_1^{n - 1} = {s1}")
    print(f"summation formula K_1^{n - 1} = {s2}")
    print(f"agree: {str(v1 == v2).lower()}")
    return 0


_DISPATCH = {
    "eval": _cmd_eval,
    "identify": _cmd_identify,
    "limit": _cmd_limit,
    "convert": _cmd_convert,
    "triangularize": _cmd_triangularize,
}


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    args = _build_parser().parse_args(_normalize_argv(list(argv)))
    try:
        return _DISPATCH[args.command](args)
    except PolyParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except PolycfError as exc:
        print(f"error: {exc.__class__.__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
