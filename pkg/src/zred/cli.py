"""Command line front end.

Text output by default, stable JSON with --json: forms as arrays of
decimal strings, quotient strings as arrays of integers, binary strings
as plain strings.  Exit codes: 0 success, 1 failed verification, 2 usage,
3 precondition violation, 4 internal invariant breakage.

Negative coefficients parse as plain signed decimals; use `--` before
them if your shell or the option parser complains, e.g.
`zred gamma -- 1 3 -2`.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import NamedTuple

from .contfrac import cf_expand, denjoy_surd, neg_cf_surd, reg_cf_surd, surd
from .forms import form, form_to_json
from .maps import beta, denjoy_period, gamma, mu, sigma, tau, xi
from .oracle import SUITE_IDS, verify
from .pell import fundamental_solution
from .reduction import cycles, orbit_to_cycle, z_caliber


class Result(NamedTuple):
    text: str
    payload: object
    code: int = 0


def _natstring(text: str) -> tuple:
    parts = text.replace(",", " ").split()
    if not parts:
        raise ValueError("empty entry string")
    return tuple(int(x) for x in parts)


def _fmt_nat(s) -> str:
    return ",".join(str(q) for q in s)


def _add_form_args(sub) -> None:
    sub.add_argument("a", type=int)
    sub.add_argument("b", type=int)
    sub.add_argument("c", type=int)


def _cmd_pell(args) -> Result:
    sol = fundamental_solution(args.delta)
    return Result(str(sol),
                  {"t": str(sol.t), "u": str(sol.u), "epsilon": sol.epsilon})


def _cmd_cf(args) -> Result:
    q = cf_expand(args.num, args.den, args.parity)
    return Result(_fmt_nat(q), list(q))


def _cmd_surd_cf(args) -> Result:
    x = surd(args.p, args.q, args.delta)
    if args.kind == "denjoy":
        bits = denjoy_surd(x, args.terms)
        return Result(bits, bits)
    expand = reg_cf_surd if args.kind == "reg" else neg_cf_surd
    q = expand(x, args.terms)
    return Result(_fmt_nat(q), list(q))


def _cmd_reduce(args) -> Result:
    res = orbit_to_cycle(form(args.a, args.b, args.c), args.op)
    lines = [f"pre: {f}" for f in res.pre_period]
    lines.extend(f"cycle: {f}" for f in res.cycle)
    return Result("\n".join(lines),
                  {"pre_period": [form_to_json(f) for f in res.pre_period],
                   "cycle": [form_to_json(f) for f in res.cycle]})


def _cmd_cycles(args) -> Result:
    cyc = cycles(args.delta, args.op)
    lines = [" -> ".join(str(f) for f in c) for c in cyc]
    return Result("\n".join(lines),
                  [[form_to_json(f) for f in c] for c in cyc])


def _cmd_caliber(args) -> Result:
    n = z_caliber(form(args.a, args.b, args.c))
    return Result(str(n), n)


def _cmd_gamma(args) -> Result:
    s = gamma(form(args.a, args.b, args.c))
    return Result(_fmt_nat(s), list(s))


def _cmd_beta(args) -> Result:
    s = beta(form(args.a, args.b, args.c))
    return Result(_fmt_nat(s), list(s))


def _cmd_sigma(args) -> Result:
    s = sigma(form(args.a, args.b, args.c))
    return Result(s, s)


def _cmd_mu(args) -> Result:
    g = mu(form(args.a, args.b, args.c))
    return Result(str(g), form_to_json(g))


def _cmd_tau(args) -> Result:
    g = tau(_natstring(args.entries))
    return Result(str(g), form_to_json(g))


def _cmd_xi(args) -> Result:
    g = xi(_natstring(args.entries))
    return Result(str(g), form_to_json(g))


def _cmd_denjoy_period(args) -> Result:
    p = denjoy_period(form(args.a, args.b, args.c))
    return Result(p, p)


def _cmd_verify(args) -> Result:
    ids = SUITE_IDS if args.suite == "all" else [args.suite]
    reports = [verify(t, args.delta_max, jobs=args.jobs) for t in ids]
    lines = []
    for r in reports:
        lines.append(r.summary())
        lines.extend(f"    {f}" for f in r.failures[:5])
    ok = all(r.passed for r in reports)
    return Result("\n".join(lines),
                  {"passed": ok, "reports": [r.to_json() for r in reports]},
                  0 if ok else 1)


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="zred",
        description="Exact reduction theory of indefinite binary quadratic forms.")
    p.add_argument("--json", action="store_true", help="emit JSON instead of text")
    subs = p.add_subparsers(dest="command", required=True)

    s = subs.add_parser("pell", help="fundamental solution of |t^2 - delta u^2| = 4")
    s.add_argument("delta", type=int)
    s.set_defaults(handler=_cmd_pell)

    s = subs.add_parser("cf", help="continued fraction of num/den with chosen parity")
    s.add_argument("num", type=int)
    s.add_argument("den", type=int)
    s.add_argument("--parity", choices=("odd", "even"), required=True)
    s.set_defaults(handler=_cmd_cf)

    s = subs.add_parser("surd-cf", help="expansion of (p + sqrt(delta))/q")
    s.add_argument("p", type=int)
    s.add_argument("q", type=int)
    s.add_argument("delta", type=int)
    s.add_argument("--kind", choices=("reg", "neg", "denjoy"), default="reg")
    s.add_argument("--terms", type=int, required=True)
    s.set_defaults(handler=_cmd_surd_cf)

    s = subs.add_parser("reduce", help="orbit of a form under a reduction step")
    _add_form_args(s)
    s.add_argument("--op", choices=("z", "g"), default="z")
    s.set_defaults(handler=_cmd_reduce)

    s = subs.add_parser("cycles", help="all reduction cycles of a discriminant")
    s.add_argument("delta", type=int)
    s.add_argument("--op", choices=("z", "g"), default="z")
    s.set_defaults(handler=_cmd_cycles)

    s = subs.add_parser("caliber", help="length of the form's Zagier cycle")
    _add_form_args(s)
    s.set_defaults(handler=_cmd_caliber)

    for name, handler, blurb in (
            ("gamma", _cmd_gamma, "bead string of a Gauss-reduced form, a > 0"),
            ("beta", _cmd_beta, "bead string of a Zagier-reduced form"),
            ("sigma", _cmd_sigma, "binary string of a Zagier-reduced form"),
            ("mu", _cmd_mu, "Zagier-reduced companion of a Gauss-reduced form"),
            ("denjoy-period", _cmd_denjoy_period,
             "binary expansion period attached to a Zagier-reduced form")):
        s = subs.add_parser(name, help=blurb)
        _add_form_args(s)
        s.set_defaults(handler=handler)

    for name, handler, blurb in (
            ("tau", _cmd_tau, "form built from a bead string (length >= 2)"),
            ("xi", _cmd_xi, "Gauss-reduced form built from a bead string")):
        s = subs.add_parser(name, help=blurb)
        s.add_argument("entries", help="comma or space separated positive integers")
        s.set_defaults(handler=handler)

    s = subs.add_parser("verify", help="run a verification suite")
    s.add_argument("--suite", choices=["all"] + SUITE_IDS, default="all")
    s.add_argument("--delta-max", type=int, default=300)
    s.add_argument("--jobs", type=int, default=None,
                   help="parallel worker processes (default: ZRED_JOBS or 1)")
    s.set_defaults(handler=_cmd_verify)

    return p


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        res = args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except AssertionError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 4
    out = json.dumps(res.payload) if args.json else res.text
    if out:
        print(out)
    return res.code


if __name__ == "__main__":
    sys.exit(main())
