"""Command-line front end: ``cyclicpg {info,enumerate,poly,solve,verify}``.

JSON output is stable (sorted hex listings, no timing unless ``--timing``);
the text format is for people and may change.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import geometry as geo
from . import ovoids as ov
from . import verify
from .errors import CyclicPGError, UnsupportedSize
from .gf2e import MAX_M, MIN_M, context_for_q

THREADS_ENV = "CYCLICPG_THREADS"

SETS = ["P", "S", "O", "Os", "Ot", "T0", "T1", "elliptic"]


def _positive_int(text):
    v = int(text, 0)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _q_value(text):
    try:
        q = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"q must be an integer, got {text!r}") from None
    if q < 2 or q & (q - 1) or not MIN_M <= q.bit_length() - 1 <= MAX_M:
        raise argparse.ArgumentTypeError(f"q must be 2^m with {MIN_M} <= m <= {MAX_M}, got {q}")
    return q


def _common(parser, suppress):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--q", type=_q_value, default=d(8), help="field order q = 2^m (default 8)")
    parser.add_argument("--modulus", default=d(None), help="hex modulus of degree 4m overriding the default")
    parser.add_argument("--format", choices=["json", "text"], default=d("json"))
    parser.add_argument("--threads", type=_positive_int, default=d(None),
                        help=f"worker threads (default ${THREADS_ENV} or 1)")
    parser.add_argument("--budget", type=_positive_int, default=d(verify.DEFAULT_BUDGET),
                        help="evaluation budget before a check switches to sampling")
    parser.add_argument("--out", default=d(None), help="write output to this file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cyclicpg", description=__doc__.splitlines()[0])
    _common(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="field and subgroup parameters")
    _common(p, suppress=True)

    p = sub.add_parser("enumerate", help="list a point set")
    p.add_argument("set_name", choices=SETS)
    _common(p, suppress=True)

    p = sub.add_parser("poly", help="emit Q0 or Q1")
    p.add_argument("which", choices=["Q0", "Q1"])
    p.add_argument("--verify", action="store_true", help="compare the zero set with T0/T1")
    _common(p, suppress=True)

    p = sub.add_parser("solve", help="roots of X^(q+1) + X + a")
    p.add_argument("a_hex")
    _common(p, suppress=True)

    p = sub.add_parser("verify", help="run exhaustive checks")
    p.add_argument("check", help="check name or 'all'; one of: " + ", ".join(verify.CHECKS))
    p.add_argument("--timing", action="store_true", help="fill elapsed_ms (output is then not reproducible)")
    _common(p, suppress=True)
    return parser


def _context(args):
    modulus = None
    if args.modulus is not None:
        try:
            modulus = int(args.modulus, 16)
        except ValueError:
            raise UnsupportedSize(f"malformed modulus {args.modulus!r}") from None
    return context_for_q(args.q, modulus)


def cmd_info(ctx, args):
    info = {
        "q": ctx.q,
        "modulus": ctx.modulus_hex,
        "m": ctx.m,
        "generator": ctx.to_hex(ctx.generator),
        "order_factorization": list(ctx.order_factorization),
        "P": geo.point_count(ctx),
        "S": ctx.q + 1,
        "O": ctx.q**2 + 1,
    }
    if ctx.m % 2:
        s, t = geo.s_and_t(ctx)
        info.update({"sqrt_2q": geo.sqrt_2q(ctx), "s": s, "t": t, "Os": s, "Ot": t})
    return info, 0


def cmd_enumerate(ctx, args):
    name = args.set_name
    if name in ("T0", "T1", "elliptic"):
        kind = {"T0": "tits0", "T1": "tits1", "elliptic": "elliptic"}[name]
        return ov.ovoid_for(ctx, kind).to_json(ctx), 0
    listing = geo.subgroup_listing(ctx, name)
    listing["members"] = [ctx.to_hex(x) for x in sorted(geo.enumerate_subgroup(ctx, name))]
    return listing, 0


def cmd_poly(ctx, args):
    poly = ov.poly_Q0(ctx) if args.which == "Q0" else ov.poly_Q1(ctx)
    out = poly.to_json(ctx, args.which)
    status = 0
    if args.verify:
        report = verify.run_check(ctx, "thm45-Q0" if args.which == "Q0" else "thm47-Q1", budget=args.budget)
        out["verified"] = report.passed
        status = 0 if report.passed else 1
    return out, status


def cmd_solve(ctx, args):
    a = ctx.from_hex(args.a_hex)
    fast = geo.solve_projective_fast(ctx, a)
    roots = fast if fast is not None else geo.projective_roots_bruteforce(ctx, a)
    return {
        "q": ctx.q,
        "modulus": ctx.modulus_hex,
        "a": ctx.to_hex(a),
        "fast_path": fast is not None,
        "roots": [ctx.to_hex(x) for x in roots],
    }, 0


def cmd_verify(ctx, args):
    if args.check == "all":
        reports = verify.cross_check_all(ctx, budget=args.budget, threads=args.threads)
    else:
        reports = [verify.run_check(ctx, args.check, budget=args.budget, threads=args.threads)]
    status = 0 if all(r.passed for r in reports) else 1
    return [r.to_json(timing=args.timing) for r in reports], status


COMMANDS = {"info": cmd_info, "enumerate": cmd_enumerate, "poly": cmd_poly, "solve": cmd_solve, "verify": cmd_verify}


def _render_text(command, result) -> str:
    if command == "verify":
        lines = []
        for r in result:
            state = "SKIP" if r["skipped"] else "PASS" if r["passed"] else "FAIL"
            extra = " (sampled)" if r["sampled"] else ""
            lines.append(f"{state}  {r['check']:<22} q={r['q']} cases={r['total_cases']}{extra}")
            lines.extend(f"      {c}" for c in r["counterexamples"])
        return "\n".join(lines) + "\n"
    if command == "poly":
        terms = " + ".join("1" if e == 0 else f"x^{e}" for e in result["exponents"])
        tail = f"  [verified: {result['verified']}]" if "verified" in result else ""
        return f"{result['which']}(x) = {terms}{tail}\n"
    lines = []
    for k, v in result.items():
        if isinstance(v, list) and len(v) > 8:
            v = f"{len(v)} entries: " + " ".join(map(str, v))
        lines.append(f"{k}: {v}")
    return "\n".join(lines) + "\n"


def _render_json(command, result) -> str:
    if command == "verify":
        return "".join(json.dumps(r, sort_keys=True) + "\n" for r in result)
    return json.dumps(result, sort_keys=True) + "\n"


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads is None:
        args.threads = int(os.environ.get(THREADS_ENV, "1"))
    try:
        ctx = _context(args)
        result, status = COMMANDS[args.command](ctx, args)
    except CyclicPGError as exc:
        print(f"cyclicpg: error: {exc}", file=sys.stderr)
        return 2
    text = _render_json(args.command, result) if args.format == "json" else _render_text(args.command, result)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
