"""``refined-bohr`` command line.

Exit codes: 0 success, 1 inequality failure or no sharpness witness,
2 usage error, 3 radius solver error.  JSON goes to stdout; a one-line echo
of the command with every default filled in goes to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from typing import Optional, Sequence

from . import certify, radii, schur, verify
from .errors import DomainError, MultipleRoots, NoRootInUnitInterval, NoWitnessFound
from .radii import RadiusQuery, Theorem

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_SOLVER = 0, 1, 2, 3
N_COEFFS = 16


class UsageError(Exception):
    pass


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, allow_nan=False)


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _echo(name: str, **fields):
    parts = [name] + [f"{k}={v}" for k, v in fields.items()]
    print("# refined-bohr " + " ".join(parts), file=sys.stderr)


def _theorem(text: str) -> Theorem:
    try:
        return Theorem.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _query(args, theorem: Optional[Theorem] = None, with_a0: bool = True) -> RadiusQuery:
    th = theorem or _theorem(args.theorem)
    q = RadiusQuery(th, N=args.n, p=args.p, m=args.m, a0=getattr(args, "a0", None) if with_a0 else None)
    try:
        q.check(require_a0=with_a0)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return q


def _float_list(text: str) -> list[float]:
    try:
        values = [float(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected numbers, got {text!r}") from None
    if not values:
        raise argparse.ArgumentTypeError("empty list")
    return values


def _order(args) -> int:
    order = args.order if args.order is not None else verify.default_order()
    if order < 1:
        raise UsageError("--order must be positive")
    return order


# --- radius ---------------------------------------------------------------------------


def cmd_radius(args) -> int:
    q = _query(args)
    res = radii.solve(q)
    _echo("radius", theorem=q.theorem.value, **q.params(), scan_step=radii.SCAN_STEP)
    record = {
        "theorem": q.theorem.value,
        "params": q.params(),
        "radius": res.radius,
        "residual": res.residual,
        "root_count": res.root_count,
        "method": res.method,
    }
    if res.note:
        record["note"] = res.note
    if args.format == "csv":
        out = io.StringIO()
        w = csv.writer(out)
        w.writerow(["radius", "residual", "root_count"])
        w.writerow([_fmt(res.radius), _fmt(res.residual), res.root_count])
        sys.stdout.write(out.getvalue())
    else:
        print(_dumps(record))
    return EXIT_OK


# --- verify -----------------------------------------------------------------------------


def cmd_verify(args) -> int:
    order = _order(args)
    if args.trials < 1:
        raise UsageError("--trials must be >= 1")
    functions = None
    if args.replay:
        try:
            functions = [schur.replay(args.replay, order)]
        except ValueError as exc:
            raise UsageError(f"bad --replay recipe: {exc}") from None
    if args.theorem.strip().lower() == "lemmas":
        if args.edge or args.r is not None:
            raise UsageError("--edge and --r do not apply to lemmas")
        report = verify.run_lemmas(args.trials, args.seed, order, functions=functions)
    else:
        q = _query(args, with_a0=False)
        if args.r is not None and not 0.0 <= args.r < 1.0:
            raise UsageError("--r must lie in [0, 1)")
        report = verify.run(q, args.trials, args.seed, order, edge=args.edge, functions=functions, r=args.r)
    _echo(
        "verify", theorem=report.theorem_id, trials=args.trials, seed=args.seed, order=order,
        edge=args.edge, n_theta=verify.N_THETA, slack=verify.SLACK, elapsed_ms=report.elapsed_ms,
    )
    print(report.to_json(timing=args.timing))
    return EXIT_OK if report.passed else EXIT_FAIL


# --- sharpness -------------------------------------------------------------------------


def cmd_sharpness(args) -> int:
    q = _query(args, with_a0=False)
    if q.theorem not in certify.SUPPORTED:
        raise UsageError(f"{q.theorem.value} has no sharpness claim to certify")
    _echo("sharpness", theorem=q.theorem.value, a_grid=args.a_grid, eps_grid=args.eps_grid, strict=certify.STRICT)
    try:
        cert = certify.certify_sharpness(q, args.a_grid, args.eps_grid)
    except NoWitnessFound as exc:
        print(_dumps({"theorem": q.theorem.value, "params": q.params(), "valid": False,
                      "error": str(exc), "scanned": exc.scanned}))
        return EXIT_FAIL
    record = cert.to_dict()
    if q.theorem in certify.WINDOW_PROBES:
        r, a = certify.WINDOW_PROBES[q.theorem]
        w = certify.window_witness(q.theorem, r, a)
        record["window"] = {"threshold_a": certify.threshold_a(q.theorem, r), **w.to_dict()}
    print(_dumps(record))
    return EXIT_OK


# --- table ---------------------------------------------------------------------------------

SQRT5 = math.sqrt(5.0)


def _comparisons(q: RadiusQuery) -> dict:
    """Paired bounds printed next to a swept radius."""
    th, a = q.theorem, q.a0
    if th == Theorem.THM2:
        return {"sqrt5_minus_2": SQRT5 - 2.0}
    if th == Theorem.THM2_SQ:
        return {"one_third": 1.0 / 3.0, "inv_two_plus_a0": 1.0 / (2.0 + a)}
    if th == Theorem.THM3:
        return {"cor1a_bound": (2.0 + a) ** (-1.0 / q.p)}
    if th == Theorem.COR2A:
        return {"three_fifths_root": 0.6 ** (1.0 / q.p)}
    if th == Theorem.THM4_SECOND:
        return {"one_third": 1.0 / 3.0}
    if th in (Theorem.THM1_R, Theorem.THM_C_R):
        return {"rsq_radius": radii.radius(Theorem.THM1_RSQ, N=q.N)}
    return {}


def _sweep_values(param: str, lo: float, hi: float, step: float) -> list:
    if step <= 0 or hi < lo:
        raise UsageError("need --step > 0 and --to >= --from")
    count = int(math.floor((hi - lo) / step + 1e-9)) + 1
    if param in ("n", "p"):
        if any(float(v) != int(v) for v in (lo, hi, step)):
            raise UsageError(f"--param {param} sweeps integers")
        return [int(lo) + k * int(step) for k in range(count)]
    return [round(lo + k * step, 12) for k in range(count)]


def cmd_table(args) -> int:
    th = _theorem(args.sweep)
    values = _sweep_values(args.param, args.start, args.stop, args.step)
    rows = []
    for v in values:
        kw = {"N": args.n, "p": args.p, "m": args.m, "a0": args.a0 if th in radii.A0_DEPENDENT else None}
        key = {"a0": "a0", "n": "N", "p": "p"}[args.param]
        kw[key] = v
        q = RadiusQuery(th, **kw)
        try:
            q.check()
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        res = radii.solve(q)
        rows.append((v, res, _comparisons(q)))
    extra_cols = list(rows[0][2]) if rows else []
    _echo("table", sweep=th.value, param=args.param, start=args.start, stop=args.stop, step=args.step)
    if args.format == "json":
        print(_dumps([{"param": v, "radius": res.radius, "residual": res.residual, **cmp} for v, res, cmp in rows]))
        return EXIT_OK
    out = io.StringIO()
    w = csv.writer(out)
    w.writerow(["param", "radius", "residual"] + extra_cols)
    for v, res, cmp in rows:
        p = str(v) if isinstance(v, int) else _fmt(v)
        w.writerow([p, _fmt(res.radius), _fmt(res.residual)] + [_fmt(cmp[c]) for c in extra_cols])
    sys.stdout.write(out.getvalue())
    return EXIT_OK


# --- sample ---------------------------------------------------------------------------------

PROFILE_ALIASES = {"convex": "convex-combo"}


def cmd_sample(args) -> int:
    order = _order(args)
    profile = PROFILE_ALIASES.get(args.profile, args.profile)
    f = schur.sample(args.seed, profile, order, args.index)
    _echo("sample", seed=args.seed, profile=profile, order=order, index=args.index)
    head = f.coeffs[:N_COEFFS]
    print(_dumps({
        "seed": args.seed,
        "profile": profile,
        "order": order,
        "index": args.index,
        "recipe": f.text(),
        "coeffs": [[float(c.real), float(c.imag)] for c in head],
    }))
    return EXIT_OK


# --- evaluate --------------------------------------------------------------------------------


def cmd_evaluate(args) -> int:
    order = _order(args)
    q = _query(args, with_a0=False)
    if not 0.0 <= args.r < 1.0:
        raise UsageError("--r must lie in [0, 1)")
    try:
        f = schur.replay(args.recipe, order)
    except ValueError as exc:
        raise UsageError(f"bad --recipe: {exc}") from None
    value = verify.evaluate(q, f, args.r)
    radius = radii.solve(verify.query_for(q, f)).radius
    _echo("evaluate", theorem=q.theorem.value, r=args.r, order=order, n_theta=verify.N_THETA)
    print(_dumps({"theorem": q.theorem.value, "params": q.params(), "recipe": f.text(), "r": args.r,
                  "radius": radius, **value.to_dict()}))
    return EXIT_OK if value.upper <= 1.0 + verify.SLACK or args.r > radius else EXIT_FAIL


# --- parser -------------------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _theorem_params(p: argparse.ArgumentParser):
    p.add_argument("--theorem", required=True, help="variant id, e.g. thm1-r, thm7-j")
    p.add_argument("--n", type=int, help="N for Rogosinski variants")
    p.add_argument("--p", type=int, help="symmetry order p")
    p.add_argument("--m", type=int, help="shift m, 0 <= m <= p")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="refined-bohr", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("radius", help="radius constant for one variant")
    _theorem_params(p)
    p.add_argument("--a0", type=float, help="|a0| (or |a_m|, |a_p|) where the radius depends on it")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_radius)

    p = sub.add_parser("verify", help="seeded Monte Carlo campaign; theorem 'lemmas' runs the lemma oracles")
    _theorem_params(p)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--order", type=int, default=None, help="truncation order K (default $BOHR_DEFAULT_ORDER or 256)")
    p.add_argument("--edge", action="store_true", help="pin r to the radius")
    p.add_argument("--replay", help="recipe text to test instead of sampling")
    p.add_argument("--r", type=float, help="fixed r for every trial")
    p.add_argument("--timing", action="store_true", help="record wall time in elapsed_ms (otherwise 0)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sharpness", help="extremal-family witnesses past the radius")
    _theorem_params(p)
    p.add_argument("--a-grid", type=_float_list, default=list(certify.DEFAULT_A_GRID))
    p.add_argument("--eps-grid", type=_float_list, default=list(certify.DEFAULT_EPS_GRID))
    p.set_defaults(func=cmd_sharpness)

    p = sub.add_parser("table", help="sweep a radius over one parameter")
    p.add_argument("--sweep", required=True, help="variant id")
    p.add_argument("--param", required=True, choices=("a0", "n", "p"))
    p.add_argument("--from", dest="start", type=float, required=True)
    p.add_argument("--to", dest="stop", type=float, required=True)
    p.add_argument("--step", type=float, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--a0", type=float, help="fixed |a0| when sweeping n or p")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("sample", help="draw one Schur function")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--profile", choices=schur.PROFILES + tuple(PROFILE_ALIASES), default="blaschke")
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--index", type=int, default=0)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("evaluate", help="one functional value for a recipe at radius r")
    _theorem_params(p)
    p.add_argument("--recipe", required=True)
    p.add_argument("--r", type=float, required=True)
    p.add_argument("--order", type=int, default=None)
    p.set_defaults(func=cmd_evaluate)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"refined-bohr: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NoRootInUnitInterval, MultipleRoots) as exc:
        print(f"refined-bohr: solver error: {exc}", file=sys.stderr)
        return EXIT_SOLVER
    except DomainError as exc:
        print(f"refined-bohr: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:  # e.g. a bad BOHR_DEFAULT_ORDER
        print(f"refined-bohr: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
