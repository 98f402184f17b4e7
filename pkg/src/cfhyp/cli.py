"""``cfhyp`` command line: evaluate, verify identities, solve, Laplace transforms.

Every command prints one JSON report ``{command, inputs, results, status}``
with sorted keys.  Exit codes: 0 success, 1 verification failure, 2 invalid
input or domain error (the report then carries an ``error`` object).

The environment variable ``CFHYP_MAX_TERMS`` overrides the series term cap.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, field

from . import analytic, apps, cfghe, relations
from .errors import CfhypError
from .hypercore import DEFAULT_MAX_TERMS, DEFAULT_TOL, Params, Region, domain_check, eval_2f1

EXIT_OK, EXIT_FAIL, EXIT_INVALID = 0, 1, 2


class UsageError(Exception):
    """Bad command-line arguments."""


@dataclass
class Report:
    command: str
    inputs: dict
    results: object = None
    status: str = "ok"
    error: dict | None = None

    def as_dict(self) -> dict[str, object]:
        out = {"command": self.command, "inputs": self.inputs, "results": self.results, "status": self.status}
        if self.error is not None:
            out["error"] = self.error
        return out

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True, indent=2)


@dataclass
class Outcome:
    report: Report
    exit_code: int = EXIT_OK
    text: str | None = field(default=None)


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


def _max_terms() -> int:
    raw = os.environ.get("CFHYP_MAX_TERMS")
    if raw is None:
        return DEFAULT_MAX_TERMS
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"CFHYP_MAX_TERMS must be a positive integer, got {raw!r}") from None
    if value < 1:
        raise UsageError(f"CFHYP_MAX_TERMS must be a positive integer, got {raw!r}")
    return value


def _inputs(args: argparse.Namespace) -> dict:
    return {k: v for k, v in vars(args).items() if k != "command"}


def _params(args: argparse.Namespace) -> Params:
    missing = [k for k in ("mu", "nu", "c", "alpha") if getattr(args, k) is None]
    if missing:
        raise UsageError("missing " + ", ".join("--" + k for k in missing))
    return Params(args.mu, args.nu, args.c, args.alpha)


def cmd_eval(args: argparse.Namespace) -> Outcome:
    p = _params(args)
    if args.x is None:
        raise UsageError("missing --x")
    if args.method == "integral":
        r = analytic.euler_integral_eval(p, args.x)
    else:
        r = eval_2f1(p, args.x, tol=args.tol, max_terms=_max_terms())
    results = {
        "value": r.value,
        "abs_err_est": r.abs_err_est,
        "terms_used": r.terms_used,
        "method": args.method,
    }
    return Outcome(Report("eval", _inputs(args), results))


def cmd_verify(args: argparse.Namespace) -> Outcome:
    ids = relations.RELATION_IDS if args.relation == "all" else (args.relation,)
    for rid in ids:
        if rid not in relations.CATALOG:
            raise UsageError(f"unknown relation id {rid!r}")
    trunc = relations.TruncPolicy(max_terms=_max_terms())
    reports = [relations.verify_relation(rid, args.trials, args.seed, args.tol, trunc) for rid in ids]
    ok = all(r.passed for r in reports)
    report = Report("verify", _inputs(args), [r.as_dict() for r in reports], "ok" if ok else "fail")
    text = None
    if args.csv:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["relation_id", "trials", "max_rel_residual", "passed", "seed"])
        for r in reports:
            writer.writerow([r.id, r.trials, repr(r.max_rel_residual), str(r.passed).lower(), r.seed])
        text = buf.getvalue().rstrip("\n")
    return Outcome(report, EXIT_OK if ok else EXIT_FAIL, text)


def _sample_points(region: Region, alpha: float) -> list[float]:
    if region is Region.ORIGIN:
        us = (0.1, 0.3, 0.5)
    elif region is Region.UNIT:
        us = (0.5, 0.7, 0.9)
    else:
        us = (2.0, 4.0, 10.0)
    return [u ** (1.0 / alpha) for u in us]


def cmd_solve(args: argparse.Namespace) -> Outcome:
    if args.equation is not None:
        eq = apps.NamedEquation(args.equation, args.alpha, args.n)
        red = apps.reduce_to_cfghe(eq)
        results = red.as_dict()
        diagnostics = []
        xs = (0.1, 0.3, 0.5) if eq.name is apps.Family.EXP_EXAMPLE else (0.2, 0.5, 0.9)
        for i, b in enumerate(red.solution_pair):
            for x in xs:
                try:
                    r = apps.named_residual(eq, b, x)
                    diagnostics.append({"branch": i + 1, "x": x, "rel_residual": r.relative})
                except CfhypError as exc:
                    # non-terminating series at T > 1 have no sum
                    diagnostics.append({"branch": i + 1, "x": x, "skipped": str(exc)})
        results["residuals"] = diagnostics
        return Outcome(Report("solve", _inputs(args), results))

    p = _params(args)
    builders = {"0": cfghe.solutions_at_zero, "1": cfghe.solutions_at_one, "inf": cfghe.solutions_at_infinity}
    pair = builders[args.point](p)
    branches = []
    for b in pair:
        entry = b.as_dict()
        entry["residuals"] = [
            {"x": x, "rel_residual": cfghe.cfghe_residual(b, p, x).relative}
            for x in _sample_points(b.region, p.alpha)
            if domain_check(p, x, b.region)
        ]
        branches.append(entry)
    return Outcome(Report("solve", _inputs(args), {"point": args.point, "branches": branches}))


_TARGETS = {
    "one": analytic.Target.ONE,
    "power": analytic.Target.POWER_P,
    "exp": analytic.Target.EXP_K,
    "2f1": analytic.Target.CFGHF,
    "tsin": analytic.Target.T_POW_N_SIN_A,
    "shifted": analytic.Target.SHIFTED_EXP_ARG,
}


def cmd_laplace(args: argparse.Namespace) -> Outcome:
    target = _TARGETS[args.target]
    extras = {k: getattr(args, k) for k in ("p", "k", "a", "n", "x") if getattr(args, k) is not None}
    params = None
    if target in (analytic.Target.CFGHF, analytic.Target.SHIFTED_EXP_ARG):
        if target is analytic.Target.SHIFTED_EXP_ARG and args.c is None:
            args.c = 1.0
        params = _params(args)
    q = analytic.LaplaceQuery(target, args.alpha, args.s, args.gamma, extras, params)
    value = analytic.laplace_closed_target(q)
    results: dict[str, object] = {"value": value}
    if args.check:
        numeric = analytic.laplace_numeric_target(q)
        results["numeric"] = numeric
        results["discrepancy"] = abs(numeric - value)
    return Outcome(Report("laplace", _inputs(args), results))


def cmd_catalog(args: argparse.Namespace) -> Outcome:
    return Outcome(Report("catalog", _inputs(args), relations.catalog_json()))


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cfhyp", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def param_flags(sp: argparse.ArgumentParser) -> None:
        for name in ("mu", "nu", "c", "alpha"):
            sp.add_argument(f"--{name}", type=float)

    sp = sub.add_parser("eval", help="evaluate F(mu, nu; c; x^alpha)")
    param_flags(sp)
    sp.add_argument("--x", type=float)
    sp.add_argument("--method", choices=["series", "integral"], default="series")
    sp.add_argument("--tol", type=float, default=DEFAULT_TOL)
    sp.set_defaults(func=cmd_eval)

    sp = sub.add_parser("verify", help="verify catalog identities on random draws")
    sp.add_argument("--relation", default="all")
    sp.add_argument("--trials", type=int, default=relations.DEFAULT_TRIALS)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--tol", type=float, default=relations.DEFAULT_VERIFY_TOL)
    sp.add_argument("--csv", action="store_true", help="print a CSV table instead of JSON")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("solve", help="solution branches or a named-equation reduction")
    param_flags(sp)
    sp.set_defaults(alpha=1.0)
    sp.add_argument("--point", choices=["0", "1", "inf"], default="0")
    sp.add_argument("--equation", choices=[f.value for f in apps.Family])
    sp.add_argument("--n", type=int)
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("laplace", help="conformable Laplace transforms")
    sp.add_argument("--target", choices=sorted(_TARGETS), required=True)
    param_flags(sp)
    sp.add_argument("--s", type=float, required=True)
    sp.add_argument("--gamma", type=float)
    for name, kind in (("p", float), ("k", float), ("a", float), ("n", int), ("x", float)):
        sp.add_argument(f"--{name}", type=kind)
    sp.add_argument("--check", action="store_true", help="also compute the numeric transform")
    sp.set_defaults(func=cmd_laplace)

    sp = sub.add_parser("catalog", help="list the identity catalog")
    sp.set_defaults(func=cmd_catalog)
    return parser


def run(argv: list[str] | None = None) -> Outcome:
    argv = list(sys.argv[1:] if argv is None else argv)
    command = argv[0] if argv else ""
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "alpha", None) is None and args.command == "laplace":
            raise UsageError("missing --alpha")
        func = args.func
        del args.func
        return func(args)
    except (UsageError, CfhypError, ValueError, ArithmeticError) as exc:
        report = Report(command, {"argv": argv}, None, "error", {"type": type(exc).__name__, "message": str(exc)})
        return Outcome(report, EXIT_INVALID)


def main(argv: list[str] | None = None) -> int:
    outcome = run(argv)
    print(outcome.text if outcome.text is not None else outcome.report.to_json())
    return outcome.exit_code


if __name__ == "__main__":
    sys.exit(main())
