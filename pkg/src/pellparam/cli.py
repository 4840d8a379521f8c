"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 domain error (perfect squares,
failed verification, infeasible degree requests), 3 internal invariant
violation.  JSON output is deterministic: the same invocation always
produces byte-identical bytes.  Components that can exceed 64 bits
(solution coordinates, polynomial coefficients, unit coordinates) are
serialized as strings; small quantities (n, s, degrees, indices) as
numbers.
"""

from __future__ import annotations

import argparse
import contextlib
import io
import json
import os
import sys
from dataclasses import dataclass

from .analysis import SurveyRow, squarefree_survey
from .chebyshev import cheb_t, cheb_u
from .parametric import (
    Infeasible,
    ParametricSolution,
    degree1_family,
    degree2_family,
    general_family,
    verify,
)
from .poly import Poly
from .quadfield import (
    PellSolution,
    fundamental_solution,
    fundamental_unit_norm1,
    unit_group_index,
)

_EPS = {"+1": 1, "-1": -1}


@dataclass(frozen=True)
class CommandOutcome:
    exit_code: int
    stdout_payload: str
    stderr_diagnostics: str


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.format_usage()}error: {message}")


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _want_json(args) -> bool:
    return getattr(args, "json", False) or os.environ.get("PELLPARAM_FORMAT") == "json"


def _solution_from_args(args) -> PellSolution:
    if (args.a is None) != (args.b is None):
        raise _UsageError("error: --a and --b must be given together")
    if args.a is None:
        return fundamental_solution(args.n)
    return PellSolution(args.n, args.a, args.b)


def _param_json(ps: ParametricSolution, feasible) -> str:
    return _dump(
        {
            "P": ps.P.to_json(),
            "Q": ps.Q.to_json(),
            "D": ps.D.to_json(),
            "degree": ps.degree,
            "base": {
                "n": ps.base.n,
                "a": str(ps.base.a),
                "b": str(ps.base.b),
            },
            "feasible": list(feasible),
        }
    )


def _cmd_cheb(args) -> CommandOutcome:
    poly = cheb_t(args.d) if args.kind == "T" else cheb_u(args.d)
    if _want_json(args):
        return CommandOutcome(0, _dump(poly.to_json()), "")
    lines = [f"{args.kind}_{args.d} = {poly}", _dump(poly.to_json())]
    return CommandOutcome(0, "\n".join(lines), "")


def _cmd_solve(args) -> CommandOutcome:
    sol = fundamental_solution(args.n)
    if _want_json(args):
        payload = _dump({"n": sol.n, "a": str(sol.a), "b": str(sol.b)})
    else:
        payload = f"a={sol.a} b={sol.b}"
    return CommandOutcome(0, payload, "")


def _cmd_unit(args) -> CommandOutcome:
    g = fundamental_unit_norm1(args.s)
    half = not g.is_integral
    if _want_json(args):
        payload = _dump(
            {"s": g.s, "p": str(g.p), "q": str(g.q), "half_integer": half}
        )
    else:
        payload = f"p={g.p} q={g.q} half_integer={'true' if half else 'false'}"
    return CommandOutcome(0, payload, "")


def _cmd_degrees(args) -> CommandOutcome:
    sol = _solution_from_args(args)
    report = unit_group_index(sol)
    g = report.generator
    if _want_json(args):
        payload = _dump(
            {
                "n": sol.n,
                "a": str(sol.a),
                "b": str(sol.b),
                "generator": {"p": str(g.p), "q": str(g.q), "s": g.s},
                "index": report.index,
                "feasible": list(report.feasible),
            }
        )
    else:
        payload = "\n".join(
            [
                f"n={sol.n} a={sol.a} b={sol.b}",
                f"generator: p={g.p} q={g.q} over sqrt({g.s})",
                f"index: {report.index}",
                f"feasible degrees: {' '.join(str(d) for d in report.feasible)}",
            ]
        )
    return CommandOutcome(0, payload, "")


def _cmd_param(args) -> CommandOutcome:
    sol = _solution_from_args(args)
    if args.degree > 2 and (args.m is not None or args.eps is not None):
        raise _UsageError("error: --m and --eps apply only to degrees 1 and 2")
    m = 1 if args.m is None else args.m
    feasible = unit_group_index(sol).feasible
    if args.degree == 1:
        ps = degree1_family(sol, m)
    elif args.degree == 2:
        eps = _EPS[args.eps] if args.eps is not None else None
        ps = degree2_family(sol, m, eps)
    else:
        result = general_family(sol, args.degree)
        if isinstance(result, Infeasible):
            payload = _dump({"infeasible": True, "feasible": list(result.feasible)})
            diag = (
                f"degree {args.degree} is infeasible for (n={sol.n}, a={sol.a}, "
                f"b={sol.b}); feasible degrees: {list(result.feasible)}"
            )
            return CommandOutcome(2, payload, diag)
        ps = result
    if _want_json(args):
        return CommandOutcome(0, _param_json(ps, feasible), "")
    lines = [
        f"P = {ps.P}",
        f"Q = {ps.Q}",
        f"D = {ps.D}",
        f"degree {ps.degree}, base (n={sol.n}, a={sol.a}, b={sol.b})",
    ]
    return CommandOutcome(0, "\n".join(lines), "")


def _load_triple(text: str) -> tuple[Poly, Poly, Poly, PellSolution]:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise _UsageError(f"error: input is not valid JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise _UsageError("error: expected a JSON object with P, Q, D, base")
    try:
        triple = tuple(Poly.from_json(obj[key]) for key in ("P", "Q", "D"))
        base = obj["base"]
        sol = PellSolution(int(base["n"]), int(base["a"]), int(base["b"]))
    except KeyError as exc:
        raise _UsageError(f"error: missing field {exc} in input JSON") from exc
    return (*triple, sol)


def _cmd_verify(args) -> CommandOutcome:
    if args.source == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.source, encoding="utf-8") as handle:
                text = handle.read()
        except OSError as exc:
            raise _UsageError(f"error: cannot read {args.source}: {exc}") from exc
    p, q, d, sol = _load_triple(text)
    report = verify(p, q, d, sol)
    if os.environ.get("PELLPARAM_FORMAT") == "json":
        payload = _dump(
            {"checks": dict(report.checks()), "pass": report.passed}
        )
    else:
        lines = [
            f"{name}: {'pass' if ok else 'FAIL'}" for name, ok in report.checks()
        ]
        lines.append(f"overall: {'pass' if report.passed else 'FAIL'}")
        payload = "\n".join(lines)
    return CommandOutcome(0 if report.passed else 2, payload, "")


def _survey_csv(rows: list[SurveyRow]) -> str:
    lines = ["n,mod4,a,b,index,feasible,bound_ok"]
    for r in rows:
        feas = ";".join(str(d) for d in r.feasible)
        ok = "true" if r.bound_ok else "false"
        lines.append(
            f"{r.n},{r.residue_mod_4},{r.fundamental.a},{r.fundamental.b},"
            f"{r.index},{feas},{ok}"
        )
    return "\n".join(lines)


def _survey_json(rows: list[SurveyRow]) -> str:
    return _dump(
        [
            {
                "n": r.n,
                "mod4": r.residue_mod_4,
                "a": str(r.fundamental.a),
                "b": str(r.fundamental.b),
                "index": r.index,
                "feasible": list(r.feasible),
                "bound_ok": r.bound_ok,
            }
            for r in rows
        ]
    )


def _survey_table(rows: list[SurveyRow]) -> str:
    header = ("n", "mod4", "a", "b", "index", "feasible", "bound_ok")
    body = [
        (
            str(r.n),
            str(r.residue_mod_4),
            str(r.fundamental.a),
            str(r.fundamental.b),
            str(r.index),
            ";".join(str(d) for d in r.feasible),
            "yes" if r.bound_ok else "NO",
        )
        for r in rows
    ]
    widths = [
        max(len(header[i]), *(len(row[i]) for row in body)) if body else len(header[i])
        for i in range(len(header))
    ]
    fmt = "  ".join(f"{{:>{w}}}" for w in widths)
    return "\n".join([fmt.format(*header)] + [fmt.format(*row) for row in body])


def _cmd_survey(args) -> CommandOutcome:
    fmt = args.format
    if fmt is None:
        env = os.environ.get("PELLPARAM_FORMAT")
        fmt = env if env in ("json", "csv", "table") else "table"
    rows = squarefree_survey(args.max_n)
    payload = {"json": _survey_json, "csv": _survey_csv, "table": _survey_table}[fmt](
        rows
    )
    diag = ""
    if args.plot_dir is not None:
        from .plots import render_survey_figures

        paths = render_survey_figures(rows, args.plot_dir)
        diag = "wrote " + ", ".join(str(p) for p in paths)
    return CommandOutcome(0, payload, diag)


def build_parser() -> _Parser:
    parser = _Parser(
        prog="pellparam",
        description="Exact constructions for polynomial Pell equations "
        "P^2 - D*Q^2 = 1 with quadratic D.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cheb", help="print a Chebyshev polynomial")
    p.add_argument("kind", choices=("T", "U"))
    p.add_argument("d", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_cheb)

    p = sub.add_parser("solve", help="fundamental solution of x^2 - n*y^2 = 1")
    p.add_argument("n", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_solve)

    p = sub.add_parser("unit", help="norm-1 unit group generator for Q(sqrt(s))")
    p.add_argument("s", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_unit)

    p = sub.add_parser("degrees", help="unit-group index and feasible degrees")
    p.add_argument("n", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_degrees)

    p = sub.add_parser("param", help="construct a parametric solution")
    p.add_argument("n", type=int)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--eps", choices=tuple(_EPS))
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_param)

    p = sub.add_parser("verify", help="verify a triple from its JSON form")
    p.add_argument(
        "--json",
        dest="source",
        metavar="FILE",
        required=True,
        help="path to the JSON document, or - for stdin",
    )
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("survey", help="survey square-free n up to a bound")
    p.add_argument("--max-n", dest="max_n", type=int, required=True)
    p.add_argument("--format", choices=("json", "csv", "table"))
    p.add_argument("--plot-dir", help="also render figures into this directory")
    p.set_defaults(handler=_cmd_survey)

    return parser


def run(argv: list[str]) -> CommandOutcome:
    parser = build_parser()
    helptext = io.StringIO()
    try:
        with contextlib.redirect_stdout(helptext):
            args = parser.parse_args(argv)
    except _UsageError as exc:
        return CommandOutcome(1, "", str(exc))
    except SystemExit as exc:  # --help
        code = 0 if exc.code in (0, None) else 1
        return CommandOutcome(code, helptext.getvalue().rstrip("\n"), "")
    try:
        return args.handler(args)
    except _UsageError as exc:
        return CommandOutcome(1, "", str(exc))
    except ValueError as exc:
        return CommandOutcome(2, "", str(exc))
    except RuntimeError as exc:
        return CommandOutcome(3, "", f"internal invariant violation: {exc}")


def main() -> None:
    outcome = run(sys.argv[1:])
    if outcome.stdout_payload:
        print(outcome.stdout_payload)
    if outcome.stderr_diagnostics:
        print(outcome.stderr_diagnostics, file=sys.stderr)
    sys.exit(outcome.exit_code)


if __name__ == "__main__":
    main()
