"""Command-line front end: ``abelinv <command> ...``.

Every command prints one JSON report on stdout. Exit status is 0 when all
checks pass, 1 when a check fails and 2 for usage or input errors
(diagnostics go to stderr).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from typing import Any, Optional, Sequence

from . import checks
from .canonical import ModuliMap, canonical_related, canonicalize, find_moduli, moduli_apply
from .cartan import (
    ZeroF,
    duality_matrix,
    invariant_I,
    literal_invariant_I,
    structure_residuals,
)
from .checks import CheckResult, jet_check
from .equation import (
    ChartedEquation,
    DegenerateLeadingCoefficient,
    InvalidEquation,
    InvalidMap,
    ode_residual,
    pull_back,
    reduce_second_kind,
    second_kind_field,
    series_solve,
    solve_series,
    transform,
)
from .invariants import connection, s_hierarchy
from .rng import trial_rng
from .serialization import (
    ParseError,
    equation_to_json,
    jet_document,
    jet_report,
    jet_to_json,
    map_to_json,
    parse_cubic,
    parse_equation,
    parse_jet,
    parse_map,
    parse_points,
    parse_rational,
    rational_to_str,
)
from .series import Jet, JetError


class UsageError(Exception):
    pass


def _digest(obj: Any) -> str:
    blob = json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=True)
    return hashlib.sha256(blob.encode("utf-8")).hexdigest()


def _check_json(r: CheckResult) -> dict:
    out: dict[str, Any] = {"name": r.name, "pass": r.passed, "first_failing_order": r.first_failing_order}
    if r.detail:
        out["detail"] = r.detail
    return out


def _report(command: str, inputs: dict, outputs: dict, results: list[CheckResult],
            seed: Optional[int] = None) -> dict:
    return {
        "command": command,
        "inputs": inputs,
        "inputs_digest": _digest({"command": command, "inputs": inputs, "seed": seed}),
        "seed": seed,
        "outputs": outputs,
        "checks": [_check_json(r) for r in results],
        "all_passed": all(r.passed for r in results),
    }


def _eq_arg(path: str) -> ChartedEquation:
    return parse_equation(path)


def _jet_or_rational(arg: str, order: int, where: str) -> Jet:
    try:
        return Jet.constant(parse_rational(arg, where), order)
    except ParseError:
        pass
    j = parse_jet(arg)
    if j.order != order:
        raise ParseError(f"{where}: order {j.order} differs from {order}")
    return j


# commands ------------------------------------------------------------------


def cmd_invariants(args) -> dict:
    ce = _eq_arg(args.eq)
    ss = s_hierarchy(ce, args.max_n)
    outputs = {f"s{2 * n + 1}": jet_report(s) for n, s in enumerate(ss, start=1)}
    outputs["r"] = jet_report(connection(ce))
    return _report("invariants", {"eq": equation_to_json(ce), "max_n": args.max_n}, outputs,
                   checks.raise_identity(ce, args.max_n) if args.max_n >= 2 else [])


def cmd_canonical(args) -> dict:
    ce = _eq_arg(args.eq)
    rho = parse_rational(args.rho, "--rho")
    if rho == 0:
        raise ParseError("--rho: must be nonzero")
    cd = canonicalize(ce, rho)
    outputs = {
        "rho": rational_to_str(cd.rho),
        "V": jet_report(cd.V),
        "U": jet_report(cd.U),
        "M": jet_report(cd.M),
        "J": jet_report(cd.J),
        "X": jet_report(cd.X_of_x),
        "J_in_X": jet_report(cd.J_in_X),
    }
    results = checks.canonical_identities(ce, 2, rho)
    return _report("canonical", {"eq": equation_to_json(ce), "rho": rational_to_str(rho)}, outputs, results)


def cmd_transform(args) -> dict:
    ce = _eq_arg(args.eq)
    t = parse_map(args.map)
    if t.order != ce.order:
        raise ParseError(f"map order {t.order} differs from equation order {ce.order}")
    te = transform(ce, t)
    outputs = {f"gamma{i}": jet_report(g) for i, g in enumerate(te.eq.coeffs)}
    outputs["dvar"] = jet_report(te.dvar)
    outputs["jacobian"] = jet_report(pull_back(t, ce).jacobian())
    results = [checks.gamma3_law(ce, t)] + checks.tensor_law(ce, t, 1) + [checks.connection_law(ce, t)]
    return _report("transform", {"eq": equation_to_json(ce), "map": map_to_json(t)}, outputs, results)


def cmd_solve(args) -> dict:
    ce = _eq_arg(args.eq)
    y0 = parse_rational(args.y0, "--y0")
    if args.order < 0:
        raise UsageError("--order must be non-negative")
    if not ce.is_base_chart:
        raise ParseError("solve needs an equation without dvar")
    eq = ce.eq.refit(args.order)
    y = series_solve(eq, y0)
    res = ode_residual(eq, y)
    return _report("solve", {"eq": equation_to_json(ce), "y0": rational_to_str(y0), "order": args.order},
                   {"y": jet_report(y)}, [jet_check("ode_residual", res, Jet.zero(eq.order))])


def cmd_reduce2(args) -> dict:
    num = parse_cubic(args.num)
    order = num[0].order
    b0 = _jet_or_rational(args.b0, order, "--b0")
    b1 = _jet_or_rational(args.b1, order, "--b1")
    if b1.coeffs[0] == 0:
        raise ParseError("--b1: constant term must be nonzero")
    out = reduce_second_kind(b0, b1, num)
    results = []
    y0 = parse_rational(args.y0, "--y0")
    denom0 = b0.coeffs[0] + b1.coeffs[0] * y0
    if denom0 != 0:
        y = solve_series(second_kind_field(b0, b1, num), y0, order)
        z = 1 / (b0 + b1 * y)
        results.append(jet_check("transported_residual", ode_residual(out, z), Jet.zero(order)))
    outputs = {"equation": equation_to_json(out)}
    num_doc = {"order": order, **{f"c{i}": jet_to_json(c) for i, c in enumerate(num)}}
    inputs = {"b0": jet_document(b0), "b1": jet_document(b1), "num": num_doc,
              "y0": rational_to_str(y0)}
    return _report("reduce2", inputs, outputs, results)


def cmd_cartan(args) -> dict:
    ce = _eq_arg(args.eq)
    points = parse_points(args.points)
    rows = []
    results = []
    for k, p in enumerate(points):
        row: dict[str, Any] = {"point": [rational_to_str(v) for v in (p.x, p.y, p.u)],
                               "I": rational_to_str(invariant_I(ce, p)),
                               "I_literal": rational_to_str(literal_invariant_I(ce, p))}
        try:
            res = structure_residuals(ce, p)
            dual = duality_matrix(ce, p)
        except ZeroF:
            row["admissible"] = False
            rows.append(row)
            continue
        row["admissible"] = True
        row["residuals"] = [[rational_to_str(c) for c in (r.dxdy, r.dxdu, r.dydu)] for r in res]
        row["duality"] = [[rational_to_str(c) for c in line] for line in dual]
        rows.append(row)
        identity = all(dual[i][j] == (1 if i == j else 0) for i in range(3) for j in range(3))
        results.append(CheckResult(f"structure_equations[{k}]", all(r.is_zero() for r in res)))
        results.append(CheckResult(f"duality[{k}]", identity))
    return _report("cartan", {"eq": equation_to_json(ce), "points": [r["point"] for r in rows]},
                   {"points": rows}, results)


def cmd_equiv(args) -> dict:
    J1 = parse_jet(args.j1)
    J2 = parse_jet(args.j2)
    inputs: dict[str, Any] = {"j1": jet_document(J1), "j2": jet_document(J2)}
    if args.K is not None:
        m = ModuliMap(parse_rational(args.K, "--K"), parse_rational(args.h, "--h"))
        if m.K == 0:
            raise ParseError("--K: must be nonzero")
        inputs.update(K=rational_to_str(m.K), h=rational_to_str(m.h))
        image = moduli_apply(J1, m)
        related = canonical_related(J1, J2, m)
        outputs = {"image": jet_report(image), "related": related}
        return _report("equiv", inputs, outputs, [CheckResult("canonical_related", related)])
    found = find_moduli(J1, J2)
    outputs = {"moduli": None if found is None else
               {"K": rational_to_str(found.K), "h": rational_to_str(found.h)}}
    return _report("equiv", inputs, outputs, [CheckResult("find_moduli", found is not None)])


def _summarize(per_trial: list[list[CheckResult]]) -> list[CheckResult]:
    """Collapse per-trial results by check name, keeping first-appearance order."""
    names: list[str] = []
    first_fail: dict[str, tuple[int, Optional[int], str]] = {}
    for trial, results in enumerate(per_trial):
        for r in results:
            if r.name not in names:
                names.append(r.name)
            if not r.passed and r.name not in first_fail:
                first_fail[r.name] = (trial, r.first_failing_order, r.detail)
    out = []
    for name in names:
        if name in first_fail:
            trial, order, detail = first_fail[name]
            msg = f"first failure in trial {trial}" + (f": {detail}" if detail else "")
            out.append(CheckResult(name, False, order, msg))
        else:
            out.append(CheckResult(name, True))
    return out


def run_trial(eq: Optional[ChartedEquation], seed: int, trial: int, order: int, max_n: int) -> list[CheckResult]:
    """One trial of the verify suite; random data come from ``trial_rng(seed, trial)``."""
    rng = trial_rng(seed, trial)
    base = eq if eq is not None else ChartedEquation(rng.equation(order))
    n = base.order
    t1 = rng.gauge_map(n)
    t2 = rng.gauge_map(n)
    lam = rng.rational(nonzero=True)
    phi = rng.jet(n)
    y0 = rng.rational()
    results: list[CheckResult] = [checks.gamma3_law(base, t1)]
    results += checks.tensor_law(base, t1, max_n)
    results += checks.grading_laws(base, lam, max_n)
    results.append(checks.connection_law(base, t1))
    results += [checks.covariant_law(base, t1, phi, k) for k in range(-2, 5)]
    if max_n >= 2:
        results += checks.raise_identity(base, max_n)
    results += checks.canonical_identities(base, min(2, max(0, max_n - 1)))
    results += checks.absolute_invariance(base, t1)
    results += checks.group_action(base, t1, t2)
    if base.is_base_chart:
        results += checks.solution_transport(base, t1, y0)
    results.append(checks.s3_solution_agreement(base))
    return results


def cmd_verify(args) -> dict:
    if args.trials < 1:
        raise UsageError("--trials must be positive")
    if args.max_n < 1:
        raise UsageError("--max-n must be at least 1")
    eq = _eq_arg(args.eq) if args.eq else None
    per_trial = [run_trial(eq, args.seed, i, args.order, args.max_n) for i in range(args.trials)]
    summary = _summarize(per_trial)
    inputs: dict[str, Any] = {"trials": args.trials, "max_n": args.max_n}
    if eq is not None:
        inputs["eq"] = equation_to_json(eq)
    else:
        inputs["order"] = args.order
    outputs = {"trials": args.trials, "checks_run": sum(len(r) for r in per_trial)}
    return _report("verify", inputs, outputs, summary, seed=args.seed)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="abelinv", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="s3..s_{2n+1} and the connection r")
    p.add_argument("--eq", required=True)
    p.add_argument("--max-n", type=int, default=3)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("canonical", help="reduction to dY/dX = Y^3 + J")
    p.add_argument("--eq", required=True)
    p.add_argument("--rho", default="1", help="U(0), a nonzero rational")
    p.set_defaults(func=cmd_canonical)

    p = sub.add_parser("transform", help="apply a gauge map (u, nu, mu)")
    p.add_argument("--eq", required=True)
    p.add_argument("--map", required=True)
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("solve", help="Taylor solution through (0, y0)")
    p.add_argument("--eq", required=True)
    p.add_argument("--y0", required=True)
    p.add_argument("--order", type=int, required=True)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("reduce2", help="second-kind equation to first kind via z = 1/(b0 + b1 y)")
    p.add_argument("--b0", required=True, help="jet document or a rational constant")
    p.add_argument("--b1", required=True, help="jet document or a rational constant")
    p.add_argument("--num", required=True, help="document with order and c0..c3 of the numerator cubic (c3 may vanish)")
    p.add_argument("--y0", default="0", help="initial value for the transport check")
    p.set_defaults(func=cmd_reduce2)

    p = sub.add_parser("cartan", help="structure equations, I and the dual frame at points")
    p.add_argument("--eq", required=True)
    p.add_argument("--points", required=True)
    p.set_defaults(func=cmd_cartan)

    p = sub.add_parser("equiv", help="relate two canonical J-series by a moduli map")
    p.add_argument("--j1", required=True)
    p.add_argument("--j2", required=True)
    p.add_argument("--K", default=None)
    p.add_argument("--h", default="0")
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("verify", help="run the invariant suite on seeded random maps")
    p.add_argument("--eq", default=None, help="equation document (random per trial if omitted)")
    p.add_argument("--trials", type=int, default=25)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-n", type=int, default=3)
    p.add_argument("--order", type=int, default=10, help="order of random equations")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = args.func(args)
    except (ParseError, UsageError, InvalidEquation, InvalidMap, DegenerateLeadingCoefficient,
            JetError, ZeroF, ValueError) as exc:
        print(f"abelinv {args.command}: {exc}", file=sys.stderr)
        return 2
    text = json.dumps(report, indent=2, ensure_ascii=False) + "\n"
    sys.stdout.buffer.write(text.encode("utf-8"))
    sys.stdout.flush()
    return 0 if report["all_passed"] else 1


if __name__ == "__main__":
    sys.exit(main())
