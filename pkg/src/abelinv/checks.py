"""Exact property checks for the invariant theory, shared by the CLI and tests.

Each check returns :class:`CheckResult` records. A jet identity passes when
both sides agree on every coefficient up to their common valid order; a
check with no valid coefficients left fails rather than passing vacuously.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .canonical import canonicalize, compatible_rho, dJ_dX
from .cartan import s3_remark_check
from .equation import (
    AbelEquation,
    ChartedEquation,
    EquationLike,
    PseudoGroupMap,
    as_charted,
    compose_maps,
    in_chart_variable,
    ode_residual,
    pull_back,
    scaling_map,
    series_solve,
    transform,
    transport_solution,
)
from .invariants import connection, covariant_derivative, nabla_raise, s_degree, s_hierarchy, s_weight
from .series import Jet, compose, differentiate, log, revert


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    first_failing_order: Optional[int] = None
    detail: str = ""


def jet_check(name: str, lhs: Jet, rhs: Jet) -> CheckResult:
    top = min(lhs.valid, rhs.valid)
    if top < 0:
        return CheckResult(name, False, None, "no valid coefficients to compare")
    k = lhs.first_mismatch(rhs)
    return CheckResult(name, k is None, k)


def tensor_law(eq: EquationLike, t: PseudoGroupMap, n_max: int = 3) -> list[CheckResult]:
    """``s_{2n+1}`` of the transformed equation is ``(u/mu)**(2n+1)`` times the original."""
    jac = pull_back(t, eq).jacobian()
    before = s_hierarchy(eq, n_max)
    after = s_hierarchy(transform(eq, t), n_max)
    return [jet_check(f"tensor_law[n={n}]", after[n - 1], jac ** (2 * n + 1) * before[n - 1])
            for n in range(1, n_max + 1)]


def gamma3_law(eq: EquationLike, t: PseudoGroupMap) -> CheckResult:
    p = pull_back(t, eq)
    return jet_check("gamma3_law", transform(eq, t).eq.c3, p.u * p.u / p.mu * as_charted(eq).eq.c3)


def grading_laws(eq: EquationLike, lam: Fraction, n_max: int = 3, k_max: int = 2) -> list[CheckResult]:
    """Weight and degree scalings of the generators and of the s-hierarchy."""
    ce = as_charted(eq)
    out = []
    for label, s, r, expo in (("weight", 1, 1, s_weight), ("degree", 1, 0, s_degree)):
        t = scaling_map(lam, s, r, ce.order)
        te = transform(ce, t)
        for i, (c, g) in enumerate(zip(ce.eq.coeffs, te.eq.coeffs)):
            dc, dg = c, g
            for k in range(k_max + 1):
                factor = lam ** ((k + 1) * s + r * (i - 1))
                out.append(jet_check(f"{label}_generator[i={i},k={k}]", dg, factor * dc))
                dc, dg = ce.D(dc), te.D(dg)
        before, after = s_hierarchy(ce, n_max), s_hierarchy(te, n_max)
        for n in range(1, n_max + 1):
            out.append(jet_check(f"{label}_s[n={n}]", after[n - 1], lam ** expo(n) * before[n - 1]))
    return out


def _dlog(ce: ChartedEquation, j: Jet) -> Jet:
    return ce.D(log(j / j.coeffs[0]))


def connection_law(eq: EquationLike, t: PseudoGroupMap) -> CheckResult:
    """``r~ = (r + D log(u/mu)) / mu``."""
    ce = as_charted(eq)
    p = pull_back(t, ce)
    expected = (connection(ce) + _dlog(ce, p.jacobian())) / p.mu
    return jet_check("connection_law", connection(transform(ce, t)), expected)


def covariant_law(eq: EquationLike, t: PseudoGroupMap, phi: Jet, n: int) -> CheckResult:
    """If ``phi~ = (u/mu)**n phi`` then ``nabla~_n phi~ = u**n / mu**(n+1) nabla_n phi``."""
    ce = as_charted(eq)
    p = pull_back(t, ce)
    te = transform(ce, t)
    jac = p.jacobian()
    lhs = covariant_derivative(te, jac ** n * phi, n)
    rhs = jac ** n / p.mu * covariant_derivative(ce, phi, n)
    return jet_check(f"covariant_law[n={n}]", lhs, rhs)


def raise_identity(eq: EquationLike, n_max: int = 4) -> list[CheckResult]:
    """``c3 nabla_{2n-1} s_{2n-1} = s_{2n+1}``."""
    ss = s_hierarchy(eq, n_max)
    return [jet_check(f"nabla_raise[n={n}]", nabla_raise(eq, ss[n - 2], n), ss[n - 1])
            for n in range(2, n_max + 1)]


def canonical_identities(eq: EquationLike, n_max: int = 2, rho: Fraction = Fraction(1)) -> list[CheckResult]:
    ce = as_charted(eq)
    cd = canonicalize(ce, rho)
    c3U = ce.eq.c3 * cd.U
    ss = s_hierarchy(ce, n_max + 1)
    out = [jet_check("J_times_c3U_cubed", cd.J * c3U ** 3, ss[0])]
    for n in range(n_max + 1):
        out.append(jet_check(f"dJ_dX[n={n}]", dJ_dX(cd, n) * c3U ** (2 * n + 3), ss[n]))
    canon = transform(ce, cd.as_map()).eq
    out.append(jet_check("canonical_c0_is_J", canon.c0, cd.J))
    for name, c, v in (("c1", canon.c1, 0), ("c2", canon.c2, 0), ("c3", canon.c3, 1)):
        out.append(jet_check(f"canonical_{name}", c, Jet.constant(v, ce.order)))
    out.append(jet_check("J_in_X_round_trip", compose(cd.J_in_X, cd.X_of_x), cd.J))
    return out


def absolute_invariance(eq: EquationLike, t: PseudoGroupMap) -> list[CheckResult]:
    """With compatible normalization: ``U~ = U/u``, ``X~ = X``, ``J~ = J``."""
    ce = as_charted(eq)
    cd = canonicalize(ce)
    te = transform(ce, t)
    cdt = canonicalize(te, compatible_rho(cd, t, ce))
    u = pull_back(t, ce).u
    return [
        jet_check("U_over_u", cdt.U, cd.U / u),
        jet_check("X_invariant", cdt.X_of_x, cd.X_of_x),
        jet_check("J_invariant", cdt.J, cd.J),
    ]


def group_action(eq: EquationLike, t1: PseudoGroupMap, t2: PseudoGroupMap) -> list[CheckResult]:
    lhs = transform(transform(eq, t1), t2)
    rhs = transform(eq, compose_maps(t2, t1))
    out = [jet_check(f"group_action_c{i}", a, b) for i, (a, b) in enumerate(zip(lhs.eq.coeffs, rhs.eq.coeffs))]
    out.append(jet_check("group_action_dvar", lhs.dvar, rhs.dvar))
    return out


def solution_transport(eq: EquationLike, t: PseudoGroupMap, y0: Fraction) -> list[CheckResult]:
    """A solution maps to a solution, checked in ``x`` and, by reversion, in ``xi``."""
    ce = as_charted(eq)
    y = series_solve(ce, y0)
    zero = Jet.zero(ce.order)
    te = transform(ce, t)
    eta = transport_solution(y, t, ce)
    out = [
        jet_check("solution_residual", ode_residual(ce, y), zero),
        jet_check("transported_residual", ode_residual(te, eta), zero),
    ]
    own = in_chart_variable(te)
    x_of_xi = revert(te.chart_coordinate())
    eta_xi = compose(eta, x_of_xi)
    fresh = series_solve(own, eta.coeffs[0])
    out.append(jet_check("transported_matches_chart_solution", eta_xi, fresh))
    return out


def s3_solution_agreement(eq: EquationLike) -> CheckResult:
    return CheckResult("s3_remark_check", s3_remark_check(eq))


def s3_free_equation(c1: Jet, c2: Jet, c3: Jet) -> AbelEquation:
    """The equation with these ``c1, c2, c3`` whose ``s3`` vanishes identically."""
    c0 = (3 * c1 * c2 * c3 - 2 * c2 * c2 * c2 - c3 * differentiate(c2) + c2 * differentiate(c3)) / (c3 * c3)
    return AbelEquation(c0, c1, c2, c3)
