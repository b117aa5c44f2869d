"""Abel equations of the first kind and the gauge pseudo-group acting on them.

An equation ``dy/dx = c0 + 3 c1 y + 3 c2 y**2 + c3 y**3`` is stored as four
coefficient jets. After a gauge map ``y = eta u + nu``, ``dxi/dx = mu`` the
new coefficients are still stored as jets in the *base* variable ``x``,
together with the chart rate ``dvar = dxi/dx`` so that the derivation in
the new chart is ``D = dvar**-1 d/dx`` (see :class:`ChartedEquation`).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence, Union

from .series import (
    Jet,
    Scalar,
    as_rational,
    compose,
    differentiate,
    integrate,
    revert,
)


class InvalidEquation(ValueError):
    pass


class InvalidMap(ValueError):
    pass


class DegenerateLeadingCoefficient(ValueError):
    pass


def _is_one(j: Jet) -> bool:
    return j.coeffs[0] == 1 and not any(j.coeffs[1:])


def refit(j: Jet, order: int) -> Jet:
    """Truncate or zero-pad ``j`` to ``order``, keeping its watermark honest."""
    if order <= j.order:
        return j.truncate(order)
    return Jet.from_coeffs(j.coeffs, order, polynomial=j.polynomial).with_valid(
        order if j.polynomial else j.valid)


@dataclass(frozen=True, eq=False)
class AbelEquation:
    c0: Jet
    c1: Jet
    c2: Jet
    c3: Jet

    def __post_init__(self):
        orders = {c.order for c in self.coeffs}
        if len(orders) != 1:
            raise InvalidEquation(f"coefficient orders differ: {sorted(orders)}")
        if self.c3.coeffs[0] == 0:
            raise InvalidEquation("c3 must have a nonzero constant term")

    @classmethod
    def from_lists(cls, c0, c1, c2, c3, order: int | None = None) -> "AbelEquation":
        """Build from coefficient lists (or scalars); pads to a common order."""
        raw = [[c] if isinstance(c, (int, Fraction, str)) else list(c) for c in (c0, c1, c2, c3)]
        if order is None:
            order = max(len(r) for r in raw) - 1
        return cls(*(Jet.from_coeffs(r, order) for r in raw))

    @property
    def coeffs(self) -> tuple[Jet, Jet, Jet, Jet]:
        return (self.c0, self.c1, self.c2, self.c3)

    @property
    def order(self) -> int:
        return self.c0.order

    def f(self, x0: Scalar, y: Scalar) -> Fraction:
        """Right-hand side at a point, with coefficients evaluated at ``x0``."""
        c0, c1, c2, c3 = (c(x0) for c in self.coeffs)
        y = as_rational(y)
        return c0 + y * (3 * c1 + y * (3 * c2 + y * c3))

    def refit(self, order: int) -> "AbelEquation":
        return AbelEquation(*(refit(c, order) for c in self.coeffs))

    def __eq__(self, other):
        if not isinstance(other, AbelEquation):
            return NotImplemented
        return all(a == b for a, b in zip(self.coeffs, other.coeffs))

    __hash__ = None  # type: ignore[assignment]


@dataclass(frozen=True, eq=False)
class ChartedEquation:
    """Coefficients as jets in ``x`` plus the chart rate ``dvar = dxi/dx``."""

    eq: AbelEquation
    dvar: Jet = None  # type: ignore[assignment]

    def __post_init__(self):
        if self.dvar is None:
            object.__setattr__(self, "dvar", Jet.constant(1, self.eq.order))
        if self.dvar.order != self.eq.order:
            raise InvalidEquation("dvar order differs from the coefficients")
        if self.dvar.coeffs[0] == 0:
            raise InvalidEquation("dvar must have a nonzero constant term")

    @property
    def order(self) -> int:
        return self.eq.order

    @property
    def is_base_chart(self) -> bool:
        return _is_one(self.dvar)

    def D(self, j: Jet) -> Jet:
        """The chart derivation ``dvar**-1 d/dx``."""
        d = differentiate(j)
        return d if self.is_base_chart else d / self.dvar

    def chart_coordinate(self) -> Jet:
        """The chart variable as a jet in ``x``, vanishing at the base point."""
        return integrate(self.dvar)

    def __eq__(self, other):
        if not isinstance(other, ChartedEquation):
            return NotImplemented
        return self.eq == other.eq and self.dvar == other.dvar

    __hash__ = None  # type: ignore[assignment]


EquationLike = Union[AbelEquation, ChartedEquation]


def as_charted(eq: EquationLike) -> ChartedEquation:
    return eq if isinstance(eq, ChartedEquation) else ChartedEquation(eq)


@dataclass(frozen=True, eq=False)
class PseudoGroupMap:
    """Gauge map ``y = eta * u + nu`` with ``dxi/dx = mu``."""

    u: Jet
    nu: Jet
    mu: Jet

    def __post_init__(self):
        if len({self.u.order, self.nu.order, self.mu.order}) != 1:
            raise InvalidMap("u, nu and mu must share one order")
        if self.u.coeffs[0] == 0:
            raise InvalidMap("u must have a nonzero constant term")
        if self.mu.coeffs[0] == 0:
            raise InvalidMap("mu must have a nonzero constant term")

    @classmethod
    def identity(cls, order: int) -> "PseudoGroupMap":
        return cls(Jet.constant(1, order), Jet.zero(order), Jet.constant(1, order))

    @property
    def order(self) -> int:
        return self.u.order

    def jacobian(self) -> Jet:
        """``d(x, y)/d(xi, eta) = u / mu``."""
        return self.u / self.mu

    def __eq__(self, other):
        if not isinstance(other, PseudoGroupMap):
            return NotImplemented
        return self.u == other.u and self.nu == other.nu and self.mu == other.mu

    __hash__ = None  # type: ignore[assignment]


def pull_back(t: PseudoGroupMap, eq: EquationLike) -> PseudoGroupMap:
    """Express a map given in ``eq``'s chart variable as jets in ``x``."""
    ce = as_charted(eq)
    if ce.is_base_chart:
        return t
    xi = ce.chart_coordinate()
    return PseudoGroupMap(compose(t.u, xi), compose(t.nu, xi), compose(t.mu, xi))


Cubic = Union[AbelEquation, ChartedEquation, Sequence[Jet]]


def _cubic(eq: Cubic) -> tuple[Jet, ...]:
    if isinstance(eq, ChartedEquation):
        return eq.eq.coeffs
    if isinstance(eq, AbelEquation):
        return eq.coeffs
    cs = tuple(eq)
    if len(cs) != 4:
        raise InvalidEquation("a cubic needs exactly four coefficient jets")
    return cs


def rhs(eq: Cubic, y: Jet) -> Jet:
    """``c0 + 3 c1 y + 3 c2 y**2 + c3 y**3`` as a jet."""
    c0, c1, c2, c3 = _cubic(eq)
    return c0 + y * (3 * c1 + y * (3 * c2 + y * c3))


def transform(eq: EquationLike, t: PseudoGroupMap) -> ChartedEquation:
    """Coefficients of the equation after the gauge map ``t``.

    ``t`` is read in the source chart's variable; derivatives of ``u`` and
    ``nu`` use the source chart derivation.
    """
    ce = as_charted(eq)
    if t.order != ce.order:
        raise InvalidMap(f"map order {t.order} differs from equation order {ce.order}")
    p = pull_back(t, ce)
    u, nu, mu = p.u, p.nu, p.mu
    c0, c1, c2, c3 = ce.eq.coeffs
    mu_u = mu * u
    g0 = (c0 + nu * (3 * c1 + nu * (3 * c2 + nu * c3)) - ce.D(nu)) / mu_u
    g1 = (c1 + nu * (2 * c2 + nu * c3)) / mu - ce.D(u) / (3 * mu_u)
    g2 = u * (c2 + c3 * nu) / mu
    g3 = u * u * c3 / mu
    return ChartedEquation(AbelEquation(g0, g1, g2, g3), ce.dvar * mu)


def compose_maps(t2: PseudoGroupMap, t1: PseudoGroupMap) -> PseudoGroupMap:
    """The map "apply ``t1``, then ``t2``"; ``t2`` is read in ``t1``'s target chart."""
    xi1 = integrate(t1.mu)
    u2, nu2, mu2 = (compose(j, xi1) for j in (t2.u, t2.nu, t2.mu))
    return PseudoGroupMap(t1.u * u2, t1.nu + t1.u * nu2, t1.mu * mu2)


def scaling_map(lam: Union[Scalar, str], s: int, r: int, order: int) -> PseudoGroupMap:
    """The map ``(x, y) = (lam**s xi, lam**r eta)`` as constant jets."""
    lam = as_rational(lam)
    if lam == 0:
        raise InvalidMap("lambda must be nonzero")
    return PseudoGroupMap(Jet.constant(lam ** r, order), Jet.zero(order),
                          Jet.constant(lam ** (-s), order))


def solve_series(field: Callable[[Jet], Jet], y0: Union[Scalar, str], order: int) -> Jet:
    """Taylor solution of ``y' = field(y)``, ``y(0) = y0``, by order-by-order matching."""
    coeffs = [as_rational(y0)] + [Fraction(0)] * order
    top = order
    for k in range(order):
        g = field(Jet(tuple(coeffs)))
        if g.valid < k:
            top = min(top, k)
        coeffs[k + 1] = g.coeffs[k] / (k + 1)
    return Jet(tuple(coeffs), top)


def series_solve(eq: EquationLike, y0: Union[Scalar, str], order: int | None = None) -> Jet:
    """Taylor solution of the Abel equation through ``(0, y0)``; base chart only."""
    ce = as_charted(eq)
    if not ce.is_base_chart:
        raise InvalidEquation("series_solve needs an equation in its own variable (dvar = 1)")
    e = ce.eq if order is None else ce.eq.refit(order)
    return solve_series(lambda y: rhs(e, y), y0, e.order)


def in_chart_variable(eq: ChartedEquation) -> AbelEquation:
    """Re-expand a charted equation's coefficients in its own variable ``xi``."""
    if eq.is_base_chart:
        return eq.eq
    x_of_xi = revert(eq.chart_coordinate())
    return AbelEquation(*(compose(c, x_of_xi) for c in eq.eq.coeffs))


def transport_solution(y: Jet, t: PseudoGroupMap, eq: EquationLike) -> Jet:
    """Image ``eta = (y - nu) / u`` of a solution, as a jet in ``x``."""
    p = pull_back(t, eq)
    return (y - p.nu) / p.u


def ode_residual(eq: EquationLike, y: Jet) -> Jet:
    """``D y - rhs(eq, y)``; zero up to the valid order iff ``y`` solves ``eq``."""
    ce = as_charted(eq)
    return ce.D(y) - rhs(ce, y)


def _poly_mul(p: list[Jet], q: list[Jet]) -> list[Jet]:
    out = [p[0] * 0 for _ in range(len(p) + len(q) - 1)]
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] = out[i + j] + a * b
    return out


def reduce_second_kind(b0: Jet, b1: Jet, num: Cubic) -> AbelEquation:
    """First-kind equation for ``z = 1/(b0 + b1 y)``.

    The input is ``y' = P(y)/(b0 + b1 y)`` with ``P`` the cubic of ``num``.
    Then ``z' = -z**2 (b0' + b1' y) - z**3 b1 P(y)`` and, substituting
    ``y = w/b1 - b0/b1`` with ``w = 1/z``, every term is a polynomial in ``z``.
    The numerator may be any cubic; its leading coefficient may vanish.
    """
    if b1.coeffs[0] == 0:
        raise InvalidEquation("b1 must have a nonzero constant term")
    n0, n1, n2, n3 = _cubic(num)
    a = 1 / b1
    b = -b0 / b1
    lin = [b, a]  # y as a polynomial in w
    p: list[Jet] = [n3]
    for c in (3 * n2, 3 * n1, n0):
        p = _poly_mul(p, lin)
        p[0] = p[0] + c
    db0, db1 = differentiate(b0), differentiate(b1)
    zero = b0 * 0
    e = [zero, zero, zero, zero]  # coefficients of z**0 .. z**3
    e[2] = e[2] - db0
    e[1] = e[1] - db1 * a
    e[2] = e[2] - db1 * b
    for j, pj in enumerate(p):
        e[3 - j] = e[3 - j] - b1 * pj
    if e[3].coeffs[0] == 0:
        raise DegenerateLeadingCoefficient("reduced equation has c3(0) = 0")
    return AbelEquation(e[0], e[1] / 3, e[2] / 3, e[3])


def second_kind_field(b0: Jet, b1: Jet, num: Cubic) -> Callable[[Jet], Jet]:
    """``y -> P(y) / (b0 + b1 y)`` for use with :func:`solve_series`."""
    return lambda y: rhs(num, y) / (b0 + b1 * y)
