"""Coframe, structure equations and dual frame on ``(x, y, u)`` space.

For ``f(x, y) = c0 + 3 c1 y + 3 c2 y**2 + c3 y**3`` the normalized coframe is

    theta1 = -(u/f) (dy - f dx)
    theta2 = -(u/f) dx
    varpi  = du/u - (f_x/f) dx - (f_y/f) (dy - f dx)

and it satisfies ``d theta_i = varpi ^ theta_i`` and
``d varpi = I theta1 ^ theta2`` with ``I = f**2 f_yy / u**2``.

Exterior derivatives are exact: every coframe component is evaluated on
first-order dual numbers in ``(x, y, u)``, so the gradient comes out in
closed form over the rationals. Coefficient jets are read as the
polynomials they store.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Union

from .equation import EquationLike, as_charted, rhs
from .invariants import s3
from .series import Jet, Scalar, as_rational, differentiate, evaluate


class ZeroF(ZeroDivisionError):
    """The right-hand side vanishes at the point, so the coframe is undefined."""


_ZERO = Fraction(0)


@dataclass(frozen=True)
class Dual:
    """Value with exact gradient along ``(x, y, u)``."""

    val: Fraction
    grad: tuple[Fraction, Fraction, Fraction] = (_ZERO, _ZERO, _ZERO)

    def _wrap(self, other) -> "Dual":
        if isinstance(other, Dual):
            return other
        return Dual(as_rational(other))

    def __add__(self, other):
        o = self._wrap(other)
        return Dual(self.val + o.val, tuple(a + b for a, b in zip(self.grad, o.grad)))

    __radd__ = __add__

    def __neg__(self):
        return Dual(-self.val, tuple(-a for a in self.grad))

    def __sub__(self, other):
        return self + (-self._wrap(other))

    def __rsub__(self, other):
        return self._wrap(other) - self

    def __mul__(self, other):
        o = self._wrap(other)
        return Dual(self.val * o.val,
                    tuple(self.val * b + o.val * a for a, b in zip(self.grad, o.grad)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._wrap(other)
        if o.val == 0:
            raise ZeroDivisionError("dual division by zero value")
        inv = 1 / o.val
        return Dual(self.val * inv,
                    tuple((a * o.val - self.val * b) * inv * inv for a, b in zip(self.grad, o.grad)))

    def __rtruediv__(self, other):
        return self._wrap(other) / self


@dataclass(frozen=True)
class PointXYU:
    x: Fraction
    y: Fraction
    u: Fraction

    def __post_init__(self):
        for name in ("x", "y", "u"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))
        if self.u == 0:
            raise ValueError("u must be nonzero")

    @classmethod
    def of(cls, x: Union[Scalar, str], y: Union[Scalar, str], u: Union[Scalar, str]) -> "PointXYU":
        return cls(as_rational(x), as_rational(y), as_rational(u))


@dataclass(frozen=True)
class OneFormAtPoint:
    """Components on ``(dx, dy, du)``."""

    dx: Fraction
    dy: Fraction
    du: Fraction

    def __add__(self, other: "OneFormAtPoint") -> "OneFormAtPoint":
        return OneFormAtPoint(self.dx + other.dx, self.dy + other.dy, self.du + other.du)

    def pair(self, v: "FrameVectorAtPoint") -> Fraction:
        return self.dx * v.px + self.dy * v.py + self.du * v.pu


@dataclass(frozen=True)
class TwoFormAtPoint:
    """Components on ``(dx^dy, dx^du, dy^du)``."""

    dxdy: Fraction
    dxdu: Fraction
    dydu: Fraction

    def __sub__(self, other: "TwoFormAtPoint") -> "TwoFormAtPoint":
        return TwoFormAtPoint(self.dxdy - other.dxdy, self.dxdu - other.dxdu, self.dydu - other.dydu)

    def scale(self, q: Fraction) -> "TwoFormAtPoint":
        return TwoFormAtPoint(q * self.dxdy, q * self.dxdu, q * self.dydu)

    def is_zero(self) -> bool:
        return not (self.dxdy or self.dxdu or self.dydu)


@dataclass(frozen=True)
class FrameVectorAtPoint:
    """Components on ``(d/dx, d/dy, d/du)``."""

    px: Fraction
    py: Fraction
    pu: Fraction


@dataclass(frozen=True)
class Partials:
    f: Fraction
    f_x: Fraction
    f_y: Fraction
    f_yy: Fraction
    f_xx: Fraction
    f_xy: Fraction


def wedge(a: OneFormAtPoint, b: OneFormAtPoint) -> TwoFormAtPoint:
    return TwoFormAtPoint(a.dx * b.dy - a.dy * b.dx,
                          a.dx * b.du - a.du * b.dx,
                          a.dy * b.du - a.du * b.dy)


# a one-form field evaluated on duals: three components on (dx, dy, du)
DualForm = tuple[Dual, Dual, Dual]


def exterior_derivative(form: DualForm) -> TwoFormAtPoint:
    """``d(A dx + B dy + C du)`` from the gradients of the components."""
    A, B, C = form
    return TwoFormAtPoint(B.grad[0] - A.grad[1], C.grad[0] - A.grad[2], C.grad[1] - B.grad[2])


def at_point(form: DualForm) -> OneFormAtPoint:
    return OneFormAtPoint(form[0].val, form[1].val, form[2].val)


@dataclass(frozen=True)
class _Lifted:
    u: Dual
    f: Dual
    f_x: Dual
    f_y: Dual
    f_yy: Dual


def _jet_at(j: Jet, x: Fraction) -> Dual:
    return Dual(evaluate(j, x), (evaluate(differentiate(j), x), _ZERO, _ZERO))


def _lift(eq: EquationLike, p: PointXYU) -> _Lifted:
    e = as_charted(eq).eq
    y = Dual(p.y, (_ZERO, Fraction(1), _ZERO))
    u = Dual(p.u, (_ZERO, _ZERO, Fraction(1)))
    c = [_jet_at(cj, p.x) for cj in e.coeffs]
    cx = [_jet_at(differentiate(cj), p.x) for cj in e.coeffs]
    f = c[0] + y * (3 * c[1] + y * (3 * c[2] + y * c[3]))
    f_x = cx[0] + y * (3 * cx[1] + y * (3 * cx[2] + y * cx[3]))
    f_y = 3 * c[1] + y * (6 * c[2] + y * (3 * c[3]))
    f_yy = 6 * c[2] + 6 * c[3] * y
    return _Lifted(u, f, f_x, f_y, f_yy)


def partials(eq: EquationLike, p: PointXYU) -> Partials:
    """``f`` and its partials up to second order at ``(x, y)``; raises ZeroF if ``f = 0``."""
    L = _lift(eq, p)
    if L.f.val == 0:
        raise ZeroF(f"f vanishes at (x, y) = ({p.x}, {p.y})")
    return Partials(L.f.val, L.f_x.val, L.f_y.val, L.f_yy.val, L.f_x.grad[0], L.f_x.grad[1])


def _coframe_fields(L: _Lifted) -> tuple[DualForm, DualForm, DualForm]:
    zero = Dual(_ZERO)
    u_over_f = L.u / L.f
    theta1 = (L.u, -u_over_f, zero)
    theta2 = (-u_over_f, zero, zero)
    varpi = (L.f_y - L.f_x / L.f, -L.f_y / L.f, 1 / L.u)
    return theta1, theta2, varpi


def _checked_lift(eq: EquationLike, p: PointXYU) -> _Lifted:
    L = _lift(eq, p)
    if L.f.val == 0:
        raise ZeroF(f"f vanishes at (x, y) = ({p.x}, {p.y})")
    return L


def coframe(eq: EquationLike, p: PointXYU) -> tuple[OneFormAtPoint, OneFormAtPoint, OneFormAtPoint]:
    """``(theta1, theta2, varpi)`` at ``p``."""
    return tuple(at_point(w) for w in _coframe_fields(_checked_lift(eq, p)))  # type: ignore[return-value]


def invariant_I(eq: EquationLike, p: PointXYU) -> Fraction:
    """Coefficient of ``theta1 ^ theta2`` in ``d varpi``: ``f**2 f_yy / u**2``."""
    L = _lift(eq, p)
    return L.f.val ** 2 * L.f_yy.val / p.u ** 2


def literal_invariant_I(eq: EquationLike, p: PointXYU) -> Fraction:
    """The literal expression ``f f_yy / u**2``; agrees with :func:`invariant_I` only where ``f = 1``."""
    L = _lift(eq, p)
    return L.f.val * L.f_yy.val / p.u ** 2


def structure_residuals(
    eq: EquationLike,
    p: PointXYU,
    perturb: Optional[OneFormAtPoint] = None,
    invariant: Callable[[EquationLike, PointXYU], Fraction] = invariant_I,
) -> tuple[TwoFormAtPoint, TwoFormAtPoint, TwoFormAtPoint]:
    """``d theta1 - varpi^theta1``, ``d theta2 - varpi^theta2``, ``d varpi - I theta1^theta2``.

    ``perturb`` adds a constant one-form to ``varpi`` (negative controls);
    ``invariant`` swaps the coefficient used in the last equation.
    """
    L = _checked_lift(eq, p)
    t1, t2, w = _coframe_fields(L)
    th1, th2, vp = at_point(t1), at_point(t2), at_point(w)
    if perturb is not None:
        vp = vp + perturb
    I = invariant(eq, p)
    return (
        exterior_derivative(t1) - wedge(vp, th1),
        exterior_derivative(t2) - wedge(vp, th2),
        exterior_derivative(w) - wedge(th1, th2).scale(I),
    )


def dual_frame(eq: EquationLike, p: PointXYU) -> tuple[FrameVectorAtPoint, FrameVectorAtPoint,
                                                      FrameVectorAtPoint]:
    """``X1 = -(f/u) dy - f_y du``, ``X2 = -(f/u)(dx + f dy) - f_x du``, ``X3 = u du``."""
    L = _checked_lift(eq, p)
    f, u = L.f.val, p.u
    return (
        FrameVectorAtPoint(_ZERO, -f / u, -L.f_y.val),
        FrameVectorAtPoint(-f / u, -f * f / u, -L.f_x.val),
        FrameVectorAtPoint(_ZERO, _ZERO, u),
    )


def duality_matrix(eq: EquationLike, p: PointXYU) -> list[list[Fraction]]:
    """``[[<theta_i, X_j>]]`` with rows (theta1, theta2, varpi)."""
    forms = coframe(eq, p)
    frame = dual_frame(eq, p)
    return [[w.pair(v) for v in frame] for w in forms]


def frame_derivatives_of_I(eq: EquationLike, p: PointXYU) -> tuple[Fraction, Fraction, Fraction]:
    """``X_j(I)`` for the three dual-frame vectors (no invariance claim attached)."""
    L = _checked_lift(eq, p)
    I = L.f * L.f * L.f_yy / (L.u * L.u)
    return tuple(v.px * I.grad[0] + v.py * I.grad[1] + v.pu * I.grad[2]
                 for v in dual_frame(eq, p))  # type: ignore[return-value]


def s3_solution_verdicts(eq: EquationLike) -> tuple[bool, bool]:
    """(``y = -c2/c3`` solves the equation, ``s3`` vanishes identically)."""
    ce = as_charted(eq)
    V = -ce.eq.c2 / ce.eq.c3
    solves = ce.D(V) == rhs(ce, V)
    return solves, s3(ce).is_zero()


def s3_remark_check(eq: EquationLike) -> bool:
    """True when the two verdicts of :func:`s3_solution_verdicts` agree."""
    solves, vanishes = s3_solution_verdicts(eq)
    return solves == vanishes
