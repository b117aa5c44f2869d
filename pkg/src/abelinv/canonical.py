"""Reduction to the canonical form ``dY/dX = Y**3 + J`` and the moduli group.

The gauge map ``y = Y U + V``, ``dX/dx = M`` with

    V = -c2 / c3,   U = rho * exp(3 * integral((c1 c3 - c2**2) / c3)),   M = c3 U**2

kills the ``Y`` and ``Y**2`` terms and makes the cubic coefficient one. The
antiderivative vanishes at the base point; the remaining freedom is the
rational multiplier ``rho = U(0)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .equation import EquationLike, PseudoGroupMap, as_charted, pull_back
from .invariants import s3
from .series import (
    Jet,
    Scalar,
    as_rational,
    compose,
    differentiate,
    exp,
    integrate,
    revert,
    shift_polynomial,
)


class NonPolynomialShift(ValueError):
    """A moduli shift ``h != 0`` was requested on a truncated (non-polynomial) jet."""


@dataclass(frozen=True, eq=False)
class CanonicalData:
    V: Jet
    U: Jet
    M: Jet  # dX/dxi in the equation's own chart
    J: Jet  # as a series in x
    X_of_x: Jet
    J_in_X: Jet
    dX_dx: Jet  # M * dvar: the rate used to differentiate x-jets along X
    rho: Fraction

    def as_map(self) -> PseudoGroupMap:
        """The gauge map (U, V, M) that produces the canonical form."""
        return PseudoGroupMap(self.U, self.V, self.M)


def canonicalize(eq: EquationLike, rho: Union[Scalar, str] = 1) -> CanonicalData:
    ce = as_charted(eq)
    rho = as_rational(rho)
    if rho == 0:
        raise ValueError("rho must be nonzero")
    c0, c1, c2, c3 = ce.eq.coeffs
    V = -c2 / c3
    rate = (c1 * c3 - c2 * c2) / c3
    U = rho * exp(3 * integrate(rate * ce.dvar))
    M = c3 * U * U
    dX_dx = M * ce.dvar
    X = integrate(dX_dx)
    c3U = c3 * U
    J = s3(ce) / (c3U * c3U * c3U)
    J_in_X = compose(J, revert(X))
    return CanonicalData(V, U, M, J, X, J_in_X, dX_dx, rho)


def dJ_dX(cd: CanonicalData, n: int) -> Jet:
    """``d^n J / dX^n`` as a jet in ``x``: ``(dX_dx**-1 d/dx)**n J``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    out = cd.J
    for _ in range(n):
        out = differentiate(out) / cd.dX_dx
    return out


def compatible_rho(cd: CanonicalData, t: PseudoGroupMap, eq: EquationLike) -> Fraction:
    """Normalization for ``transform(eq, t)`` making its ``U`` equal ``U / u``."""
    return cd.U.coeffs[0] / pull_back(t, eq).u.coeffs[0]


@dataclass(frozen=True)
class ModuliMap:
    """``W = (X + h) / K**2``, ``Z = K Y`` acting on canonical forms."""

    K: Fraction
    h: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "K", as_rational(self.K))
        object.__setattr__(self, "h", as_rational(self.h))
        if self.K == 0:
            raise ValueError("K must be nonzero")

    @classmethod
    def identity(cls) -> "ModuliMap":
        return cls(Fraction(1), Fraction(0))

    def inverse(self) -> "ModuliMap":
        return ModuliMap(1 / self.K, -self.h / self.K ** 2)

    def as_gauge(self, order: int) -> PseudoGroupMap:
        """The constant gauge map (u = 1/K, nu = 0, mu = 1/K**2); base point shift not included."""
        return PseudoGroupMap(Jet.constant(1 / self.K, order), Jet.zero(order),
                              Jet.constant(1 / self.K ** 2, order))


def compose_moduli(m2: ModuliMap, m1: ModuliMap) -> ModuliMap:
    """Apply ``m1`` then ``m2``."""
    return ModuliMap(m1.K * m2.K, m1.h + m1.K ** 2 * m2.h)


def moduli_apply(J: Jet, m: ModuliMap) -> Jet:
    """``J~(W) = K**3 J(K**2 W - h)``.

    A shift ``h != 0`` re-expands around another point, which is exact only
    for polynomial jets.
    """
    src = J
    if m.h != 0:
        if not J.polynomial:
            raise NonPolynomialShift("h != 0 needs a polynomial-exact jet")
        src = shift_polynomial(J, -m.h)
    k2 = m.K ** 2
    k3 = m.K ** 3
    cs = tuple(k3 * c * k2 ** k for k, c in enumerate(src.coeffs))
    return Jet(cs, src.valid, src.polynomial)


def canonical_related(J1: Jet, J2: Jet, m: ModuliMap) -> bool:
    """Does ``m`` carry ``J1`` to ``J2``? Compared up to the common valid order."""
    n = min(J1.order, J2.order)
    return moduli_apply(J1, m).truncate(n) == J2.truncate(n)


def _iroot(a: int, n: int) -> Optional[int]:
    """Exact integer n-th root of ``a >= 0`` or None."""
    if a < 2:
        return a
    lo, hi = 0, 1 << (a.bit_length() // n + 1)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid ** n <= a:
            lo = mid
        else:
            hi = mid - 1
    return lo if lo ** n == a else None


def rational_root(q: Fraction, n: int) -> Optional[Fraction]:
    """The rational n-th root of ``q`` for odd ``n``, if one exists."""
    if n % 2 == 0:
        raise ValueError("only odd roots are unique over the rationals")
    p = _iroot(abs(q.numerator), n)
    d = _iroot(q.denominator, n)
    if p is None or d is None:
        return None
    return Fraction(p if q >= 0 else -p, d)


def find_moduli(J1: Jet, J2: Jet) -> Optional[ModuliMap]:
    """A moduli map with ``h = 0`` relating ``J1`` to ``J2``, if there is one.

    The lowest nonzero coefficient fixes ``K`` through ``J2_k = K**(3+2k) J1_k``;
    the candidate is then checked against every valid order.
    """
    n = min(J1.order, J2.order, J1.valid, J2.valid)
    for k in range(n + 1):
        a, b = J1.coeffs[k], J2.coeffs[k]
        if a == 0 and b == 0:
            continue
        if a == 0 or b == 0:
            return None
        K = rational_root(b / a, 3 + 2 * k)
        if K is None:
            return None
        m = ModuliMap(K)
        return m if canonical_related(J1, J2, m) else None
    return ModuliMap.identity()
