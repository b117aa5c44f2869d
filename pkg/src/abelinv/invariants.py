"""Liouville's relative invariants, the affine connection and its covariant derivative.

All quantities are jets in the base variable of a (possibly charted)
equation; derivatives are taken with the chart derivation ``D``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .equation import EquationLike, as_charted
from .series import Jet


def s3(eq: EquationLike) -> Jet:
    """``c3 D c2 - c2 D c3 - 3 c1 c2 c3 + 2 c2**3 + c0 c3**2``."""
    ce = as_charted(eq)
    c0, c1, c2, c3 = ce.eq.coeffs
    return c3 * ce.D(c2) - c2 * ce.D(c3) - 3 * c1 * c2 * c3 + 2 * c2 * c2 * c2 + c0 * c3 * c3


def _bracket(eq: EquationLike) -> Jet:
    ce = as_charted(eq)
    _, c1, c2, c3 = ce.eq.coeffs
    return ce.D(c3) + 3 * (c1 * c3 - c2 * c2)


def s_hierarchy(eq: EquationLike, n_max: int) -> list[Jet]:
    """``[s3, s5, ..., s_{2 n_max + 1}]`` via Liouville's recurrence.

    ``s_{2n+1} = c3 D s_{2n-1} - (2n - 1) s_{2n-1} (D c3 + 3 (c1 c3 - c2**2))``
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    ce = as_charted(eq)
    c3 = ce.eq.c3
    bracket = _bracket(ce)
    out = [s3(ce)]
    for n in range(2, n_max + 1):
        prev = out[-1]
        out.append(c3 * ce.D(prev) - (2 * n - 1) * prev * bracket)
    return out


def connection(eq: EquationLike) -> Jet:
    """The affine connection ``r = (D c3 + 3 (c1 c3 - c2**2)) / c3``."""
    ce = as_charted(eq)
    return _bracket(ce) / ce.eq.c3


def covariant_derivative(eq: EquationLike, phi: Jet, n: int) -> Jet:
    """``nabla_n phi = D phi - n r phi``; any integer ``n``."""
    ce = as_charted(eq)
    if n == 0:
        return ce.D(phi)
    return ce.D(phi) - n * connection(ce) * phi


def nabla_raise(eq: EquationLike, s_prev: Jet, n: int) -> Jet:
    """``c3 nabla_{2n-1}``, which takes ``s_{2n-1}`` to ``s_{2n+1}``."""
    ce = as_charted(eq)
    return ce.eq.c3 * covariant_derivative(ce, s_prev, 2 * n - 1)


@dataclass(frozen=True)
class MonomialGrade:
    """A monomial in the generators ``d^k c_i / dx^k``, as ``(i, k)`` pairs."""

    factors: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        for i, k in self.factors:
            if not 0 <= i <= 3 or k < 0:
                raise ValueError(f"bad generator (i={i}, k={k})")
        object.__setattr__(self, "factors", tuple(sorted(self.factors)))

    @classmethod
    def of(cls, *factors: tuple[int, int]) -> "MonomialGrade":
        return cls(tuple(factors))

    def __mul__(self, other: "MonomialGrade") -> "MonomialGrade":
        return MonomialGrade(self.factors + other.factors)

    def multiplicities(self) -> Counter:
        return Counter(self.factors)


def weight_of(m: MonomialGrade) -> int:
    """Sum of ``i + k``: the exponent picked up under ``x, y -> lam x, lam y``."""
    return sum(i + k for i, k in m.factors)


def degree_of(m: MonomialGrade) -> int:
    """Sum of ``1 + k``: the exponent picked up under ``x -> mu x``."""
    return sum(1 + k for _, k in m.factors)


def s_weight(n: int) -> int:
    """Weight of ``s_{2n+1}``."""
    return 4 * n + 2


def s_degree(n: int) -> int:
    """Degree of ``s_{2n+1}``."""
    return 2 * n + 1
