"""Seeded generator for random equations, maps and points.

The stream is SplitMix64: ``state += 0x9E3779B97F4A7C15`` then the usual
two xor-shift-multiply rounds and a final ``z ^ (z >> 31)``, all mod 2**64.
``below(n)`` is ``next() % n``. Trial ``i`` of a run with seed ``s`` uses
the generator seeded with ``(s + i * 0x9E3779B97F4A7C15) mod 2**64``, so a
single trial can be replayed on its own.

Random jets are polynomials of degree <= 3 with numerators in [-9, 9] and
denominators in [1, 9]; constant terms that must not vanish are redrawn
from the nonzero numerators.
"""

from __future__ import annotations

from fractions import Fraction

from .cartan import PointXYU
from .equation import AbelEquation, PseudoGroupMap
from .series import Jet

MASK = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK

    def next(self) -> int:
        self.state = (self.state + GOLDEN) & MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        return self.next() % n

    def integer(self, lo: int, hi: int) -> int:
        return lo + self.below(hi - lo + 1)

    def rational(self, nonzero: bool = False) -> Fraction:
        if nonzero:
            num = self.integer(1, 9) * (1 if self.below(2) else -1)
        else:
            num = self.integer(-9, 9)
        return Fraction(num, self.integer(1, 9))

    def jet(self, order: int, degree: int = 3, nonzero_constant: bool = False) -> Jet:
        cs = [self.rational(nonzero=(k == 0 and nonzero_constant)) for k in range(degree + 1)]
        return Jet.from_coeffs(cs[: order + 1], order)

    def equation(self, order: int) -> AbelEquation:
        c0, c1, c2 = (self.jet(order) for _ in range(3))
        return AbelEquation(c0, c1, c2, self.jet(order, nonzero_constant=True))

    def gauge_map(self, order: int) -> PseudoGroupMap:
        u = self.jet(order, nonzero_constant=True)
        nu = self.jet(order)
        mu = self.jet(order, nonzero_constant=True)
        return PseudoGroupMap(u, nu, mu)

    def admissible_point(self, eq: AbelEquation, tries: int = 1000) -> PointXYU:
        """A rational point with ``u != 0`` and ``f(x, y) != 0``."""
        for _ in range(tries):
            p = PointXYU(self.rational(), self.rational(), self.rational(nonzero=True))
            if eq.f(p.x, p.y) != 0:
                return p
        raise RuntimeError("no admissible point found")


def trial_rng(seed: int, trial: int) -> SplitMix64:
    return SplitMix64((seed + trial * GOLDEN) & MASK)
