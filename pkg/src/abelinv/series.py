"""Truncated Taylor series (jets) at 0 with exact rational coefficients.

A :class:`Jet` of order ``N`` stores the coefficients of ``x**0 .. x**N``.
Besides the order it carries a *valid-order* watermark: the highest index
whose coefficient is known to be correct. Differentiation lowers the
watermark by one; every other operation takes the minimum over its
inputs. Comparisons only look at indices up to the common watermark.

>>> x = Jet.variable(3)
>>> exp(x)
Jet(1 + x + 1/2x² + 1/6x³)
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence, Union

from . import kernels

Scalar = Union[int, Fraction]


class JetError(ArithmeticError):
    """Base class for jet arithmetic failures."""


class OrderMismatch(JetError, ValueError):
    pass


class ZeroConstantTerm(JetError, ZeroDivisionError):
    pass


class BadConstantTerm(JetError, ValueError):
    pass


class NonzeroInnerConstant(JetError, ValueError):
    pass


class NotInvertible(JetError, ValueError):
    pass


def as_rational(value: Union[Scalar, str]) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


@dataclass(frozen=True, eq=False)
class Jet:
    coeffs: tuple[Fraction, ...]
    valid: int = field(default=None)  # type: ignore[assignment]
    polynomial: bool = False

    def __post_init__(self):
        coeffs = tuple(as_rational(c) for c in self.coeffs)
        if not coeffs:
            raise ValueError("a jet needs at least one coefficient")
        object.__setattr__(self, "coeffs", coeffs)
        order = len(coeffs) - 1
        valid = order if self.valid is None else min(int(self.valid), order)
        object.__setattr__(self, "valid", valid)
        if self.polynomial and valid < order:
            object.__setattr__(self, "polynomial", False)

    # constructors

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[Union[Scalar, str]], order: int | None = None,
                    polynomial: bool = False) -> "Jet":
        """Pad with zeros (or truncate) to ``order``."""
        cs = [as_rational(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise ValueError("order must be non-negative")
        if len(cs) > order + 1:
            if polynomial and any(cs[order + 1:]):
                raise ValueError("polynomial does not fit in the requested order")
            cs = cs[: order + 1]
        cs += [Fraction(0)] * (order + 1 - len(cs))
        return cls(tuple(cs), polynomial=polynomial)

    @classmethod
    def constant(cls, c: Union[Scalar, str], order: int) -> "Jet":
        return cls.from_coeffs([c], order, polynomial=True)

    @classmethod
    def zero(cls, order: int) -> "Jet":
        return cls.constant(0, order)

    @classmethod
    def variable(cls, order: int) -> "Jet":
        """The jet of ``x`` itself (needs order >= 1)."""
        return cls.from_coeffs([0, 1], order, polynomial=True)

    # basic accessors

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]

    def with_valid(self, valid: int) -> "Jet":
        return Jet(self.coeffs, min(valid, self.valid), self.polynomial)

    def truncate(self, order: int) -> "Jet":
        if order > self.order:
            raise ValueError("truncate cannot raise the order")
        return Jet(self.coeffs[: order + 1], self.valid, self.polynomial)

    def is_zero(self) -> bool:
        """True when every valid coefficient vanishes."""
        return not any(self.coeffs[: self.valid + 1])

    def degree(self) -> int:
        """Index of the highest nonzero stored coefficient (-1 for zero)."""
        for k in range(self.order, -1, -1):
            if self.coeffs[k]:
                return k
        return -1

    # comparisons

    def first_mismatch(self, other: "Jet | Scalar") -> int | None:
        """Lowest index (within the common valid order) where two jets differ."""
        other = _coerce(other, self.order)
        top = min(self.valid, other.valid)
        for k in range(top + 1):
            if self.coeffs[k] != other.coeffs[k]:
                return k
        return None

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            other = Jet.constant(other, self.order)
        if not isinstance(other, Jet):
            return NotImplemented
        return self.first_mismatch(other) is None

    __hash__ = None  # type: ignore[assignment]

    # operator sugar

    def __add__(self, other):
        return add(self, _coerce(other, self.order))

    __radd__ = __add__

    def __sub__(self, other):
        return sub(self, _coerce(other, self.order))

    def __rsub__(self, other):
        return sub(_coerce(other, self.order), self)

    def __neg__(self):
        return neg(self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return scale(self, other)
        if isinstance(other, Jet):
            return mul(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if other == 0:
                raise ZeroDivisionError("jet divided by zero")
            return scale(self, 1 / Fraction(other))
        if isinstance(other, Jet):
            return div(self, other)
        return NotImplemented

    def __rtruediv__(self, other):
        return div(_coerce(other, self.order), self)

    def __pow__(self, n: int):
        if not isinstance(n, int) or isinstance(n, bool):
            return NotImplemented
        if n < 0:
            return div(Jet.constant(1, self.order), power(self, -n))
        return power(self, n)

    def __call__(self, x0: Union[Scalar, str]) -> Fraction:
        return evaluate(self, x0)

    # display

    def to_text(self) -> str:
        return format_jet(self)

    def __repr__(self) -> str:
        return f"Jet({format_jet(self)})"


_SUPERSCRIPT = str.maketrans("0123456789-", "⁰¹²³⁴⁵⁶⁷⁸⁹⁻")


def format_jet(a: Jet) -> str:
    """Human-readable form, e.g. ``1 + 2x³``; zero coefficients omitted."""
    parts: list[str] = []
    for k, c in enumerate(a.coeffs):
        if not c:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            mono = "x" if k == 1 else "x" + str(k).translate(_SUPERSCRIPT)
            body = mono if mag == 1 else f"{mag}{mono}"
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts) if parts else "0"


def _coerce(value, order: int) -> Jet:
    if isinstance(value, Jet):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return Jet.constant(value, order)
    raise TypeError(f"cannot combine a jet with {type(value).__name__}")


def _check_orders(*jets: Jet) -> int:
    order = jets[0].order
    for j in jets[1:]:
        if j.order != order:
            raise OrderMismatch(f"jet orders differ: {order} vs {j.order}")
    return order


def _common_denominator(cs: Sequence[Fraction]) -> tuple[list[int], int]:
    d = math.lcm(*(c.denominator for c in cs))
    return [c.numerator * (d // c.denominator) for c in cs], d


def add(a: Jet, b: Jet) -> Jet:
    _check_orders(a, b)
    return Jet(tuple(x + y for x, y in zip(a.coeffs, b.coeffs)),
               min(a.valid, b.valid), a.polynomial and b.polynomial)


def sub(a: Jet, b: Jet) -> Jet:
    _check_orders(a, b)
    return Jet(tuple(x - y for x, y in zip(a.coeffs, b.coeffs)),
               min(a.valid, b.valid), a.polynomial and b.polynomial)


def neg(a: Jet) -> Jet:
    return Jet(tuple(-x for x in a.coeffs), a.valid, a.polynomial)


def scale(a: Jet, q: Union[Scalar, str]) -> Jet:
    q = as_rational(q)
    return Jet(tuple(x * q for x in a.coeffs), a.valid, a.polynomial)


def mul(a: Jet, b: Jet) -> Jet:
    """Cauchy product truncated at the common order."""
    n = _check_orders(a, b)
    na, da = _common_denominator(a.coeffs)
    nb, db = _common_denominator(b.coeffs)
    d = da * db
    prod = kernels.convolve(na, nb, n)
    exact = a.polynomial and b.polynomial and a.degree() + b.degree() <= n
    return Jet(tuple(Fraction(c, d) for c in prod), min(a.valid, b.valid), exact)


def power(a: Jet, n: int) -> Jet:
    if n < 0:
        raise ValueError("use division for negative powers")
    result = Jet.constant(1, a.order)
    base = a
    while n:
        if n & 1:
            result = mul(result, base)
        n >>= 1
        if n:
            base = mul(base, base)
    return result


def div(a: Jet, b: Jet) -> Jet:
    """Series quotient ``a / b``; needs ``b`` to have a nonzero constant term."""
    n = _check_orders(a, b)
    if b.coeffs[0] == 0:
        raise ZeroConstantTerm("division by a jet with zero constant term")
    na, da = _common_denominator(a.coeffs)
    nb, db = _common_denominator(b.coeffs)
    # a/b = (na/da) / (nb/db) = (na/nb) * (db/da); quotient returns q_k * nb0**(k+1)
    scaled = kernels.quotient(na, nb, n)
    b0 = nb[0]
    out = []
    pw = b0
    for k in range(n + 1):
        out.append(Fraction(scaled[k] * db, da * pw))
        pw *= b0
    return Jet(tuple(out), min(a.valid, b.valid))


def differentiate(a: Jet) -> Jet:
    """Termwise derivative, re-padded to the same order; one valid order is lost."""
    cs = [k * a.coeffs[k] for k in range(1, a.order + 1)]
    cs.append(Fraction(0))
    return Jet(tuple(cs), a.valid - 1 if not a.polynomial else a.order, a.polynomial)


def integrate(a: Jet) -> Jet:
    """Antiderivative vanishing at 0; the top input coefficient drops off."""
    n = a.order
    cs = [Fraction(0)] + [a.coeffs[k - 1] / k for k in range(1, n + 1)]
    exact = a.polynomial and a.degree() < n
    return Jet(tuple(cs), min(n, a.valid + 1), exact)


def exp(a: Jet) -> Jet:
    """exp of a jet with zero constant term (keeps coefficients rational)."""
    if a.coeffs[0] != 0:
        raise BadConstantTerm("exp needs a zero constant term")
    n = a.order
    ka = [k * a.coeffs[k] for k in range(n + 1)]
    e = [Fraction(1)]
    for k in range(1, n + 1):
        e.append(sum((ka[j] * e[k - j] for j in range(1, k + 1)), Fraction(0)) / k)
    return Jet(tuple(e), a.valid)


def log(a: Jet) -> Jet:
    """log of a jet with unit constant term."""
    if a.coeffs[0] != 1:
        raise BadConstantTerm("log needs constant term 1")
    n = a.order
    out = [Fraction(0)]
    for k in range(1, n + 1):
        acc = a.coeffs[k]
        acc -= sum((j * out[j] * a.coeffs[k - j] for j in range(1, k)), Fraction(0)) / k
        out.append(acc)
    return Jet(tuple(out), a.valid)


def compose(p: Jet, q: Jet) -> Jet:
    """``p(q(x))`` truncated at the common order; ``q`` must vanish at 0."""
    n = _check_orders(p, q)
    if q.coeffs[0] != 0:
        raise NonzeroInnerConstant("inner series must have zero constant term")
    acc = Jet.constant(p.coeffs[n], n)
    for k in range(n - 1, -1, -1):
        prod = mul(acc, q).coeffs
        acc = Jet((prod[0] + p.coeffs[k],) + prod[1:])
    return Jet(acc.coeffs, min(p.valid, q.valid))


def revert(q: Jet) -> Jet:
    """Compositional inverse ``r`` with ``compose(q, r) == x``.

    Coefficients come from Lagrange inversion: ``r_k`` is ``1/k`` times the
    coefficient of ``t**(k-1)`` in ``(t/q(t))**k``.
    """
    n = q.order
    if n < 1 or q.coeffs[0] != 0 or q.coeffs[1] == 0:
        raise NotInvertible("reversion needs q(0) = 0 and q'(0) != 0")
    shifted = Jet(q.coeffs[1:] + (Fraction(0),))
    h = div(Jet.constant(1, n), shifted)
    out = [Fraction(0)]
    hk = Jet.constant(1, n)
    for k in range(1, n + 1):
        hk = mul(hk, h)
        out.append(hk.coeffs[k - 1] / k)
    return Jet(tuple(out), q.valid)


def evaluate(a: Jet, x0: Union[Scalar, str]) -> Fraction:
    """Evaluate the stored polynomial at ``x0`` (Horner)."""
    x0 = as_rational(x0)
    acc = Fraction(0)
    for c in reversed(a.coeffs):
        acc = acc * x0 + c
    return acc


def shift_polynomial(a: Jet, h: Union[Scalar, str]) -> Jet:
    """Exact re-expansion ``a(x + h)`` of a polynomial jet."""
    if not a.polynomial:
        raise ValueError("shifting needs a polynomial-exact jet")
    h = as_rational(h)
    n = a.order
    # Horner over polynomials (x + h); the degree never exceeds n
    result = [Fraction(0)] * (n + 1)
    for c in reversed(a.coeffs):
        nxt = [Fraction(0)] * (n + 1)
        for k in range(n + 1):
            if result[k]:
                nxt[k] += result[k] * h
                if k + 1 <= n:
                    nxt[k + 1] += result[k]
        nxt[0] += c
        result = nxt
    return Jet(tuple(result), polynomial=True)
