"""Pure-Python integer kernels behind jet multiplication and division.

Both kernels work on integer numerator sequences; the caller clears and
restores denominators. The compiled module ``_ckernels`` exposes the same
two functions with identical results.
"""

from __future__ import annotations


def convolve(a: list[int], b: list[int], n: int) -> list[int]:
    """Cauchy product of ``a`` and ``b`` truncated to indices ``0..n``."""
    out = [0] * (n + 1)
    lb = len(b)
    for i in range(min(len(a), n + 1)):
        ai = a[i]
        if not ai:
            continue
        for j in range(min(lb, n + 1 - i)):
            out[i + j] += ai * b[j]
    return out


def quotient(a: list[int], b: list[int], n: int) -> list[int]:
    """Scaled series quotient.

    Returns ``p`` with ``p[k] = q[k] * b[0]**(k + 1)`` where ``q = a / b``
    as power series. Every ``p[k]`` is an integer, so no rational
    arithmetic happens inside the recursion.
    """
    b0 = b[0]
    if b0 == 0:
        raise ZeroDivisionError("series quotient with zero constant term")
    powers = [1] * (n + 1)
    for k in range(1, n + 1):
        powers[k] = powers[k - 1] * b0
    p: list[int] = []
    for k in range(n + 1):
        acc = a[k] * powers[k]
        for i in range(k):
            bk = b[k - i]
            if bk:
                acc -= p[i] * powers[k - 1 - i] * bk
        p.append(acc)
    return p
