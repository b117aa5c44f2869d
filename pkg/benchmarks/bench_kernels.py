"""Compare the compiled and pure-Python integer kernels.

Usage: python3 benchmarks/bench_kernels.py [--orders 10 40 80] [--repeat 5]

Kernel timings call both modules directly on the same inputs and check
that they agree. The jet-level timing runs the s-hierarchy and a
canonical reduction in a subprocess per backend, selected through
ABELINV_PURE, since the backend is fixed at import.
"""

from __future__ import annotations

import argparse
import os
import random
import subprocess
import sys
import timeit

from abelinv import _pykernels

try:
    from abelinv import _ckernels
except ImportError:
    _ckernels = None

JET_SNIPPET = """
import time
from abelinv.rng import trial_rng
from abelinv.invariants import s_hierarchy
from abelinv.canonical import canonicalize
from abelinv.kernels import BACKEND
g = trial_rng(1, 0)
eq = g.equation({order})
t0 = time.perf_counter()
for _ in range({repeat}):
    s_hierarchy(eq, 4)
    canonicalize(eq)
print(BACKEND, (time.perf_counter() - t0) / {repeat})
"""


def operands(n: int, bits: int, seed: int) -> tuple[list[int], list[int]]:
    r = random.Random(seed)
    a = [r.randrange(-(1 << bits), 1 << bits) for _ in range(n + 1)]
    b = [r.randrange(-(1 << bits), 1 << bits) for _ in range(n + 1)]
    b[0] = b[0] or 1
    return a, b


def time_kernel(mod, name: str, a, b, n: int, repeat: int) -> float:
    fn = getattr(mod, name)
    return min(timeit.repeat(lambda: fn(a, b, n), number=20, repeat=repeat)) / 20


def jet_level(order: int, repeat: int) -> dict[str, float]:
    out = {}
    for pure in ("1", "0"):
        env = dict(os.environ, ABELINV_PURE=pure)
        proc = subprocess.run([sys.executable, "-c", JET_SNIPPET.format(order=order, repeat=repeat)],
                              env=env, capture_output=True, text=True, check=True)
        backend, secs = proc.stdout.split()
        out[backend] = float(secs)
    return out


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--orders", type=int, nargs="+", default=[10, 40, 80])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if _ckernels is None:
        print("compiled kernels not built; only the pure-Python backend is available")
        return 1
    print(f"{'kernel':<10}{'order':>6}{'bits':>6}{'python us':>12}{'cython us':>12}{'speedup':>9}")
    for name in ("convolve", "quotient"):
        for n in args.orders:
            for bits in (8, 64):
                a, b = operands(n, bits, n + bits)
                if name == "quotient":
                    b[0] = 1 if bits == 8 else b[0]  # unit leading term keeps the scaled quotient small
                assert _pykernels.__dict__[name](a, b, n) == _ckernels.__dict__[name](a, b, n)
                tp = time_kernel(_pykernels, name, a, b, n, args.repeat)
                tc = time_kernel(_ckernels, name, a, b, n, args.repeat)
                print(f"{name:<10}{n:>6}{bits:>6}{tp * 1e6:>12.1f}{tc * 1e6:>12.1f}{tp / tc:>8.2f}x")
    print()
    print(f"{'jet level (s-hierarchy n<=4 + canonicalize)':<46}{'python ms':>10}{'cython ms':>10}")
    for n in (10, 20):
        t = jet_level(n, 3)
        print(f"{'order ' + str(n):<46}{t['python'] * 1e3:>10.1f}{t['cython'] * 1e3:>10.1f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
