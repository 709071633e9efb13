"""Compare the compiled kernels with the pure-Python fallback.

Run ``python3 benchmarks/bench_kernels.py``.  Kernel timings call both
modules directly; the end-to-end timings run each workload in a fresh
interpreter with and without ``DPVA_PURE_PYTHON``.
"""

from __future__ import annotations

import argparse
import os
import random
import subprocess
import sys
import timeit
from fractions import Fraction

from dpva import _kernels_py
from dpva.generators import random_poly

try:
    from dpva import _ckernels
except ImportError:
    _ckernels = None

END_TO_END = {
    "poisson rv.h2": "from dpva.catalog import CATALOG; from dpva import *; is_poisson(op_to_bivector(CATALOG['rv.h2'].op))",
    "jacobi rt.htilde": "from dpva.catalog import CATALOG; from dpva import check_jacobi; check_jacobi(CATALOG['rt.htilde'].op)",
    "solve rv": (
        "from dpva.acceptance import c6_solver; from dpva.catalog import CATALOG; c6_solver(CATALOG)"
    ),
}


def _products(rng: random.Random):
    a = random_poly(rng, 2, (-3, 3), 4, 60, odd_degree=1).terms
    b = random_poly(rng, 2, (-3, 3), 4, 60, odd_degree=1).terms
    return a, b


def _matrix(rng: random.Random, nrows: int, ncols: int, density: float) -> list[dict]:
    return [
        {c: Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for c in range(ncols) if rng.random() < density}
        for _ in range(nrows)
    ]


def bench_kernels(repeat: int) -> list[tuple[str, float, float | None]]:
    rng = random.Random(0)
    a, b = _products(rng)
    rows = _matrix(rng, 150, 200, 0.05)
    work = {
        "mul_terms 60x60": lambda m: m.mul_terms(a, b),
        "shift_terms": lambda m: m.shift_terms(a, 3),
        "rref 150x200": lambda m: m.rref([dict(r) for r in rows]),
    }
    out = []
    for name, fn in work.items():
        py = min(timeit.repeat(lambda: fn(_kernels_py), number=1, repeat=repeat))
        c = min(timeit.repeat(lambda: fn(_ckernels), number=1, repeat=repeat)) if _ckernels else None
        if _ckernels:
            assert fn(_kernels_py) == fn(_ckernels), name
        out.append((name, py, c))
    return out


def _timed_run(code: str, pure: bool) -> float:
    env = dict(os.environ)
    env.pop("DPVA_PURE_PYTHON", None)
    if pure:
        env["DPVA_PURE_PYTHON"] = "1"
    script = f"import time; t = time.perf_counter(); {code}; print(time.perf_counter() - t)"
    res = subprocess.run([sys.executable, "-c", script], env=env, capture_output=True, text=True, check=True)
    return float(res.stdout.strip().splitlines()[-1])


def bench_end_to_end() -> list[tuple[str, float, float | None]]:
    return [
        (name, _timed_run(code, True), _timed_run(code, False) if _ckernels else None)
        for name, code in END_TO_END.items()
    ]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--no-end-to-end", action="store_true")
    args = ap.parse_args()
    rows = bench_kernels(args.repeat)
    if not args.no_end_to_end:
        rows += bench_end_to_end()
    print(f"{'workload':22s} {'python':>10s} {'compiled':>10s} {'speedup':>8s}")
    for name, py, c in rows:
        if c is None:
            print(f"{name:22s} {py:10.4f} {'n/a':>10s}")
        else:
            print(f"{name:22s} {py:10.4f} {c:10.4f} {py / c:7.2f}x")


if __name__ == "__main__":
    main()
