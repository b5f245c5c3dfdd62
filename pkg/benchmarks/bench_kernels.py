"""Compare the compiled and numpy moment kernels.

    python benchmarks/bench_kernels.py [--count N] [--repeat R]
"""
from __future__ import annotations

import argparse
import time

import numpy as np

from momentkit import numeric
from momentkit.numeric.sampling import moment_batch, unit_batch


def bench(backend: str, x, y, repeat: int, eigen: bool) -> float:
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        moment_batch("natural", 1.5, 0.75, x, y, eigen=eigen, backend=backend)
        best = min(best, time.perf_counter() - start)
    return best


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--count", type=int, default=100_000)
    p.add_argument("--repeat", type=int, default=5)
    args = p.parse_args()
    rng = np.random.default_rng(0)
    x, y = unit_batch(rng, args.count, 2), unit_batch(rng, args.count, 2)
    backends = ["numpy"] + (["cython"] if numeric.BACKEND == "cython" else [])
    print(f"{args.count} samples, best of {args.repeat}; default backend: {numeric.BACKEND}")
    for eigen in (False, True):
        times = {be: bench(be, x, y, args.repeat, eigen) for be in backends}
        label = "diagonal + eigenvalues" if eigen else "diagonal only"
        row = "  ".join(f"{be} {t * 1e3:8.1f} ms" for be, t in times.items())
        speedup = f"  speedup {times['numpy'] / times['cython']:.1f}x" if "cython" in times else ""
        print(f"{label:24s} {row}{speedup}")
    if "cython" in backends:
        d1, e1 = moment_batch("natural", 1.5, 0.75, x, y, backend="numpy")
        d2, e2 = moment_batch("natural", 1.5, 0.75, x, y, backend="cython")
        print(f"max |diff|: diagonal {np.abs(d1 - d2).max():.2e}, eigenvalues {np.abs(e1 - e2).max():.2e}")


if __name__ == "__main__":
    main()
