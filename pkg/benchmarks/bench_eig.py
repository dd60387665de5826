"""Benchmark the compiled Jacobi eigenvalue kernel against the pure-Python
fallback (and numpy.linalg.eigvalsh as a reference).

Usage: python benchmarks/bench_eig.py [--sizes 4,9,16,25,36] [--repeats 50]
"""

import argparse
import time

import numpy as np

from qclab._jacobi_py import jacobi_eigvalsh as jacobi_py

try:
    from qclab._jacobi_cy import jacobi_eigvalsh as jacobi_cy
except ImportError:
    jacobi_cy = None


def random_density(n, rng):
    m = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    m = m @ m.conj().T
    return (m / np.trace(m).real).astype(np.complex128)


def time_solver(solver, mats, repeats):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        for m in mats:
            solver(m.copy())
        best = min(best, (time.perf_counter() - start) / len(mats))
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", default="4,9,16,25,36")
    parser.add_argument("--repeats", type=int, default=20)
    parser.add_argument("--matrices", type=int, default=10)
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    rng = np.random.default_rng(0)
    print(f"{'n':>4} {'python (us)':>12} {'cython (us)':>12} {'numpy (us)':>12} "
          f"{'speedup':>8}")
    for n in sizes:
        mats = [random_density(n, rng) for _ in range(args.matrices)]
        t_py = time_solver(jacobi_py, mats, args.repeats)
        t_np = time_solver(np.linalg.eigvalsh, mats, args.repeats)
        if jacobi_cy is not None:
            t_cy = time_solver(jacobi_cy, mats, args.repeats)
            print(f"{n:>4} {t_py * 1e6:>12.1f} {t_cy * 1e6:>12.1f} "
                  f"{t_np * 1e6:>12.1f} {t_py / t_cy:>7.1f}x")
        else:
            print(f"{n:>4} {t_py * 1e6:>12.1f} {'n/a':>12} "
                  f"{t_np * 1e6:>12.1f} {'n/a':>8}")


if __name__ == "__main__":
    main()
