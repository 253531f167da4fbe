"""Timing comparison of the eigensolver backends.

The jitted kernel pays a one-time compile cost on first call, so each
backend gets a warm-up solve before timing starts.
"""
import argparse
import time

import numpy as np

from sigspec.spectra import available_backends, symmetric_eigenvalues


def bench(backend, sizes, repeats):
    rows = []
    for n in sizes:
        rng = np.random.default_rng(n)
        a = rng.normal(size=(n, n))
        a = (a + a.T) / 2.0
        symmetric_eigenvalues(a, backend=backend)  # warm-up / jit compile
        best = float("inf")
        for _ in range(repeats):
            start = time.perf_counter()
            spec = symmetric_eigenvalues(a, backend=backend)
            best = min(best, time.perf_counter() - start)
        err = np.max(np.abs(np.array(spec.values)
                            - np.sort(np.linalg.eigvalsh(a))[::-1]))
        rows.append((n, best, spec.sweeps, err))
    return rows


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", type=int, nargs="+",
                        default=[16, 32, 64, 128, 256])
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    backends = available_backends()
    print(f"backends: {', '.join(backends)}")
    results = {b: bench(b, args.sizes, args.repeats) for b in backends}

    header = f"{'n':>6}"
    for b in backends:
        header += f"  {b + ' (s)':>12}  {'sweeps':>6}"
    header += f"  {'max err':>9}"
    if len(backends) == 2:
        header += f"  {'speedup':>8}"
    print(header)
    for i, n in enumerate(args.sizes):
        line = f"{n:>6}"
        err = 0.0
        for b in backends:
            row = results[b][i]
            line += f"  {row[1]:>12.6f}  {row[2]:>6}"
            err = max(err, row[3])
        line += f"  {err:>9.2e}"
        if len(backends) == 2:
            t0 = results[backends[0]][i][1]
            t1 = results[backends[1]][i][1]
            line += f"  {t1 / t0:>7.2f}x"
        print(line)


if __name__ == "__main__":
    main()
