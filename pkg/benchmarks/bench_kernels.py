"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--nmin 6] [--nmax 10] [--repeat 5]
"""

import argparse
import timeit

import numpy as np

from discretecs import _kernels_py as py
from discretecs.gf2n import PRIMITIVE_POLYS

try:
    from discretecs import _kernels as cy
except ImportError:
    cy = None


def cases(n, rng):
    q = 1 << n
    bra = rng.normal(size=q) + 1j * rng.normal(size=q)
    ket = rng.normal(size=q) + 1j * rng.normal(size=q)
    block = rng.normal(size=(q, q)) + 1j * rng.normal(size=(q, q))
    images = rng.integers(0, q, size=n)
    poly = PRIMITIVE_POLYS[n]
    return {
        "power_table": lambda k: k.power_table(poly, n),
        "linear_table": lambda k: k.linear_table(images, n),
        "fwht (q x q)": lambda k: k.fwht(block.copy()),
        "q grid amplitudes": lambda k: k.displacement_amplitudes(bra, ket),
    }


def best(fn, repeat):
    number = 3
    return min(timeit.repeat(fn, number=number, repeat=repeat)) / number


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--nmin", type=int, default=6)
    ap.add_argument("--nmax", type=int, default=10)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if cy is None:
        print("compiled extension not built; showing the Python fallback only")
    rng = np.random.default_rng(0)
    print(f"{'kernel':<20}{'n':>3}{'python [ms]':>14}{'cython [ms]':>14}{'speedup':>10}")
    for n in range(args.nmin, args.nmax + 1):
        for name, fn in cases(n, rng).items():
            tp = best(lambda: fn(py), args.repeat) * 1e3
            if cy is None:
                print(f"{name:<20}{n:>3}{tp:>14.3f}{'-':>14}{'-':>10}")
                continue
            tc = best(lambda: fn(cy), args.repeat) * 1e3
            print(f"{name:<20}{n:>3}{tp:>14.3f}{tc:>14.3f}{tp / tc:>9.1f}x")


if __name__ == "__main__":
    main()
