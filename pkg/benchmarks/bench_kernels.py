"""Benchmark the compiled kernel lane against the pure-Python lane.

Times the primitives directly (both modules are importable side by side)
and the full hull/enumeration drivers with the lane forced via module
state.  Run as `python benchmarks/bench_kernels.py`.
"""

import random
import time
from contextlib import contextmanager

from okbodies import _kernel_py as pyk
from okbodies import kernel

try:
    from okbodies import _speedups as cyk
except ImportError:
    cyk = None


@contextmanager
def forced_lane(name):
    old = kernel._FORCED
    kernel._FORCED = name
    try:
        yield
    finally:
        kernel._FORCED = old


def timeit(fn, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_hull2d(rng):
    pts = list({(rng.randint(-4000, 4000), rng.randint(-4000, 4000))
                for _ in range(20000)})
    return {
        "python": timeit(lambda: pyk.hull2d_indices(pts)),
        "compiled": timeit(lambda: cyk.hull2d_indices(pts)) if cyk else None,
    }


def bench_lattice(rng):
    # simplex-times-segment lattice points at a large dilation
    normals = [(1, 0, 0), (0, 1, 0), (-1, -1, 0), (0, 0, 1), (0, 0, -1)]
    offsets = [0, 0, -60, 0, -60]
    lo, hi = [0, 0, 0], [60, 60, 60]
    return {
        "python": timeit(lambda: pyk.lattice_points(normals, offsets, lo, hi)),
        "compiled": (timeit(lambda: cyk.lattice_points(normals, offsets, lo, hi))
                     if cyk else None),
    }


def bench_hull3d():
    pts = pyk.lattice_points(
        [(1, 0, 0), (0, 1, 0), (-1, -1, 0), (0, 0, 1), (0, 0, -1)],
        [0, 0, -40, 0, -40], [0, 0, 0], [40, 40, 40])
    out = {}
    with forced_lane("python"):
        out["python"] = timeit(lambda: kernel.hull3d_facets(pts), repeat=1)
    if cyk:
        with forced_lane("auto"):
            out["compiled"] = timeit(lambda: kernel.hull3d_facets(pts), repeat=1)
    else:
        out["compiled"] = None
    return out


def bench_bruteforce_body():
    from okbodies import toric as T

    fib = T.product_fibration(T.projective_plane(), T.projective_line())
    D = T.divisor(fib.total, [0, 0, 1, 0, 1])
    flag = T.product_flag(fib, T.ToricFlag(0, (0, 1)), T.ToricFlag(0, (0,)))
    out = {}
    with forced_lane("python"):
        out["python"] = timeit(
            lambda: T.okounkov_body_bruteforce(fib.total, D, flag, 20), repeat=1)
    if cyk:
        with forced_lane("auto"):
            out["compiled"] = timeit(
                lambda: T.okounkov_body_bruteforce(fib.total, D, flag, 20),
                repeat=1)
    else:
        out["compiled"] = None
    return out


def main():
    rng = random.Random(7)
    rows = [
        ("hull2d, 20k int points", bench_hull2d(rng)),
        ("lattice points, 61^3 box", bench_lattice(rng)),
        ("hull3d facets, dilated simplex prism", bench_hull3d()),
        ("brute-force body, 3-fold at m=20", bench_bruteforce_body()),
    ]
    print(f"{'benchmark':<40} {'python':>10} {'compiled':>10} {'speedup':>9}")
    for name, res in rows:
        py = res["python"]
        cy = res["compiled"]
        if cy is None:
            print(f"{name:<40} {py:>9.4f}s {'n/a':>10} {'-':>9}")
        else:
            print(f"{name:<40} {py:>9.4f}s {cy:>9.4f}s {py / cy:>8.1f}x")
    if cyk is None:
        print("\ncompiled lane not built; rerun after `pip install -e .`")


if __name__ == "__main__":
    main()
