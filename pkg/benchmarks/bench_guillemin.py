"""Compare the numba and numpy potential kernels on identical workloads.

Run:  python3 benchmarks/bench_guillemin.py [n_points]
"""

import sys
import time

import numpy as np

from toric_diamond import _kernels_numba, _kernels_numpy
from toric_diamond.guillemin import LabeledPolytope, legendre_inverse


def bench_potential(n):
    hexagon = LabeledPolytope.from_facets(
        [((0, 1), -1), ((1, 1), -1), ((1, 0), -1),
         ((0, -1), -1), ((-1, -1), -1), ((-1, 0), -1)])
    U, lam = hexagon.arrays()
    rng = np.random.Generator(np.random.PCG64(0))
    Y = rng.uniform(-0.4, 0.4, size=(n, 2))

    results = {}
    for mod in (_kernels_numba, _kernels_numpy):
        mod.potential_batch(U, lam, Y[:10])  # warm up / compile
        t0 = time.perf_counter()
        vals, grads, hess, minl = mod.potential_batch(U, lam, Y)
        dt = time.perf_counter() - t0
        results[mod.BACKEND_NAME] = (dt, vals)
        print(f"potential_batch[{mod.BACKEND_NAME:>5}]: n={n}  {dt*1e3:8.2f} ms")
    a, b = (results[k][1] for k in ("numba", "numpy"))
    print(f"max |numba - numpy| = {np.nanmax(np.abs(a - b)):.3e}")

    t0 = time.perf_counter()
    for i in range(200):
        legendre_inverse(hexagon, (0.01 * i - 1.0, 0.3))
    dt = time.perf_counter() - t0
    print(f"legendre_inverse x200 (active backend): {dt*1e3:8.2f} ms")


if __name__ == "__main__":
    bench_potential(int(sys.argv[1]) if len(sys.argv) > 1 else 200_000)
