"""Timing comparison of the two F2 elimination backends.

Runs the four kernel routines (rank, rref, kernel_basis, reduce_batch) on
seeded random matrices against both the pure-Python module and the compiled
extension, then times one end-to-end Betti-number computation per backend in
a subprocess so the import-time backend selection is exercised for real.

Usage:
    python3 benchmarks/bench_f2.py [--repeat N] [--seed S] [--skip-e2e]
"""

from __future__ import annotations

import argparse
import os
import random
import subprocess
import sys
import time

from rzformal import _f2pure

try:
    from rzformal import _f2core
except ImportError:
    _f2core = None

SIZES = [(60, 64), (200, 256), (400, 512), (800, 1024)]

E2E_SNIPPET = """
import random, time
from rzformal.f2 import BACKEND
from rzformal.moment_angle import hochster_real_betti
from rzformal.simplicial import SimplicialComplex

rng = random.Random(7)
m = 7
facets = [[v] for v in range(1, m + 1)]
for _ in range(12):
    size = rng.randint(2, 4)
    facets.append(sorted(rng.sample(range(1, m + 1), size)))
k = SimplicialComplex.from_facets(m, facets)
t0 = time.perf_counter()
table = hochster_real_betti(k)
dt = time.perf_counter() - t0
print(f"{BACKEND} total={table.total} time={dt * 1e3:.1f}ms")
"""


def random_rows(rng: random.Random, nrows: int, ncols: int) -> list[int]:
    return [rng.getrandbits(ncols) for _ in range(nrows)]


def best_of(repeat: int, fn, *args) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--seed", type=int, default=2026)
    parser.add_argument("--skip-e2e", action="store_true")
    args = parser.parse_args()

    if _f2core is None:
        print("compiled extension not built; nothing to compare", file=sys.stderr)
        return 1

    rng = random.Random(args.seed)
    header = f"{'matrix':>10}  {'op':<12} {'pure':>10} {'compiled':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for nrows, ncols in SIZES:
        rows = random_rows(rng, nrows, ncols)
        ech, pivots = _f2pure.rref(rows, ncols)
        vecs = random_rows(rng, nrows, ncols)
        cases = [
            ("rank", (rows, ncols)),
            ("rref", (rows, ncols)),
            ("kernel_basis", (rows, ncols)),
            ("reduce_batch", (vecs, ech, pivots)),
        ]
        for op, call_args in cases:
            t_pure = best_of(args.repeat, getattr(_f2pure, op), *call_args)
            t_core = best_of(args.repeat, getattr(_f2core, op), *call_args)
            print(
                f"{nrows:>5}x{ncols:<4}  {op:<12} {t_pure * 1e3:>8.2f}ms"
                f" {t_core * 1e3:>8.2f}ms {t_pure / t_core:>7.1f}x"
            )

    if not args.skip_e2e:
        print()
        print("end-to-end: Betti numbers of a random 7-vertex complex")
        for env_extra in ({"RZFORMAL_PURE": "1"}, {}):
            env = dict(os.environ)
            env.pop("RZFORMAL_PURE", None)
            env.update(env_extra)
            out = subprocess.run(
                [sys.executable, "-c", E2E_SNIPPET],
                env=env,
                capture_output=True,
                text=True,
                check=True,
            )
            print("  " + out.stdout.strip())
    return 0


if __name__ == "__main__":
    sys.exit(main())
