"""Benchmark the Monte Carlo transform kernel: numba backend vs numpy fallback.

The hot path is the per-chunk integrand evaluation used by
``quadrature.transform_numeric`` for the rank-2 matrix family.  This script
times both backends on identical sample blocks and on a full 1e7-sample
transform evaluation, and checks that the two backends agree bitwise on the
chunk sums.

Usage: python3 benchmarks/bench_mc.py [--samples N] [--repeats K]
"""

import argparse
import os
import subprocess
import sys
import time

import numpy as np


def time_chunks(samples: int, repeats: int) -> None:
    from berezin import _accel

    rng = np.random.default_rng(12345)
    u = rng.uniform(-1.0, 1.0, size=(samples, 4))
    a1, a2, nu = 0.5, 0.25, 3.0

    backend = "numba" if _accel.USING_NUMBA else "numpy"

    # warm-up (JIT compilation for the numba path)
    _accel.mc_chunk(u[:1000], a1, a2, nu)

    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        s, s2, acc = _accel.mc_chunk(u, a1, a2, nu)
        best = min(best, time.perf_counter() - t0)
    rate = samples / best / 1e6
    print(f"chunk kernel [{backend:>5}]: {samples:>9d} samples  "
          f"best {best * 1e3:8.2f} ms  ({rate:7.1f} M samples/s)")

    ref = _accel._mc_chunk_numpy(u, a1, a2, nu)
    agree = (s == ref[0]) if backend == "numpy" else (
        abs(s - ref[0]) <= 1e-12 * abs(ref[0]))
    print(f"  backend agreement vs numpy reference: "
          f"{'ok' if agree else 'MISMATCH'} (rel diff "
          f"{abs(s - ref[0]) / abs(ref[0]):.2e})")


def time_transform(samples: int) -> None:
    from berezin import _accel, algebra, quadrature

    backend = "numba" if _accel.USING_NUMBA else "numpy"
    d = algebra.make_descriptor("full-real:2")
    quadrature.transform_numeric(d, [0.5, 0.0], 3.0, budget=10 ** 5, seed=1)
    t0 = time.perf_counter()
    res = quadrature.transform_numeric(d, [0.5, 0.0], 3.0,
                                       budget=samples, seed=1)
    dt = time.perf_counter() - t0
    print(f"full transform [{backend:>5}]: {samples:.0e} samples  "
          f"{dt:6.2f} s   value {res.value:.6e}  stderr {res.error:.1e}")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--samples", type=int, default=10 ** 7)
    ap.add_argument("--repeats", type=int, default=3)
    ap.add_argument("--chunk-samples", type=int, default=2 * 10 ** 6)
    args = ap.parse_args()

    disabled = os.environ.get("BEREZIN_DISABLE_NUMBA", "").strip()
    time_chunks(args.chunk_samples, args.repeats)
    time_transform(args.samples)

    if not disabled:
        # re-run this script with the fallback forced, for the comparison
        env = dict(os.environ, BEREZIN_DISABLE_NUMBA="1")
        print()
        sys.stdout.flush()
        subprocess.run([sys.executable, os.path.abspath(__file__),
                        "--samples", str(args.samples),
                        "--repeats", str(args.repeats),
                        "--chunk-samples", str(args.chunk_samples)],
                       env=env, check=True)


if __name__ == "__main__":
    main()
