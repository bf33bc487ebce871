#!/usr/bin/env python3
"""Benchmark the two decode backends (numba kernels vs pure numpy).

Times batched ML decodes over a grid of (q, m) settings with each backend and
prints a table with the per-word decode time and the numba speedup.  The two
backends are also cross-checked for agreement on the benchmark inputs.

Usage:
    python benchmarks/bench_decode.py [--batch 64] [--repeat 5]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from rmq import CodeParams, available_backends, decode_batch, set_backend

CONFIGS = [(2, 6), (2, 10), (4, 6), (4, 8), (8, 5), (8, 7), (16, 4), (16, 5)]


def time_backend(name: str, params: CodeParams, Y: np.ndarray, repeat: int):
    set_backend(name)
    result = decode_batch(params, Y)  # warm-up (JIT compile / cache load)
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        decode_batch(params, Y)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--batch", type=int, default=64,
                        help="received words per decode call (default 64)")
    parser.add_argument("--repeat", type=int, default=5,
                        help="timing repetitions, best-of (default 5)")
    args = parser.parse_args()

    if "numba" not in available_backends():
        print("numba is not importable; nothing to compare")
        return 1

    rng = np.random.default_rng(0)
    header = f"{'q':>3} {'m':>3} {'n':>5} {'batch':>6} " \
             f"{'numpy ms/word':>14} {'numba ms/word':>14} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    try:
        for q, m in CONFIGS:
            params = CodeParams(q, m)
            Y = (rng.normal(size=(args.batch, params.n))
                 + 1j * rng.normal(size=(args.batch, params.n)))
            t_np, (u_np, c_np) = time_backend("numpy", params, Y, args.repeat)
            t_nb, (u_nb, c_nb) = time_backend("numba", params, Y, args.repeat)
            if not np.array_equal(u_np, u_nb):
                raise AssertionError(f"backend disagreement at q={q}, m={m}")
            if np.max(np.abs(c_np - c_nb)) > 1e-9 * params.n:
                raise AssertionError(f"metric disagreement at q={q}, m={m}")
            per_np = 1e3 * t_np / args.batch
            per_nb = 1e3 * t_nb / args.batch
            print(f"{q:>3} {m:>3} {params.n:>5} {args.batch:>6} "
                  f"{per_np:>14.4f} {per_nb:>14.4f} {t_np / t_nb:>7.1f}x")
    finally:
        set_backend("auto")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
