"""Benchmark the root-continuation kernels: compiled vs pure Python.

Usage: python benchmarks/bench_tracking.py [--steps N] [--repeats R]

Times one full tracked loop per puncture for each available backend and
prints the per-loop wall time and the speedup.
"""

import argparse
import time

from bringcover.quintic import b_from_t, roots5
from bringcover.tracking import TrackingConfig, available_backends, contour, loop_spec


def bench_backend(backend, args_per_loop, repeats):
    best = {}
    for name, args in args_per_loop.items():
        times = []
        for _ in range(repeats):
            start = time.perf_counter()
            backend.track_path(*args)
            times.append(time.perf_counter() - start)
        best[name] = min(times)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--steps", type=int, default=4096)
    parser.add_argument("--repeats", type=int, default=5)
    ns = parser.parse_args()

    cfg = TrackingConfig(steps=ns.steps)
    b0 = b_from_t(complex(cfg.base_t), cfg.branch)
    xs0 = roots5(1.0, b0)
    args_per_loop = {}
    for p in (0, 1, "inf"):
        ts = contour(loop_spec(cfg, p))
        budget = int(cfg.budget_factor * (len(ts) - 1))
        args_per_loop[f"loop {p}"] = (
            ts, b0, xs0, cfg.tol_residual, cfg.tol_match_ratio,
            cfg.max_depth, budget)

    backends = available_backends()
    results = {name: bench_backend(impl, args_per_loop, ns.repeats)
               for name, impl in backends.items()}

    print(f"steps per circle: {ns.steps}, best of {ns.repeats} runs\n")
    header = f"{'loop':<10}" + "".join(f"{name:>16}" for name in results)
    if len(results) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for loop_name in args_per_loop:
        row = f"{loop_name:<10}"
        for name in results:
            row += f"{results[name][loop_name] * 1e3:>13.2f} ms"
        if len(results) == 2:
            pure = results["pure-python"][loop_name]
            fast = results["compiled"][loop_name]
            row += f"{pure / fast:>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
