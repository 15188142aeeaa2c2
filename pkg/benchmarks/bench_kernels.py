"""Compare the compiled kernel against the pure-Python fallback.

Run as: python benchmarks/bench_kernels.py
"""

from __future__ import annotations

import random
import time

from plactic._kernels import _pure

try:
    from plactic._kernels import _speedups
except ImportError:
    _speedups = None


def time_call(fn, *args, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def bench_insertion(mod, words):
    def run(ws):
        acc = 0
        for w in ws:
            acc += len(mod.insertion_rows(w))
        return acc

    return time_call(run, words)


def bench_enumeration(mod, u, n, m):
    return time_call(mod.count_commuting, u, n, m)


def main():
    rng = random.Random(20240817)
    words = [tuple(rng.randint(1, 6) for _ in range(40)) for _ in range(4000)]

    rows = []
    t_pure, chk_pure = bench_insertion(_pure, words)
    rows.append(("insertion 4000x40 letters", "pure", t_pure, chk_pure))
    if _speedups is not None:
        t_fast, chk_fast = bench_insertion(_speedups, words)
        assert chk_fast == chk_pure
        rows.append(("insertion 4000x40 letters", "cython", t_fast, chk_fast))

    u, n, m = (1, 2), 7, 4
    t_pure, c_pure = bench_enumeration(_pure, u, n, m)
    rows.append((f"count C(12) words n={n} m={m}", "pure", t_pure, c_pure))
    if _speedups is not None:
        t_fast, c_fast = bench_enumeration(_speedups, u, n, m)
        assert c_fast == c_pure
        rows.append((f"count C(12) words n={n} m={m}", "cython", t_fast, c_fast))

    print(f"{'benchmark':<34} {'backend':<8} {'seconds':>10} {'check':>8}")
    for name, backend, seconds, check in rows:
        print(f"{name:<34} {backend:<8} {seconds:>10.4f} {check:>8}")
    if _speedups is None:
        print("compiled backend not built; only the pure fallback was timed")
    else:
        by_name = {}
        for name, backend, seconds, _ in rows:
            by_name.setdefault(name, {})[backend] = seconds
        for name, t in by_name.items():
            if "cython" in t:
                print(f"{name}: cython is {t['pure'] / t['cython']:.1f}x faster")


if __name__ == "__main__":
    main()
