"""Compare the compiled and pure-Python word kernels on ball enumeration and reduction.

    python bench/bench_kernel.py [--radius 8] [--words 2000]
"""

from __future__ import annotations

import argparse
import random
import time

from coxtwist.instances import catalog
from coxtwist.kernel import BACKEND
from coxtwist.words import WordEngine


def timed(fn, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--radius", type=int, default=8)
    ap.add_argument("--words", type=int, default=2000)
    ap.add_argument("--length", type=int, default=40)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    backends = ["python"] + (["cython"] if BACKEND == "cython" else [])
    if BACKEND != "cython":
        print("compiled kernel not built; timing the pure-Python kernel only")
    rng = random.Random(args.seed)
    print(f"{'instance':8} {'task':14} " + " ".join(f"{b:>10}" for b in backends) + "   speedup")
    for name in ("Q3", "Q5", "E3", "F4G"):
        G = catalog(name)
        n = len(G.generators)
        words = [tuple(rng.randrange(n) for _ in range(args.length)) for _ in range(args.words)]
        engines = {b: WordEngine(G, b) for b in backends}
        radius = min(args.radius, 24) if name == "F4G" else args.radius
        rows = {
            f"ball r={radius}": lambda E: len(E.enumerate_ball(radius, cap=10**7)),
            f"reduce x{args.words}": lambda E: [E.kernel.reduce(w) for w in words],
        }
        for task, fn in rows.items():
            times = {}
            results = {}
            for b, E in engines.items():
                times[b], results[b] = timed(lambda: fn(E))
            if len({str(r) for r in results.values()}) != 1:
                raise SystemExit(f"backends disagree on {name} {task}")
            speed = times["python"] / times["cython"] if "cython" in times else 1.0
            cols = " ".join(f"{times[b]:10.4f}" for b in backends)
            print(f"{name:8} {task:14} {cols}   {speed:6.1f}x")


if __name__ == "__main__":
    main()
