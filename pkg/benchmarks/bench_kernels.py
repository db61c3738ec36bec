#!/usr/bin/env python3
"""Benchmark the pure-Python kernel against the compiled extension.

    python3 benchmarks/bench_kernels.py [--cases 200]

Both backends run the same seeded workloads; outputs are also compared so
a timing run doubles as a parity check.
"""

import argparse
import time

from activityforge.puzzle import kernel
from activityforge.rng import Rng

POOL = [
    "GRAPE", "APPLE", "PEACH", "LEMON", "MELON", "MANGO", "PLUM", "PEAR",
    "CHERRY", "BANANA", "ORANGE", "TOMATO", "CARROT", "ONION", "POTATO",
    "RADISH", "CELERY", "GARLIC", "GINGER", "SPINACH",
]
ALL_DIRS = [(0, 1), (1, 1), (1, 0), (1, -1), (0, -1), (-1, -1), (-1, 0), (-1, 1)]


def crossword_cases(n):
    cases = []
    for i in range(n):
        rng = Rng(i * 101 + 7)
        idxs = list(range(len(POOL)))
        rng.shuffle(idxs)
        words = sorted((POOL[j] for j in idxs[: 4 + rng.below(9)]),
                       key=lambda w: (-len(w), w))
        cases.append((words, 25, 50_000, i))
    return cases


def wordsearch_cases(n):
    cases = []
    for i in range(n):
        rng = Rng(i * 131 + 3)
        idxs = list(range(len(POOL)))
        rng.shuffle(idxs)
        size = 12 + rng.below(8)
        words = sorted((POOL[j] for j in idxs[: 4 + rng.below(8)] if len(POOL[j]) <= size),
                       key=lambda w: (-len(w), w))
        cases.append((words, size, ALL_DIRS, i))
    return cases


def run(fn, cases):
    started = time.perf_counter()
    results = [fn(*case) for case in cases]
    return time.perf_counter() - started, results


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--cases", type=int, default=200)
    args = parser.parse_args()

    backends = kernel.available_backends()
    print(f"active backend: {kernel.BACKEND}; available: {', '.join(backends)}")
    if "compiled" not in backends:
        print("compiled kernel not built; run `pip install -e .` with Cython available")

    for name, maker in (("crossword_layout", crossword_cases),
                        ("wordsearch_layout", wordsearch_cases)):
        cases = maker(args.cases)
        timings = {}
        outputs = {}
        for backend_name, module in backends.items():
            elapsed, results = run(getattr(module, name), cases)
            timings[backend_name] = elapsed
            outputs[backend_name] = results
        line = f"{name:20s} " + "  ".join(
            f"{b}: {t:7.3f}s ({args.cases / t:7.1f}/s)" for b, t in timings.items()
        )
        if len(outputs) == 2:
            identical = outputs["pure"] == outputs["compiled"]
            speedup = timings["pure"] / timings["compiled"]
            line += f"  speedup: {speedup:4.1f}x  identical: {identical}"
            if not identical:
                raise SystemExit(f"{name}: backends disagree!")
        print(line)


if __name__ == "__main__":
    main()
