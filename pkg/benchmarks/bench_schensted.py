#!/usr/bin/env python3
"""Benchmark the insertion kernel: compiled extension vs pure Python.

Builds tableaux for a batch of pseudorandom words through both backends
and reports throughput.  Run from a checkout where the extension was
built in place (python setup.py build_ext --inplace), otherwise only the
pure backend is timed.
"""

import argparse
import pathlib
import random
import sys
import time

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from plactic import _schensted_py


def run(backend, words, repeats):
    t0 = time.perf_counter()
    acc = 0
    for _ in range(repeats):
        for w in words:
            acc += len(backend.word_tableau(w))
    elapsed = time.perf_counter() - t0
    letters = repeats * sum(len(w) for w in words)
    return elapsed, letters / elapsed, acc


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--rank", type=int, default=4)
    parser.add_argument("--length", type=int, default=40)
    parser.add_argument("--count", type=int, default=2000)
    parser.add_argument("--repeats", type=int, default=5)
    parser.add_argument("--seed", type=int, default=20240601)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    words = [
        tuple(rng.randint(1, args.rank) for _ in range(args.length))
        for _ in range(args.count)
    ]

    backends = [("python", _schensted_py)]
    try:
        from plactic import _schensted

        backends.append(("cython", _schensted))
    except ImportError:
        print("compiled extension not built; timing the pure backend only")

    results = {}
    for name, mod in backends:
        elapsed, rate, acc = run(mod, words, args.repeats)
        results[name] = (elapsed, rate)
        print(f"{name:>7}: {elapsed:8.3f} s   {rate/1e6:8.2f} M letters/s   (checksum {acc})")

    if len(results) == 2:
        speedup = results["python"][0] / results["cython"][0]
        print(f"speedup: {speedup:.1f}x")


if __name__ == "__main__":
    main()
