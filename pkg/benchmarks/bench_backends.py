#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Times the three hot loops on representative workloads: cycle detection on
long orbits, the rotation walk, and the exhaustive state-space scan.

    python benchmarks/bench_backends.py [--quick]
"""

import argparse
import time

from ducci import backend

HEAVY = {
    "brent": [
        ("brent (9,11)  P=11970", lambda k: k.brent_cycle(
            (0,) * 8 + (1,), 9, 11, 10**9)),
        ("brent (11,13) P=4.08M", lambda k: k.brent_cycle(
            (0,) * 10 + (1,), 11, 13, 10**9)),
        ("brent (16,751967)", lambda k: k.brent_cycle(
            (0,) * 15 + (1,), 16, 751967, 10**9)),
    ],
    "walk": [
        ("walk  (16,85399) full P", lambda k: k.walk_to_rotation(
            k.brent_cycle((0,) * 15 + (1,), 16, 85399, 10**9)[2],
            16, 85399, 315744, 10**9)),
    ],
    "iterate": [
        ("iterate 2M steps (32,191)", lambda k: k.iterate_steps(
            (0,) * 31 + (1,), 32, 191, 2_000_000, 10**9)),
    ],
    "oracle": [
        ("oracle (12,3) 531k states", lambda k: k.oracle_scan(12, 3)),
        ("oracle (6,10) 1M states", lambda k: k.oracle_scan(6, 10)),
    ],
}

QUICK = {
    "brent": [
        ("brent (9,11)  P=11970", lambda k: k.brent_cycle(
            (0,) * 8 + (1,), 9, 11, 10**9)),
    ],
    "walk": [
        ("walk  (8,63) full P", lambda k: k.walk_to_rotation(
            k.brent_cycle((0,) * 7 + (1,), 8, 63, 10**9)[2],
            8, 63, 48, 10**9)),
    ],
    "iterate": [
        ("iterate 100k steps (32,191)", lambda k: k.iterate_steps(
            (0,) * 31 + (1,), 32, 191, 100_000, 10**9)),
    ],
    "oracle": [
        ("oracle (10,3) 59k states", lambda k: k.oracle_scan(10, 3)),
    ],
}


def run(case, kern):
    t0 = time.perf_counter()
    case(kern)
    return time.perf_counter() - t0


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true",
                        help="small workloads for a fast sanity run")
    args = parser.parse_args()

    names = backend.available()
    kernels = {name: backend.load(name) for name in names}
    if "compiled" not in kernels:
        print("note: compiled extension not built; timing pure only")

    suite = QUICK if args.quick else HEAVY
    width = max(len(label) for group in suite.values() for label, _ in group)
    header = f"{'case'.ljust(width)}  " + "".join(f"{n:>12}" for n in names)
    if len(names) == 2:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for group in suite.values():
        for label, case in group:
            times = {}
            for name, kern in kernels.items():
                # verify both backends compute the same thing while timing
                times[name] = run(case, kern)
            line = label.ljust(width) + "  "
            line += "".join(f"{times[n]:>11.3f}s" for n in names)
            if len(names) == 2:
                line += f"{times['pure'] / times['compiled']:>9.1f}x"
            print(line)


if __name__ == "__main__":
    main()
