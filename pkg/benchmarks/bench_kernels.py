#!/usr/bin/env python3
"""Compare the compiled and numpy counting backends on the standard workloads.

Usage:
    python benchmarks/bench_kernels.py [--repeat 3] [--quick] [--json out.json]
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from slopecount.kernels import available_backends
from slopecount.pointcount import count_zeros

WORKLOADS = [
    # (label, n, q, ideal, method)
    ("F2 n=6 I poly", 6, 2, "I", "poly"),
    ("F2 n=7 J graph", 7, 2, "J", "graph"),
    ("F2 n=7 J poly", 7, 2, "J", "poly"),
    ("F3 n=5 I poly", 5, 3, "I", "poly"),
    ("F5 n=5 I poly", 5, 5, "I", "poly"),
]

QUICK = [w for w in WORKLOADS if w[1] <= 6 or w[2] == 3]


def bench(n, q, ideal, method, backend, repeat):
    best, zeros = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        report = count_zeros(n, q, ideal, workers=1, method=method, backend=backend, crosscheck_samples=0)
        best = min(best, time.perf_counter() - t0)
        zeros = report.zero_count
    return best, zeros


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="skip the 2M+ point workloads")
    ap.add_argument("--json", default=None, help="also write results here")
    args = ap.parse_args(argv)

    backends = available_backends()
    rows = []
    print(f"{'workload':<18}" + "".join(f"{b:>12}" for b in backends) + f"{'speedup':>10}{'zeros':>10}")
    for label, n, q, ideal, method in QUICK if args.quick else WORKLOADS:
        times, counts = {}, set()
        for b in backends:
            times[b], zeros = bench(n, q, ideal, method, b, args.repeat)
            counts.add(zeros)
        if len(counts) != 1:
            print(f"backends disagree on {label}: {counts}", file=sys.stderr)
            return 1
        speedup = times["numpy"] / times["cython"] if "cython" in times else 1.0
        print(f"{label:<18}" + "".join(f"{times[b]:>11.3f}s" for b in backends) + f"{speedup:>9.1f}x{counts.pop():>10}")
        rows.append({"workload": label, "seconds": times, "speedup": speedup})
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(rows, fh, indent=2)
    return 0


if __name__ == "__main__":
    sys.exit(main())
