#!/usr/bin/env python3
"""Benchmark the word kernels: numba JIT vs the plain-Python fallback.

Each backend runs in its own subprocess (the backend is fixed at import
time via QCAT_BACKEND), with one warmup call per workload so numba's
compilation does not count.  Polynomial arithmetic is not benchmarked
here: it runs on exact unbounded integers and has no numba path.

Usage: python benchmarks/bench_backends.py [--enum-n 11] [--audit-cell 5,6,1]
"""

import argparse
import json
import os
import subprocess
import sys
from time import perf_counter

WORKLOADS = ("enumerate", "inversions", "audit")


def run_workloads(enum_n, audit_cell, repeats):
    from qcatalan import words
    from qcatalan._kernels import BACKEND, audit_batch, inv_rows

    k, l, r = audit_cell
    pk = words.enumerate_matrix(k)
    pl = words.enumerate_matrix(l)

    def bench_enumerate():
        return words.enumerate_matrix(enum_n).shape[0]

    def bench_inversions():
        mat = words.enumerate_matrix(enum_n)
        return int(inv_rows(mat).sum())

    def bench_audit():
        keys, inv_sums, status = audit_batch(pk, pl, r)
        return int(inv_sums.sum()) + int(status.sum())

    bodies = {
        "enumerate": bench_enumerate,
        "inversions": bench_inversions,
        "audit": bench_audit,
    }
    timings = {}
    digests = {}
    for name in WORKLOADS:
        body = bodies[name]
        digests[name] = body()  # warmup; triggers JIT under numba
        best = min(_timed(body, repeats))
        timings[name] = best
    return {"backend": BACKEND, "timings": timings, "digests": digests}


def _timed(body, repeats):
    out = []
    for _ in range(repeats):
        start = perf_counter()
        body()
        out.append(perf_counter() - start)
    return out


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--enum-n", type=int, default=11)
    parser.add_argument("--audit-cell", default="5,6,1")
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--worker", action="store_true", help=argparse.SUPPRESS)
    args = parser.parse_args()
    audit_cell = tuple(int(x) for x in args.audit_cell.split(","))

    if args.worker:
        doc = run_workloads(args.enum_n, audit_cell, args.repeats)
        print(json.dumps(doc))
        return

    results = {}
    for backend in ("numba", "numpy"):
        env = dict(os.environ, QCAT_BACKEND=backend)
        proc = subprocess.run(
            [sys.executable, __file__, "--worker",
             "--enum-n", str(args.enum_n),
             "--audit-cell", args.audit_cell,
             "--repeats", str(args.repeats)],
            capture_output=True, text=True, env=env,
        )
        if proc.returncode != 0:
            print(f"{backend} worker failed:\n{proc.stderr}", file=sys.stderr)
            return 1
        results[backend] = json.loads(proc.stdout)

    if results["numba"]["digests"] != results["numpy"]["digests"]:
        print("backends disagree on results, benchmark aborted", file=sys.stderr)
        return 1

    k, l, r = audit_cell
    labels = {
        "enumerate": f"enumerate P_{args.enum_n}",
        "inversions": f"inversions over P_{args.enum_n}",
        "audit": f"audit kernel on P_{k} x P_{l} (r={r})",
    }
    print(f"{'workload':<34} {'numba':>10} {'numpy':>10} {'speedup':>9}")
    for name in WORKLOADS:
        tn = results["numba"]["timings"][name]
        tp = results["numpy"]["timings"][name]
        print(f"{labels[name]:<34} {tn:>9.4f}s {tp:>9.4f}s {tp / tn:>8.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
