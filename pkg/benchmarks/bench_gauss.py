"""Benchmark the compiled elimination kernel against the pure-Python
fallback on real differential matrices.

Runs rank computations for a window of bidegrees in two subprocesses
(one per backend, selected via MAXCLASS_PURE) and prints a timing
table.  Usage: python3 benchmarks/bench_gauss.py [--kmax 45]
"""
import argparse
import json
import os
import subprocess
import sys
import time

WORKER = """
import json, sys, time
from maxclass.algebra import preset
from maxclass.cochain import differential_matrix
from maxclass.fields import QQ, PrimeField
from maxclass.linalg import BACKEND, rank

kmax = int(sys.argv[1])
rows = []
for name in ("m0", "m2", "l1"):
    alg = preset(name)
    for field_name, field in (("QQ", QQ), ("F5", PrimeField(5))):
        t0 = time.perf_counter()
        cells = 0
        for q in (2, 3):
            for k in range(kmax + 1):
                M = differential_matrix(alg, q, k, field)
                if M.rows and M.cols:
                    rank(M)
                    cells += 1
        rows.append({"algebra": name, "field": field_name,
                     "cells": cells, "seconds": time.perf_counter() - t0})
json.dump({"backend": BACKEND, "rows": rows}, sys.stdout)
"""


def run_backend(pure: bool, kmax: int) -> dict:
    env = dict(os.environ)
    if pure:
        env["MAXCLASS_PURE"] = "1"
    else:
        env.pop("MAXCLASS_PURE", None)
    proc = subprocess.run([sys.executable, "-c", WORKER, str(kmax)],
                          env=env, capture_output=True, text=True, check=True)
    return json.loads(proc.stdout)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--kmax", type=int, default=45)
    args = parser.parse_args()

    t0 = time.perf_counter()
    compiled = run_backend(False, args.kmax)
    pure = run_backend(True, args.kmax)
    if compiled["backend"] == pure["backend"]:
        print(f"note: both runs used the {pure['backend']} backend "
              "(compiled kernel unavailable)")

    print(f"{'algebra':<8} {'field':<5} {'cells':>5} "
          f"{'compiled s':>11} {'pure s':>8} {'speedup':>8}")
    for c, p in zip(compiled["rows"], pure["rows"]):
        ratio = p["seconds"] / c["seconds"] if c["seconds"] else float("inf")
        print(f"{c['algebra']:<8} {c['field']:<5} {c['cells']:>5} "
              f"{c['seconds']:>11.3f} {p['seconds']:>8.3f} {ratio:>7.1f}x")
    print(f"total wall time {time.perf_counter() - t0:.1f}s")
    return 0


if __name__ == "__main__":
    sys.exit(main())
