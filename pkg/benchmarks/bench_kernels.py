"""Compare the numba and pure-python kernel backends.

Runs the containment and sum-indecomposability kernels over a fixed random
workload in a subprocess per backend (the backend is chosen at import time
via PERMGROWTH_BACKEND), then prints a timing table.

Usage: python benchmarks/bench_kernels.py [--lengths 30 60 120] [--trials 200]
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys

_WORKER = """
import json, random, sys, time
import numpy as np
from permgrowth._kernels import BACKEND, contains_arrays, is_si_array

lengths = json.loads(sys.argv[1])
trials = int(sys.argv[2])
rng = random.Random(20260824)

def perm(n):
    vals = list(range(1, n + 1))
    rng.shuffle(vals)
    return np.array(vals, dtype=np.int64)

workload = {
    n: [(perm(min(8, n // 2 + 1)), perm(n)) for _ in range(trials)]
    for n in lengths
}

# first call pays any compilation cost; time it separately
warm_start = time.perf_counter()
contains_arrays(workload[lengths[0]][0][0], workload[lengths[0]][0][1])
is_si_array(workload[lengths[0]][0][1])
warmup = time.perf_counter() - warm_start

rows = {}
for n, cases in workload.items():
    t0 = time.perf_counter()
    hits = sum(1 for pat, text in cases if contains_arrays(pat, text))
    t1 = time.perf_counter()
    si = sum(1 for _, text in cases if is_si_array(text))
    t2 = time.perf_counter()
    rows[n] = {"contains_s": t1 - t0, "is_si_s": t2 - t1,
               "hits": hits, "si": si}

print(json.dumps({"backend": BACKEND, "warmup_s": warmup, "rows": rows}))
"""


def run_backend(backend: str, lengths: list[int], trials: int) -> dict:
    env = dict(os.environ, PERMGROWTH_BACKEND=backend)
    out = subprocess.run(
        [sys.executable, "-c", _WORKER, json.dumps(lengths), str(trials)],
        env=env, capture_output=True, text=True, check=True,
    )
    return json.loads(out.stdout)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--lengths", type=int, nargs="+", default=[30, 60, 120])
    parser.add_argument("--trials", type=int, default=200)
    args = parser.parse_args()

    results = {b: run_backend(b, args.lengths, args.trials)
               for b in ("python", "numba")}
    for b, r in results.items():
        assert r["backend"] == b, "backend selection failed"
    # identical workload, identical answers
    for n in map(str, args.lengths):
        py = results["python"]["rows"][n]
        nb = results["numba"]["rows"][n]
        assert (py["hits"], py["si"]) == (nb["hits"], nb["si"]), n

    print("warmup: python %.3fs, numba %.3fs (includes jit compilation)"
          % (results["python"]["warmup_s"], results["numba"]["warmup_s"]))
    print("%8s %12s %12s %8s | %12s %12s %8s"
          % ("length", "contains py", "contains nb", "speedup",
             "is_si py", "is_si nb", "speedup"))
    for n in map(str, args.lengths):
        py = results["python"]["rows"][n]
        nb = results["numba"]["rows"][n]
        print("%8s %11.4fs %11.4fs %7.1fx | %11.4fs %11.4fs %7.1fx"
              % (n, py["contains_s"], nb["contains_s"],
                 py["contains_s"] / max(nb["contains_s"], 1e-9),
                 py["is_si_s"], nb["is_si_s"],
                 py["is_si_s"] / max(nb["is_si_s"], 1e-9)))
    return 0


if __name__ == "__main__":
    sys.exit(main())
