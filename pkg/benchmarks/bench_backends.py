"""Time compute_maws under the numba and pure-Python backends.

Each backend runs in its own interpreter because the backend is fixed at
import time by MAWSA_DISABLE_NUMBA.

    python3 benchmarks/bench_backends.py --sizes 2000 8000 32000
"""

import argparse
import json
import os
import subprocess
import sys

WORKER = r"""
import json, sys, time
import mawsa
from mawsa.bench import random_dna, warm_up
warm_up()
out = []
for n in map(int, sys.argv[1:]):
    seq = random_dna(n, seed=n)
    t0 = time.perf_counter()
    report = mawsa.compute_maws(seq)
    out.append({"n": n, "seconds": time.perf_counter() - t0, "maws": len(report),
                "digest": hash(tuple(sorted(report.words())))})
print(json.dumps({"backend": mawsa.BACKEND, "runs": out}))
"""


def run_backend(sizes, disable_numba: bool) -> dict:
    env = dict(os.environ, MAWSA_DISABLE_NUMBA="1" if disable_numba else "0", PYTHONHASHSEED="0")
    proc = subprocess.run([sys.executable, "-c", WORKER, *map(str, sizes)],
                          env=env, capture_output=True, text=True, check=True)
    return json.loads(proc.stdout.strip().splitlines()[-1])


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+", default=[2000, 8000, 32000])
    args = parser.parse_args()

    fast = run_backend(args.sizes, disable_numba=False)
    slow = run_backend(args.sizes, disable_numba=True)
    print(f"{'n':>8} {fast['backend']:>10} {slow['backend']:>10} {'speedup':>9} {'maws':>8}  same")
    same_all = True
    for a, b in zip(fast["runs"], slow["runs"]):
        same = a["digest"] == b["digest"] and a["maws"] == b["maws"]
        same_all &= same
        print(f"{a['n']:>8} {a['seconds']:>10.4f} {b['seconds']:>10.3f} "
              f"{b['seconds'] / a['seconds']:>8.0f}x {a['maws']:>8}  {'yes' if same else 'NO'}")
    return 0 if same_all else 1


if __name__ == "__main__":
    sys.exit(main())
