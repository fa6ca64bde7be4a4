"""Compare the compiled and pure-Python kernels.

Each backend runs in its own interpreter (the backend is fixed at import),
timing the integer convolution behind the power table and the full moment
verification of the basis.

    python benchmarks/bench_kernels.py [--power 200] [--repeat 3]
"""
from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys

CHILD = r"""
import json, sys, time
from moment_forge import _kernels
from moment_forge.counterexample import laurent_L, reference_basis
from moment_forge.moments import PowerTable, verify_solution

power, repeat = int(sys.argv[1]), int(sys.argv[2])
L = laurent_L()
best_pow = best_ver = float("inf")
for _ in range(repeat):
    t0 = time.perf_counter()
    PowerTable(L).power(power)
    best_pow = min(best_pow, time.perf_counter() - t0)
    t0 = time.perf_counter()
    table = PowerTable(L)
    assert all(verify_solution(L, Q, 12, table=table).all_zero for Q in reference_basis())
    best_ver = min(best_ver, time.perf_counter() - t0)
print(json.dumps({"backend": _kernels.BACKEND, "power": best_pow, "verify_basis": best_ver}))
"""


def run(pure: bool, power: int, repeat: int) -> dict:
    env = dict(os.environ)
    if pure:
        env["MOMENT_FORGE_PURE"] = "1"
    else:
        env.pop("MOMENT_FORGE_PURE", None)
    out = subprocess.run(
        [sys.executable, "-c", CHILD, str(power), str(repeat)],
        env=env, check=True, capture_output=True, text=True,
    )
    return json.loads(out.stdout)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--power", type=int, default=200, help="highest power of L to build")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    rows = [run(True, args.power, args.repeat), run(False, args.power, args.repeat)]
    if rows[1]["backend"] != "cython":
        print("compiled kernel not available; only the Python timings are meaningful")
    print(f"{'backend':<8} {'L^' + str(args.power):>10} {'verify Q0..Q4':>14}")
    for r in rows:
        print(f"{r['backend']:<8} {r['power']:>9.3f}s {r['verify_basis']:>13.3f}s")
    if rows[1]["backend"] == "cython":
        print(f"speedup  {rows[0]['power'] / rows[1]['power']:>9.2f}x "
              f"{rows[0]['verify_basis'] / rows[1]['verify_basis']:>13.2f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
