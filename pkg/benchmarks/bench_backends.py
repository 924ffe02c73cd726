"""Compare the compiled (python-flint) and pure-Python polynomial backends.

Each workload runs in a fresh interpreter per backend so caches start cold;
import time is excluded.

    python3 benchmarks/bench_backends.py [--repeat 3] [--quick]
"""

import argparse
import json
import os
import subprocess
import sys

WORKLOADS = {
    "scalar_arith": (
        "from vff import ALPHA, GAMMA\n"
        "x = (GAMMA + ALPHA) / (GAMMA - 2)\n"
        "for k in range(1, 30):\n"
        "    x = (x * (GAMMA + k) + ALPHA) / (ALPHA + k)\n"
    ),
    "kac_det_N4": "from vff.structure import kac_determinant_check\nkac_determinant_check(4)\n",
    "kac_det_N5": "from vff.structure import kac_determinant_check\nkac_determinant_check(5)\n",
    "singular_rs6": (
        "from vff.structure import singular_vector\n"
        "for rs in [(1, 6), (6, 1), (2, 3), (3, 2)]:\n"
        "    singular_vector(*rs)\n"
    ),
    "projection_N4": "from vff.structure import projection_matrix\nprojection_matrix(4)\n",
}

QUICK = ("scalar_arith", "kac_det_N4", "projection_N4")

TIMER = (
    "import time\n"
    "import vff.structure\n"
    "t0 = time.perf_counter()\n"
    "exec(compile({src!r}, 'workload', 'exec'))\n"
    "print(time.perf_counter() - t0)\n"
)


def run(backend, src):
    env = dict(os.environ, VFF_BACKEND=backend)
    out = subprocess.run(
        [sys.executable, "-c", TIMER.format(src=src)], env=env, capture_output=True, text=True, check=True
    )
    return float(out.stdout.strip().splitlines()[-1])


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="skip the slowest workloads")
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()

    from vff._backend import AVAILABLE

    backends = [b for b in ("flint", "python") if b in AVAILABLE]
    names = QUICK if args.quick else tuple(WORKLOADS)
    rows = []
    for name in names:
        best = {b: min(run(b, WORKLOADS[name]) for _ in range(args.repeat)) for b in backends}
        rows.append({"workload": name, **best})
    if args.json:
        print(json.dumps(rows, indent=2))
        return
    head = f"{'workload':<16}" + "".join(f"{b:>12}" for b in backends) + ("     speedup" if len(backends) == 2 else "")
    print(head)
    for row in rows:
        line = f"{row['workload']:<16}" + "".join(f"{row[b]:>11.3f}s" for b in backends)
        if len(backends) == 2:
            line += f"{row['python'] / row['flint']:>11.1f}x"
        print(line)


if __name__ == "__main__":
    main()
