"""Compare the compiled reduction kernel against the pure-Python fallback.

Runs the same colength workloads once per backend in a child process (the
backend is chosen at import time, so each measurement needs a fresh
interpreter) and prints wall times plus the speedup. Workload results are
also compared so a kernel mismatch fails loudly rather than silently.

Usage: python3 scripts/benchmark_kernel.py
"""

from __future__ import annotations

import json
import os
import subprocess
import sys
import time

WORKLOADS = [
    ("cone hk p=5, e<=3", "hk", "x*y - z^2", ("x", "y", "z"), 5, 3),
    ("cone fsig p=5, e<=3", "fsig", "x*y - z^2", ("x", "y", "z"), 5, 3),
    ("quadric hk p=3, e<=3", "hk", "x*y - z*w", ("x", "y", "z", "w"), 3, 3),
]


def run_workloads() -> dict:
    from kunz.fsplit import fsplit_report
    from kunz.hk import hk_sequence
    from kunz.kernel import BACKEND
    from kunz.localring import LocalRingPresentation

    results = {"backend": BACKEND, "workloads": []}
    for label, kind, equation, variables, p, e_max in WORKLOADS:
        presentation = LocalRingPresentation.from_texts(
            p, list(variables), [equation])
        started = time.perf_counter()
        if kind == "hk":
            report = hk_sequence(presentation, e_max)
            values = [str(s.normalized) for s in report.samples]
        else:
            report = fsplit_report(presentation, e_max)
            values = [str(s.s) for s in report.samples]
        elapsed = time.perf_counter() - started
        results["workloads"].append({
            "label": label,
            "seconds": elapsed,
            "values": values,
        })
    return results


def measure(pure: bool) -> dict:
    env = dict(os.environ)
    if pure:
        env["KUNZ_PURE_PYTHON"] = "1"
    else:
        env.pop("KUNZ_PURE_PYTHON", None)
    out = subprocess.run(
        [sys.executable, os.path.abspath(__file__), "--worker"],
        env=env, capture_output=True, text=True, check=True)
    return json.loads(out.stdout)


def main() -> None:
    if "--worker" in sys.argv:
        print(json.dumps(run_workloads()))
        return
    compiled = measure(pure=False)
    pure = measure(pure=True)
    if compiled["backend"] == pure["backend"]:
        print("compiled kernel unavailable; both runs used the pure backend",
              file=sys.stderr)
    print(f"{'workload':<28} {'compiled':>10} {'pure':>10} {'speedup':>8}")
    for fast, slow in zip(compiled["workloads"], pure["workloads"]):
        if fast["values"] != slow["values"]:
            raise SystemExit(
                f"backend mismatch on {fast['label']}: "
                f"{fast['values']} vs {slow['values']}")
        ratio = slow["seconds"] / fast["seconds"] if fast["seconds"] else 0.0
        print(f"{fast['label']:<28} {fast['seconds']:>9.3f}s "
              f"{slow['seconds']:>9.3f}s {ratio:>7.2f}x")
    print("values agree on every workload")


if __name__ == "__main__":
    main()
