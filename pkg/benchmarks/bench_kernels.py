#!/usr/bin/env python3
"""Time the hot kernels under the numba backend and the pure-numpy fallback.

Each backend runs in its own interpreter (the switch is read at import time),
so the parent just launches ``--worker`` children with and without
``FFDIGITS_NO_NUMBA=1`` and prints a side-by-side table.

    python benchmarks/bench_kernels.py --repeat 3
    python benchmarks/bench_kernels.py --json bench.json
"""

import argparse
import json
import os
import subprocess
import sys
import time

import numpy as np


def _best(fn, repeat):
    fn()  # warm-up: numba compiles here, caches fill
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def run_worker(repeat):
    from ffdigits import backend_name, kernels
    from ffdigits.digits import delta_labels
    from ffdigits.field import field_of_order, make_field
    from ffdigits.ntheory import divisors
    from ffdigits.poly import _irreducible_table, irreducible_table, necklace_count

    rng = np.random.default_rng(7)
    out = {"backend": backend_name(), "timings": {}}
    T = out["timings"]

    ctx = make_field(2, 1, 8)
    fk = ctx.top.kernel_params()
    z = ctx.primitive.code
    vals = rng.integers(0, 256, ctx.N).astype(np.int64)
    T["dft N=255"] = _best(lambda: kernels.dft(vals, z, fk), repeat)
    T["convolve N=255"] = _best(lambda: kernels.convolve(vals, vals, fk), repeat)
    addt8, mult8, _, _ = ctx.top.tables()
    zp = kernels.powers(z, ctx.N, fk)
    T["dft (tables) N=255"] = _best(lambda: kernels.dft_tab(vals, zp, addt8, mult8), repeat)
    T["convolve (tables) N=255"] = _best(lambda: kernels.convolve_tab(vals, vals, addt8, mult8), repeat)

    ctx9 = make_field(3, 1, 6)
    fk9 = ctx9.top.kernel_params()
    a = rng.integers(0, 729, 1 << 16).astype(np.int64)
    b = rng.integers(0, 729, 1 << 16).astype(np.int64)
    T["mul_vec GF(729) x65536"] = _best(lambda: kernels.mul_vec(a, b, fk9), repeat)

    lab = delta_labels(2, 14)
    masks = np.arange(1, 1 << 15, 97, dtype=np.int64)
    divs = np.array(divisors(2**14 - 1), np.int64)
    T["delta_periods q=2 n=14 (338 masks)"] = _best(lambda: kernels.delta_periods(lab, masks, divs), repeat)

    F2 = field_of_order(2)
    table = irreducible_table(F2, 14)
    all_masks = np.arange(1 << 15, dtype=np.int64)
    addt = F2.tables()[0]
    T["first_hits q=2 n=14 (all W)"] = _best(lambda: kernels.first_hits(table, all_masks, addt, 2), repeat)

    def scan():
        _irreducible_table.cache_clear()
        t = irreducible_table(F2, 16)
        assert t.shape[0] == necklace_count(2, 16)

    T["irreducible scan q=2 n=16"] = _best(scan, repeat)
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", default=None, help="also write raw timings here")
    ap.add_argument("--worker", action="store_true", help=argparse.SUPPRESS)
    args = ap.parse_args()

    if args.worker:
        print(json.dumps(run_worker(args.repeat)))
        return 0

    results = {}
    for label, flag in (("numba", "0"), ("numpy", "1")):
        env = dict(os.environ, FFDIGITS_NO_NUMBA=flag)
        proc = subprocess.run(
            [sys.executable, __file__, "--worker", "--repeat", str(args.repeat)],
            env=env, capture_output=True, text=True, check=True,
        )
        res = json.loads(proc.stdout.strip().splitlines()[-1])
        if res["backend"] != label:
            print(f"warning: asked for {label}, child ran {res['backend']}", file=sys.stderr)
        results[label] = res["timings"]

    width = max(len(k) for k in results["numba"])
    print(f"{'kernel':<{width}}  {'numba ms':>10}  {'numpy ms':>10}  {'speedup':>8}")
    for k in results["numba"]:
        tn, tp = results["numba"][k], results["numpy"][k]
        print(f"{k:<{width}}  {tn * 1e3:>10.2f}  {tp * 1e3:>10.2f}  {tp / tn:>7.1f}x")
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(results, fh, indent=2)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
