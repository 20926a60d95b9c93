"""Time the compiled kernels against the pure-Python fallback.

Run with ``python3 benchmarks/bench_kernels.py [--repeat N]``.  Each workload
is run on every importable backend and the outputs are compared.
"""

from __future__ import annotations

import argparse
import time

from hexaring import gfcode
from hexaring.kernels import backends
from hexaring.permgroup import perm_table


def _workloads():
    keys_633 = gfcode.enumerate_keys(3, 6, 3)
    so_h32 = gfcode.enumerate_keys(3, 4, 2, "self_orthogonal")
    gens6 = gfcode.symmetric_generators(6)
    t6 = perm_table(6)
    ca = gfcode.rref(2, [[1, 0, 0, 0, 0, 1], [0, 1, 0, 0, 1, 0], [0, 0, 1, 1, 0, 0]])
    cb = gfcode.rref(3, [[1, 0, 2, 1, 1, 0], [0, 1, 1, 0, 2, 2], [0, 0, 0, 1, 1, 1]])

    def enum(k):
        return k.enumerate_rref(6, 3, 3, False)

    def orbits(k):
        return sorted(min(k.orbit(key, 6, 3, 3, gens6)) for key in keys_633[:400])

    def stabilizers(k):
        return [k.stabilizer(key, 6, 3, 3, t6) for key in keys_633[:200]]

    def cosets(k):
        g1 = t6[k.stabilizer(ca.key, 6, 3, 2, t6)]
        out = []
        for key in keys_633[:100]:
            g2 = t6[k.stabilizer(key, 6, 3, 3, t6)]
            out.append(k.double_cosets(g1.copy(), g2.copy(), 6))
        return out

    def pair_max(k):
        return [k.pair_max(ca.key, 3, cb.key, 3, 6, t6) for _ in range(20)] + [
            k.pair_max(0, 0, key, 2, 4, perm_table(4)) for key in so_h32
        ]

    return {
        "enumerate_rref(6,3,3)": enum,
        "orbit x400": orbits,
        "stabilizer x200": stabilizers,
        "double_cosets x100": cosets,
        "pair_max": pair_max,
    }


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=1)
    args = parser.parse_args(argv)
    mods = backends()
    print(f"backends: {', '.join(mods)}")
    print(f"{'workload':<24}" + "".join(f"{name:>12}" for name in mods) + f"{'speedup':>10}")
    for name, fn in _workloads().items():
        times, results = {}, {}
        for bname, mod in mods.items():
            best = float("inf")
            for _ in range(args.repeat):
                t0 = time.perf_counter()
                results[bname] = fn(mod)
                best = min(best, time.perf_counter() - t0)
            times[bname] = best
        agree = len({repr(r) for r in results.values()}) == 1
        speed = times["python"] / times["cython"] if "cython" in times and times["cython"] > 0 else float("nan")
        cells = "".join(f"{times[b]:>11.3f}s" for b in mods)
        print(f"{name:<24}{cells}{speed:>9.1f}x" + ("" if agree else "  MISMATCH"))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
