#!/usr/bin/env python3
"""Wall-time scaling of the exact solver and the contraction pipeline.

Prints a table of median solve times on k-trees at fixed k across a
doubling ladder of n, plus one timed pipeline run on a large class
member.  Reported output is advisory; the pass/fail version of these
bounds lives in tests/test_acceptance.py.
"""

from __future__ import annotations

import argparse
import json
import random
import time

from glpart import (
    PartitionRequest,
    WeightedGraph,
    generate_almost_chordal,
    generate_ktree,
    gl_partition_almost_chordal,
    gl_partition_chordal,
)


def median_solve(n: int, k: int, repeats: int, seed: int) -> float:
    g = generate_ktree(n, k, seed=seed)
    rng = random.Random(seed)
    terms = tuple(rng.sample(range(n), k))
    demands = [1] * k
    for _ in range(n - k):
        demands[rng.randrange(k)] += 1
    req = PartitionRequest(terms, tuple(demands))
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        res = gl_partition_chordal(g, req, validate=False)
        times.append(time.perf_counter() - t0)
        assert res.deviation == 0
    return sorted(times)[len(times) // 2]


def pipeline_time(n: int, k: int, cycles: int, seed: int) -> float:
    inst = generate_almost_chordal(n, k, cycles, seed=seed)
    rng = random.Random(seed)
    terms = tuple(rng.sample(range(n), k))
    demands = [2] * k
    for _ in range(n - 2 * k):
        demands[rng.randrange(k)] += 1
    req = PartitionRequest(terms, tuple(demands))
    t0 = time.perf_counter()
    res = gl_partition_almost_chordal(WeightedGraph.unit(inst.graph), req)
    dt = time.perf_counter() - t0
    assert res.partition.deviation <= 1
    return dt


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--k", type=int, default=3)
    ap.add_argument("--sizes", type=int, nargs="+",
                    default=[125, 250, 500, 1000, 2000])
    ap.add_argument("--repeats", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--pipeline-n", type=int, default=200)
    ap.add_argument("--json", action="store_true",
                    help="emit a JSON record instead of the table")
    args = ap.parse_args()

    rows = []
    prev = None
    for n in args.sizes:
        t = median_solve(n, args.k, args.repeats, args.seed)
        ratio = t / prev if prev else None
        rows.append({"n": n, "median_s": t, "ratio_vs_prev": ratio})
        prev = t

    prep = pipeline_time(args.pipeline_n, args.k, 4, args.seed)

    if args.json:
        print(json.dumps(
            {"k": args.k, "solver": rows,
             "pipeline_n": args.pipeline_n, "pipeline_s": prep},
            indent=2, sort_keys=True,
        ))
        return 0

    print(f"chordal solver, k={args.k}, median of {args.repeats}")
    print(f"{'n':>6}  {'median (s)':>12}  {'x prev':>7}")
    for row in rows:
        ratio = f"{row['ratio_vs_prev']:.2f}" if row["ratio_vs_prev"] else "-"
        print(f"{row['n']:>6}  {row['median_s']:>12.5f}  {ratio:>7}")
    print(f"\npipeline on n={args.pipeline_n} member: {prep:.3f}s")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
