"""Time the hot kernels on each available backend.

    python benchmarks/bench_kernels.py [--repeat 3] [--json]

Workloads are fixed and seeded, so runs are comparable across machines.
The reported figure is the best of ``--repeat`` runs.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time

from cliquelab import available_backends
from cliquelab.graph import complement, new_graph
from cliquelab.lab import random_graph


def _workloads():
    rng = random.Random(1)
    dense = [random_graph(60, rng, 0.7) for _ in range(5)]
    wide = [random_graph(120, rng, 0.5) for _ in range(3)]
    canon = [random_graph(rng.randint(20, 40), rng) for _ in range(30)]
    # 4-octahedron: K8 minus a perfect matching, 16 maximal cliques
    octa4 = complement(new_graph(8, [(2 * i, 2 * i + 1) for i in range(4)]))
    octa8 = complement(new_graph(16, [(2 * i, 2 * i + 1) for i in range(8)]))  # 256 cliques
    return {"dense": dense, "wide": wide, "canon": canon, "octa4": octa4, "octa8": octa8}


def _cases(k, w):
    limit = 10**6
    fams = {id(g): k.maximal_cliques(g.order, g.rows, limit) for g in w["dense"]}

    def cliques_dense():
        for g in w["dense"]:
            k.maximal_cliques(g.order, g.rows, limit)

    def cliques_wide():
        for g in w["wide"]:
            k.maximal_cliques(g.order, g.rows, limit)

    def intersection():
        for g in w["dense"]:
            k.intersection_rows(g.order, fams[id(g)])

    def canonical():
        for g in w["canon"]:
            k.canonical_labeling(g.order, g.rows, 10**6)

    def octahedron_step():
        g = w["octa8"]
        fam = k.maximal_cliques(g.order, g.rows, limit)
        k.intersection_rows(g.order, fam)
        h = w["octa4"]
        k.canonical_labeling(h.order, h.rows, 10**6)

    return {
        "maximal_cliques G(60,0.7) x5": cliques_dense,
        "maximal_cliques G(120,0.5) x3": cliques_wide,
        "intersection_rows G(60,0.7) x5": intersection,
        "canonical_labeling G(20..40,0.5) x30": canonical,
        "K of the 8-octahedron + canon": octahedron_step,
    }


def best_of(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args(argv)
    backends = available_backends()
    w = _workloads()
    results: dict[str, dict[str, float]] = {}
    for name, k in backends.items():
        for case, fn in _cases(k, w).items():
            results.setdefault(case, {})[name] = best_of(fn, args.repeat)
    if args.json:
        json.dump({"backends": list(backends), "seconds": results}, sys.stdout, indent=2)
        print()
        return 0
    names = list(backends)
    header = f"{'case':40}" + "".join(f"{n:>12}" for n in names) + ("     speedup" if len(names) > 1 else "")
    print(header)
    for case, row in results.items():
        line = f"{case:40}" + "".join(f"{row[n] * 1000:10.1f}ms" for n in names)
        if len(names) > 1:
            line += f"{row['python'] / row[names[1]]:11.1f}x"
        print(line)
    if len(names) == 1:
        print("compiled kernels not built; only the Python backend was timed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
