"""Compare the compiled and pure-Python kernels on the workloads the suite runs.

    python benchmarks/bench_kernels.py [--repeat 3]

Each workload is timed with both kernel modules directly (not through the
dispatcher), and the results are checked for equality before timing.
"""

from __future__ import annotations

import argparse
import sys
import timeit

from cdcrit import _backend, _kernels_py
from cdcrit.families import build_G1, build_Ns, build_Pkl
from cdcrit.graph import Graph, build_graph


def _cds_workload(g: Graph, size: int, find_all: bool):
    adj = list(g.masks)
    return lambda mod: mod.cds_search(adj, g.n, size, True, find_all, 0, 0)


def _criticality_workload(g: Graph, k: int):
    """Bounded search on every G + uv, as in the criticality check."""
    augmented = [list(g.add_edge(u, v).masks) for u, v in g.non_edges()]

    def run(mod):
        return [bool(mod.cds_search(adj, g.n, k - 1, True, False, 0, 0)[0]) for adj in augmented]

    return run


def _hp_workload(g: Graph):
    adj = list(g.masks)
    return lambda mod: mod.hamiltonian_path(adj, g.n)


def workloads():
    ns, _ = build_Ns(6)
    base, btag = build_Ns(6)
    pkl, _ = build_Pkl(base, btag, [2])
    g1, _ = build_G1(6, 2, 2, [2, 2], 1)
    yield "cds_search N(6) all size-4 sets", _cds_workload(ns, 4, True)
    yield "cds_search P(4,1) none of size 4", _cds_workload(pkl, 4, False)
    yield "criticality pairs N(6)", _criticality_workload(ns, 4)
    yield "criticality pairs P(4,1)", _criticality_workload(pkl, 5)
    yield f"hamiltonian_path G1 n={g1.n}", _hp_workload(g1)
    # unbalanced complete bipartite graph: dense and non-traceable, so the DP fills every layer
    k8_10 = build_graph(18, [(u, v) for u in range(8) for v in range(8, 18)])
    yield "hamiltonian_path K(8,10), no path", _hp_workload(k8_10)


def _normalise(result):
    if isinstance(result, tuple):
        return (list(result[0]),) + result[1:]
    return None if result is None else list(result)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)
    compiled = _backend._compiled
    if compiled is None:
        print("compiled kernels are not built; only the Python path is available", file=sys.stderr)
        return 1
    print(f"{'workload':40s} {'cython':>10s} {'python':>10s} {'speedup':>8s}")
    for name, fn in workloads():
        a, b = fn(compiled), fn(_kernels_py)
        if _normalise(a) != _normalise(b):
            print(f"{name}: kernels disagree", file=sys.stderr)
            return 1
        tc = min(timeit.repeat(lambda: fn(compiled), number=1, repeat=args.repeat))
        tp = min(timeit.repeat(lambda: fn(_kernels_py), number=1, repeat=args.repeat))
        print(f"{name:40s} {tc:9.4f}s {tp:9.4f}s {tp / tc:7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
