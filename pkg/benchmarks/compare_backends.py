"""Time the compiled kernel against the pure-Python fallback.

Both implementations are imported directly, so one process measures the
pair on identical inputs.  Run from the repository root:

    python3 benchmarks/compare_backends.py [--repeat 3]
"""

import argparse
import random
import statistics
import time

from wellcovered import _mis_fallback
from wellcovered.families import complete, cycle, h_family
from wellcovered.products import direct_product

try:
    from wellcovered import _mis_core
except ImportError:
    _mis_core = None


def random_adj(rng, n, p):
    adj = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return tuple(adj)


def workloads():
    rng = random.Random(1729)
    sparse = [random_adj(rng, 20, 0.2) for _ in range(30)]
    dense = [random_adj(rng, 24, 0.6) for _ in range(30)]
    c7c7 = direct_product(cycle(7), cycle(7)).graph.adj
    h42k3 = direct_product(h_family(4, 2), complete(3)).graph.adj
    return [
        ("enumerate, 30 sparse n=20", "maximal_independent_sets",
         lambda impl: [list(impl.maximal_independent_sets(a)) for a in sparse]),
        ("count, 30 dense n=24", "count_maximal_independent_sets",
         lambda impl: [impl.count_maximal_independent_sets(a) for a in dense]),
        ("summary, C7 x C7 (49 vertices)", "independence_summary",
         lambda impl: impl.independence_summary(c7c7)),
        ("well-covered size, H(4,2) x K3 (36 vertices)", "well_covered_size",
         lambda impl: impl.well_covered_size(h42k3)),
    ]


def best_of(fn, impl, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(impl)
        times.append(time.perf_counter() - t0)
    return min(times), statistics.median(times)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    if _mis_core is None:
        print("compiled extension not built; only the fallback is available")

    header = f"{'workload':<45} {'python':>10} {'cython':>10} {'speedup':>9}"
    print(header)
    print("-" * len(header))
    for label, _, fn in workloads():
        py_best, _ = best_of(fn, _mis_fallback, args.repeat)
        if _mis_core is None:
            print(f"{label:<45} {py_best:>9.3f}s {'-':>10} {'-':>9}")
            continue
        cy_best, _ = best_of(fn, _mis_core, args.repeat)
        ratio = py_best / cy_best if cy_best else float("inf")
        print(f"{label:<45} {py_best:>9.3f}s {cy_best:>9.3f}s {ratio:>8.1f}x")

    if _mis_core is not None:
        rng = random.Random(99)
        for _ in range(50):
            adj = random_adj(rng, rng.randint(1, 14), rng.random())
            assert sorted(_mis_core.maximal_independent_sets(adj)) == sorted(
                _mis_fallback.maximal_independent_sets(adj)
            )
        print("\nagreement spot check: 50 random graphs, identical output")


if __name__ == "__main__":
    main()
