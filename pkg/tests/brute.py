"""Independent brute-force oracles.

Everything here answers independence questions by filtering all 2^n vertex
subsets, so it shares no code path with the branch-and-bound kernels it is
used to cross-check.  Only usable for small n.
"""

from __future__ import annotations

import random

from wellcovered.graphs import Graph


def is_independent(adj: tuple[int, ...], mask: int) -> bool:
    m = mask
    while m:
        v = (m & -m).bit_length() - 1
        if adj[v] & mask:
            return False
        m &= m - 1
    return True


def is_maximal_independent(adj: tuple[int, ...], n: int, mask: int) -> bool:
    if not is_independent(adj, mask):
        return False
    for v in range(n):
        if not mask >> v & 1 and not adj[v] & mask:
            return False
    return True


def brute_maximal_independent_sets(adj: tuple[int, ...], n: int) -> list[int]:
    return [m for m in range(1 << n) if is_maximal_independent(adj, n, m)]


def brute_summary(adj: tuple[int, ...], n: int) -> tuple[int, int]:
    sizes = [m.bit_count() for m in brute_maximal_independent_sets(adj, n)]
    return min(sizes), max(sizes)


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    adj = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return Graph(n, tuple(adj))
