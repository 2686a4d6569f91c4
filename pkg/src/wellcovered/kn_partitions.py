"""Products with complete graphs, analyzed through weak partitions.

Every maximal independent set I of G x K_n meets each K_n-layer in 0, 1, or
n vertices, so I induces a weak partition of V(G) into V0 (layers missed),
V1..Vn (layers hit once, indexed by which clique vertex was used, 1-based),
and a bracket class (layers contained in I).  Such a partition arises from a
maximal independent set exactly when four conditions hold:

1. no edge joins V_k to anything outside V0 and V_k;
2. in a nonempty V_k, no vertex is isolated inside G[V_k];
3. the bracket class is independent;
4. every V0 vertex has a neighbor in the bracket class or neighbors in at
   least two distinct classes V_k.

The weight n*|bracket| + sum |V_k| of a valid partition is the size of its
maximal independent set, so i(G x K_n) and alpha(G x K_n) are the extreme
weights over valid partitions.  ``kn_alpha_i`` searches partitions directly
with pruning and falls back to enumerating the materialized product when a
node budget is exhausted; both engines are exact.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernel
from .graphs import Graph, bits, delete_closed_neighborhood, is_bipartite, min_degree, to_vertices
from .independence import is_well_covered, isolatable_vertices, well_covered_report
from .products import ProductGraph, direct_product
from .verdicts import COUNTEREXAMPLE, HOLDS, VACUOUS, ClaimVerdict

ENGINE_PARTITION = "partition-search"
ENGINE_PRODUCT = "product-enumeration"

DEFAULT_NODE_BUDGET = 2_000_000


class InvalidPartition(ValueError):
    """A weak partition violating disjointness, cover, or a numbered condition."""


@dataclass(frozen=True)
class WeakPartition:
    """A weak partition (V0, V1..Vn, bracket) of the vertices of ``graph``.

    ``classes[k-1]`` holds V_k.  Parts may be empty; validity against the
    four conditions is checked by ``violations``, not at construction, so
    search code can build candidates freely.
    """

    graph: Graph
    n: int
    v0: int
    classes: tuple[int, ...]
    vbracket: int

    def violations(self) -> list[str]:
        g = self.graph
        out = []
        if self.n < 2:
            out.append("clique order below 2")
        if len(self.classes) != self.n:
            out.append(f"expected {self.n} classes, got {len(self.classes)}")
            return out
        parts = [self.v0, *self.classes, self.vbracket]
        union = 0
        overlap = False
        for p in parts:
            if union & p:
                overlap = True
            union |= p
        if overlap:
            out.append("disjointness")
        if union != g.vertex_mask:
            out.append("cover")
        outside_ok = self.v0
        for k, vk in enumerate(self.classes, start=1):
            forbidden = g.vertex_mask & ~(outside_ok | vk)
            if any(g.adj[u] & forbidden for u in bits(vk)):
                out.append("condition 1")
                break
        for vk in self.classes:
            if any(not g.adj[u] & vk for u in bits(vk)):
                out.append("condition 2")
                break
        if any(g.adj[u] & self.vbracket for u in bits(self.vbracket)):
            out.append("condition 3")
        for u in bits(self.v0):
            if g.adj[u] & self.vbracket:
                continue
            hit = sum(1 for vk in self.classes if g.adj[u] & vk)
            if hit < 2:
                out.append("condition 4")
                break
        return out

    def weight(self) -> int:
        return self.n * self.vbracket.bit_count() + sum(vk.bit_count() for vk in self.classes)

    def to_json(self) -> dict:
        return {
            "V0": to_vertices(self.v0),
            "classes": [to_vertices(vk) for vk in self.classes],
            "bracket": to_vertices(self.vbracket),
        }


def partition_weight(p: WeakPartition) -> int:
    """Weight n*|bracket| + sum |V_k| of a valid partition."""
    bad = p.violations()
    if bad:
        raise InvalidPartition(f"invalid weak partition: {bad[0]}")
    return p.weight()


def mis_from_partition(p: WeakPartition) -> int:
    """The maximal independent set of G x K_n encoded by a valid partition.

    Takes the full layer over every bracket vertex and the single product
    vertex (g, k-1) for g in V_k.  The result is checked to be maximal
    independent in the materialized product; a failure raises rather than
    repairs, since it would contradict the partition correspondence.
    """
    bad = p.violations()
    if bad:
        raise InvalidPartition(f"invalid weak partition: {bad[0]}")
    prod = direct_product(p.graph, _complete(p.n))
    out = 0
    for g in bits(p.vbracket):
        out |= prod.layer_h(g)
    for k, vk in enumerate(p.classes, start=1):
        for g in bits(vk):
            out |= 1 << prod.index(g, k - 1)
    adj = prod.graph.adj
    for v in bits(out):
        if adj[v] & out:
            raise RuntimeError("valid partition produced a non-independent set")
    for v in range(prod.graph.n):
        if not (out >> v & 1) and not adj[v] & out:
            raise RuntimeError("valid partition produced a non-maximal set")
    return out


def partition_from_mis(g: Graph, n: int, i_mask: int) -> WeakPartition:
    """Decode a maximal independent set of G x K_n into its weak partition.

    Rejects any set whose intersection with some layer has size outside
    {0, 1, n}: no maximal independent set can do that.
    """
    if n < 2:
        raise ValueError("clique order must be at least 2")
    v0 = 0
    vb = 0
    classes = [0] * n
    for gv in range(g.n):
        layer = ((1 << n) - 1) << gv * n
        hit = i_mask & layer
        size = hit.bit_count()
        if size == 0:
            v0 |= 1 << gv
        elif size == n:
            vb |= 1 << gv
        elif size == 1:
            k = (hit & -hit).bit_length() - 1 - gv * n
            classes[k] |= 1 << gv
        else:
            raise ValueError(
                f"layer over vertex {gv} meets the set in {size} vertices, outside {{0, 1, {n}}}"
            )
    return WeakPartition(g, n, v0, tuple(classes), vb)


@dataclass(frozen=True)
class KnReport:
    """Exact i and alpha of G x K_n with extreme partitions as witnesses."""

    n_g: int
    n: int
    i_value: int
    alpha_value: int
    argmin: WeakPartition
    argmax: WeakPartition
    engine: str

    def to_json(self) -> dict:
        return {
            "nG": self.n_g,
            "n": self.n,
            "i": self.i_value,
            "alpha": self.alpha_value,
            "engine": self.engine,
            "argmin": self.argmin.to_json(),
            "argmax": self.argmax.to_json(),
        }


def _complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


class _Budget(Exception):
    pass


def kn_alpha_i(g: Graph, n: int, node_budget: int = DEFAULT_NODE_BUDGET) -> KnReport:
    """Exact i(G x K_n) and alpha(G x K_n), n >= 2.

    Searches weak partitions vertex by vertex.  Labels are V0, an open set
    of classes, or the bracket class; condition 1 and 3 violations prune at
    assignment time, conditions 2 and 4 are decided for a vertex as soon as
    its whole neighborhood is labeled, which in index order happens at the
    highest-numbered closed neighbor.  Classes must be opened in increasing
    order of their minimum vertex, so each unordered partition is visited
    once.  Budget exhaustion falls back to enumerating the product.
    """
    if n < 2:
        raise ValueError("clique order must be at least 2")
    try:
        return _search(g, n, node_budget)
    except _Budget:
        return _from_product(g, n)


def _from_product(g: Graph, n: int) -> KnReport:
    i, a, wit_min, wit_max = kernel.independence_summary(direct_product(g, _complete(n)).graph.adj)
    return KnReport(
        g.n, n, i, a,
        partition_from_mis(g, n, wit_min),
        partition_from_mis(g, n, wit_max),
        ENGINE_PRODUCT,
    )


def _search(g: Graph, n: int, node_budget: int) -> KnReport:
    ng = g.n
    adj = g.adj
    labels = [0] * ng  # 0 = V0, 1..n = class, n+1 = bracket
    cls_mask = [0] * (n + 2)
    bracket_label = n + 1
    union_cls_b = 0  # all class vertices plus bracket vertices

    # vertices whose open neighborhood is fully labeled once index v is:
    # their conditions 2/4 become decidable exactly there
    trigger_at: list[list[int]] = [[] for _ in range(ng)]
    for u in range(ng):
        last = max((nb for nb in bits(adj[u])), default=u)
        trigger_at[max(last, u)].append(u)

    best: list = [None, None]  # (weight, labels snapshot) for min and max
    nodes = 0

    def check_settled(u: int) -> bool:
        lu = labels[u]
        if lu == 0:
            if adj[u] & cls_mask[bracket_label]:
                return True
            hit = 0
            row = adj[u]
            for k in range(1, n + 1):
                if row & cls_mask[k]:
                    hit += 1
                    if hit == 2:
                        return True
            return False
        if lu == bracket_label:
            return True
        return bool(adj[u] & cls_mask[lu])

    def rec(v: int, used: int, weight: int) -> None:
        nonlocal union_cls_b, nodes
        if v == ng:
            if best[0] is None or weight < best[0][0]:
                best[0] = (weight, labels.copy())
            if best[1] is None or weight > best[1][0]:
                best[1] = (weight, labels.copy())
            return
        nodes += 1
        if nodes > node_budget:
            raise _Budget
        bv = 1 << v
        row = adj[v]
        # try V0, each open class plus one fresh class, then bracket
        for lab in range(0, min(used + 1, n) + 2):
            if lab == min(used + 1, n) + 1:
                lab = bracket_label
                if row & union_cls_b:
                    continue
            elif lab:
                if row & (union_cls_b & ~cls_mask[lab]):
                    continue
            labels[v] = lab
            cls_mask[lab] |= bv
            saved = union_cls_b
            if lab:
                union_cls_b |= bv
            if all(check_settled(u) for u in trigger_at[v]):
                add = n if lab == bracket_label else (1 if lab else 0)
                rec(v + 1, used + (1 if lab == used + 1 else 0), weight + add)
            cls_mask[lab] &= ~bv
            union_cls_b = saved
        labels[v] = 0

    cls_mask[0] = 0
    rec(0, 0, 0)
    assert best[0] is not None and best[1] is not None
    return KnReport(
        ng, n,
        best[0][0], best[1][0],
        _labels_to_partition(g, n, best[0][1]),
        _labels_to_partition(g, n, best[1][1]),
        ENGINE_PARTITION,
    )


def _labels_to_partition(g: Graph, n: int, labels: list[int]) -> WeakPartition:
    v0 = 0
    vb = 0
    classes = [0] * n
    for v, lab in enumerate(labels):
        if lab == 0:
            v0 |= 1 << v
        elif lab == n + 1:
            vb |= 1 << v
        else:
            classes[lab - 1] |= 1 << v
    return WeakPartition(g, n, v0, tuple(classes), vb)


def enumerate_valid_partitions(g: Graph, n: int) -> list[WeakPartition]:
    """All valid weak partitions, every class labeling included.

    The correspondence with maximal independent sets distinguishes class
    labels (V_k picks clique vertex k), so no symmetry reduction here.
    Exhaustive and only meant for cross-validation at small orders: the
    candidate count is (n+2)^n(G).
    """
    if n < 2:
        raise ValueError("clique order must be at least 2")
    out: list[WeakPartition] = []
    labels = [0] * g.n

    def rec(v: int) -> None:
        if v == g.n:
            p = _labels_to_partition(g, n, labels)
            if not p.violations():
                out.append(p)
            return
        for lab in range(0, n + 2):
            labels[v] = lab
            rec(v + 1)
        labels[v] = 0

    rec(0)
    return out


def layer_cardinality_check(g: Graph, n: int, instance: dict | None = None) -> ClaimVerdict:
    """Every maximal independent set of G x K_n meets each layer in 0, 1, or n."""
    if n < 2:
        raise ValueError("clique order must be at least 2")
    inst = instance if instance is not None else {"nG": g.n, "n": n}
    prod = direct_product(g, _complete(n))
    for s in kernel.maximal_independent_sets(prod.graph.adj):
        for gv in range(g.n):
            size = (s & prod.layer_h(gv)).bit_count()
            if size not in (0, 1, n):
                witness = {
                    "mis": prod.pairs(s),
                    "vertex": gv,
                    "layer_intersection_size": size,
                }
                return ClaimVerdict("layer_sizes", inst, COUNTEREXAMPLE, witness)
    return ClaimVerdict("layer_sizes", inst, HOLDS)


def necessary_condition_check(g: Graph, n: int, instance: dict | None = None) -> ClaimVerdict:
    """If G x K_n is well-covered, every vertex of degree >= n leaves an
    isolated vertex behind when its closed neighborhood is deleted."""
    if n < 2:
        raise ValueError("clique order must be at least 2")
    inst = instance if instance is not None else {"nG": g.n, "n": n}
    if not is_well_covered(direct_product(g, _complete(n)).graph):
        return ClaimVerdict("kn_necessary", inst, VACUOUS)
    for x in range(g.n):
        if g.degree(x) < n:
            continue
        residual = delete_closed_neighborhood(g, 1 << x)
        if not any(residual.graph.adj[v] == 0 for v in range(residual.graph.n)):
            witness = {
                "vertex": x,
                "degree": g.degree(x),
                "residual_vertices": list(residual.kept),
                "residual_min_degree": min(
                    (residual.graph.degree(v) for v in range(residual.graph.n)), default=None
                ),
            }
            return ClaimVerdict("kn_necessary", inst, COUNTEREXAMPLE, witness)
    return ClaimVerdict("kn_necessary", inst, HOLDS)


def bipartite_isolation_check(b: Graph, instance: dict | None = None) -> ClaimVerdict:
    """A bipartite well-covered graph with minimum degree >= 2 has isolatable
    vertices; deleting any closed neighborhood N[x] leaves an isolated vertex."""
    inst = instance if instance is not None else {"n": b.n, "edges": sorted(b.edges())}
    if is_bipartite(b) is None or min_degree(b) < 2 or not is_well_covered(b):
        return ClaimVerdict("bipartite_isolation", inst, VACUOUS)
    if isolatable_vertices(b) == 0:
        return ClaimVerdict(
            "bipartite_isolation", inst, COUNTEREXAMPLE, {"reason": "no isolatable vertices"}
        )
    for x in range(b.n):
        residual = delete_closed_neighborhood(b, 1 << x)
        if not any(residual.graph.adj[v] == 0 for v in range(residual.graph.n)):
            witness = {"vertex": x, "residual_vertices": list(residual.kept)}
            return ClaimVerdict("bipartite_isolation", inst, COUNTEREXAMPLE, witness)
    return ClaimVerdict("bipartite_isolation", inst, HOLDS)
