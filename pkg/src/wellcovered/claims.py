"""Executable registry of structural claims about well-covered graphs and
direct products.

Every claim pairs a hypothesis with a conclusion over one of three instance
shapes: a single graph, an ordered pair of graphs, or a graph together with
a clique order n.  Verdicts are "holds", "vacuous" (the hypothesis failed,
so the instance says nothing), or "counterexample" carrying a witness that
can be re-checked by hand with the basic primitives.  Universally
quantified inner objects (independent sets, maximal independent sets,
perfect matchings) are enumerated exhaustively; nothing is sampled.

The suite runner shares per-instance facts across all claims of a shape,
tallies verdicts per claim, and merges partial reports associatively, so
instance streams can be partitioned across processes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Iterator

from . import kernel
from .families import (
    complete,
    complete_multipartite,
    corpus,
    corpus_representatives,
    cycle,
    h_family,
    h_family_params,
    multipartite_params,
)
from .formats import to_graph6
from .graphs import (
    Graph,
    bits,
    closed_neighborhood,
    components,
    delete_closed_neighborhood,
    disjoint_union,
    girth,
    induced_subgraph,
    is_bipartite,
    is_complete,
    is_connected,
    is_regular,
    min_degree,
    neighborhood,
    split_isolated,
    to_mask,
    to_vertices,
)
from .independence import (
    berge_violation,
    enumerate_independent_sets,
    favaron_equivalence_verdict,
    isolatable_vertices,
)
from .kn_partitions import (
    DEFAULT_NODE_BUDGET,
    kn_alpha_i,
    layer_cardinality_check,
    necessary_condition_check,
    bipartite_isolation_check,
)
from .products import ProductGraph, direct_product, product_bounds_check
from .verdicts import COUNTEREXAMPLE, HOLDS, VACUOUS, ClaimVerdict

SHAPE_GRAPH = "single-graph"
SHAPE_PAIR = "graph-pair"
SHAPE_GRAPH_N = "graph-plus-n"


class GraphFacts:
    """Lazily computed facts about a single graph, shared across claims."""

    def __init__(self, graph: Graph) -> None:
        self.graph = graph

    @cached_property
    def instance(self) -> dict:
        return {"graph6": to_graph6(self.graph)}

    @cached_property
    def summary(self) -> tuple[int, int, int, int]:
        return kernel.independence_summary(self.graph.adj)

    @cached_property
    def wc_size(self) -> int:
        return kernel.well_covered_size(self.graph.adj)

    @property
    def well_covered(self) -> bool:
        return self.wc_size >= 0

    @cached_property
    def has_isolated(self) -> bool:
        return self.graph.n > 0 and min_degree(self.graph) == 0

    @cached_property
    def very_well_covered(self) -> bool:
        return self.well_covered and not self.has_isolated and 2 * self.wc_size == self.graph.n

    @cached_property
    def nontrivial_connected(self) -> bool:
        return self.graph.n >= 2 and is_connected(self.graph)

    @cached_property
    def isolatable_mask(self) -> int:
        return isolatable_vertices(self.graph)

    @cached_property
    def mis_list(self) -> list[int]:
        return kernel.maximal_independent_sets(self.graph.adj)


class PairFacts:
    """Facts about an ordered pair of graphs and their direct product."""

    def __init__(self, g: Graph, h: Graph) -> None:
        self.g = GraphFacts(g)
        self.h = GraphFacts(h)

    @cached_property
    def instance(self) -> dict:
        return {"g": to_graph6(self.g.graph), "h": to_graph6(self.h.graph)}

    @cached_property
    def product(self) -> ProductGraph:
        return direct_product(self.g.graph, self.h.graph)

    @cached_property
    def product_wc_size(self) -> int:
        return kernel.well_covered_size(self.product.graph.adj)

    @property
    def product_wc(self) -> bool:
        return self.product_wc_size >= 0

    @cached_property
    def product_vwc(self) -> bool:
        p = self.product.graph
        if not self.product_wc or 2 * self.product_wc_size != p.n:
            return False
        return not (p.n > 0 and min_degree(p) == 0)

    @property
    def wc_not_vwc(self) -> bool:
        return self.product_wc and not self.product_vwc


class GraphNFacts:
    """A graph together with the order of the complete second factor."""

    def __init__(self, graph: Graph, n: int, node_budget: int = DEFAULT_NODE_BUDGET) -> None:
        self.graph = graph
        self.n = n
        self.node_budget = node_budget

    @cached_property
    def instance(self) -> dict:
        return {"graph6": to_graph6(self.graph), "n": self.n}


def _json_girth(value: int | float) -> int | str:
    return "infinite" if value != value or value == float("inf") else int(value)


def _check_inverse_image(f: PairFacts) -> ClaimVerdict:
    """Maximal independent sets of G lift to maximal independent sets of the
    product when the second factor has no isolated vertices."""
    if f.h.has_isolated:
        return ClaimVerdict("inverse_image", f.instance, VACUOUS)
    prod = f.product
    adj = prod.graph.adj
    full = prod.graph.vertex_mask
    for mis in f.g.mis_list:
        lifted = 0
        for gv in bits(mis):
            lifted |= prod.layer_h(gv)
        broken = any(adj[v] & lifted for v in bits(lifted)) or any(
            not adj[v] & lifted for v in bits(full & ~lifted)
        )
        if broken:
            witness = {
                "factor_mis": to_vertices(mis),
                "lifted": prod.pairs(lifted),
            }
            return ClaimVerdict("inverse_image", f.instance, COUNTEREXAMPLE, witness)
    return ClaimVerdict("inverse_image", f.instance, HOLDS)


def _check_trivial_bounds(f: PairFacts) -> ClaimVerdict:
    return product_bounds_check(f.g.graph, f.h.graph, f.instance)


def _check_residual_wc(f: GraphFacts) -> ClaimVerdict:
    """Deleting the closed neighborhood of any independent set of a
    well-covered graph leaves a well-covered graph."""
    if not f.well_covered:
        return ClaimVerdict("residual_wc", f.instance, VACUOUS)
    g = f.graph
    for s in enumerate_independent_sets(g):
        sub = delete_closed_neighborhood(g, s)
        low, high, _, _ = kernel.independence_summary(sub.graph.adj)
        if low != high:
            witness = {
                "independent_set": to_vertices(s),
                "residual_vertices": list(sub.kept),
                "residual_i": low,
                "residual_alpha": high,
            }
            return ClaimVerdict("residual_wc", f.instance, COUNTEREXAMPLE, witness)
    return ClaimVerdict("residual_wc", f.instance, HOLDS)


def _check_clique_leftover(f: GraphFacts) -> ClaimVerdict:
    """An independent set one short of maximum is maximal or leaves a clique."""
    g = f.graph
    a = f.summary[1]
    if a >= 1:
        for s in enumerate_independent_sets(g):
            if s.bit_count() != a - 1:
                continue
            if closed_neighborhood(g, s) == g.vertex_mask:
                continue
            sub = delete_closed_neighborhood(g, s)
            if not is_complete(sub.graph):
                witness = {
                    "independent_set": to_vertices(s),
                    "residual_vertices": list(sub.kept),
                }
                return ClaimVerdict("clique_leftover", f.instance, COUNTEREXAMPLE, witness)
    return ClaimVerdict("clique_leftover", f.instance, HOLDS)


def _check_wc_direct(f: PairFacts) -> ClaimVerdict:
    """A well-covered product forces well-covered factors whose isolate-free
    parts have equal independence ratios.  Pairs with an edgeless factor are
    treated as out of hypothesis: the isolate-free part is then empty and
    the ratio is undefined."""
    if not f.product_wc:
        return ClaimVerdict("wc_direct", f.instance, VACUOUS)
    g, h = f.g.graph, f.h.graph
    if g.m == 0 or h.m == 0:
        return ClaimVerdict("wc_direct", f.instance, VACUOUS)
    if not f.g.well_covered or not f.h.well_covered:
        witness = {
            "g_well_covered": f.g.well_covered,
            "h_well_covered": f.h.well_covered,
        }
        return ClaimVerdict("wc_direct", f.instance, COUNTEREXAMPLE, witness)
    _, g_plus = split_isolated(g)
    _, h_plus = split_isolated(h)
    a_g = kernel.independence_summary(g_plus.graph.adj)[1]
    a_h = kernel.independence_summary(h_plus.graph.adj)[1]
    if a_g * h_plus.graph.n != a_h * g_plus.graph.n:
        witness = {
            "alpha_g_positive": a_g,
            "n_g_positive": g_plus.graph.n,
            "alpha_h_positive": a_h,
            "n_h_positive": h_plus.graph.n,
        }
        return ClaimVerdict("wc_direct", f.instance, COUNTEREXAMPLE, witness)
    return ClaimVerdict("wc_direct", f.instance, HOLDS)


def _check_berge(f: GraphFacts) -> ClaimVerdict:
    """In a well-covered graph without isolated vertices, every independent
    set is at most as large as its open neighborhood."""
    if not f.well_covered or f.has_isolated:
        return ClaimVerdict("berge", f.instance, VACUOUS)
    bad = berge_violation(f.graph)
    if bad is not None:
        witness = {
            "independent_set": to_vertices(bad),
            "open_neighborhood": to_vertices(neighborhood(f.graph, bad)),
        }
        return ClaimVerdict("berge", f.instance, COUNTEREXAMPLE, witness)
    return ClaimVerdict("berge", f.instance, HOLDS)


def _check_favaron(f: GraphFacts) -> ClaimVerdict:
    return favaron_equivalence_verdict(f.graph, f.instance)


def _check_vwc_product(f: PairFacts) -> ClaimVerdict:
    """With isolate-free factors at least one of which is very well-covered,
    the product being well-covered, the product being very well-covered, and
    both factors being very well-covered are all equivalent."""
    if f.g.has_isolated or f.h.has_isolated:
        return ClaimVerdict("vwc_product", f.instance, VACUOUS)
    if not (f.g.very_well_covered or f.h.very_well_covered):
        return ClaimVerdict("vwc_product", f.instance, VACUOUS)
    a = f.product_wc
    b = f.product_vwc
    c = f.g.very_well_covered and f.h.very_well_covered
    if a == b == c:
        return ClaimVerdict("vwc_product", f.instance, HOLDS)
    witness = {
        "product_well_covered": a,
        "product_very_well_covered": b,
        "both_factors_very_well_covered": c,
    }
    return ClaimVerdict("vwc_product", f.instance, COUNTEREXAMPLE, witness)


def _check_layer_sizes(f: GraphNFacts) -> ClaimVerdict:
    if f.n < 2:
        return ClaimVerdict("layer_sizes", f.instance, VACUOUS)
    return layer_cardinality_check(f.graph, f.n, f.instance)


def _check_kn_necessary(f: GraphNFacts) -> ClaimVerdict:
    if f.n < 2:
        return ClaimVerdict("kn_necessary", f.instance, VACUOUS)
    return necessary_condition_check(f.graph, f.n, f.instance)


def _check_bipartite_isolation(f: GraphFacts) -> ClaimVerdict:
    return bipartite_isolation_check(f.graph, f.instance)


def _check_closed_nbhd_size(f: PairFacts) -> ClaimVerdict:
    """With H nontrivial connected, G free of isolatable vertices, and the
    product well-covered, every independent k-set of G has closed
    neighborhood of size exactly k * n(G) / alpha(G)."""
    hyp = f.h.nontrivial_connected and f.g.isolatable_mask == 0 and f.product_wc
    if not hyp:
        return ClaimVerdict("closed_nbhd_size", f.instance, VACUOUS)
    g = f.g.graph
    a = f.g.summary[1]
    for s in enumerate_independent_sets(g):
        k = s.bit_count()
        if k == 0:
            continue
        closed = closed_neighborhood(g, s)
        if closed.bit_count() * a != k * g.n:
            witness = {
                "independent_set": to_vertices(s),
                "closed_neighborhood": to_vertices(closed),
                "alpha": a,
                "order": g.n,
            }
            return ClaimVerdict("closed_nbhd_size", f.instance, COUNTEREXAMPLE, witness)
    return ClaimVerdict("closed_nbhd_size", f.instance, HOLDS)


def _check_regularity(f: PairFacts) -> ClaimVerdict:
    """Same hypothesis as closed_nbhd_size but with both factors nontrivial
    connected; the first factor must be (n/alpha - 1)-regular."""
    hyp = (
        f.g.nontrivial_connected
        and f.h.nontrivial_connected
        and f.g.isolatable_mask == 0
        and f.product_wc
    )
    if not hyp:
        return ClaimVerdict("regularity", f.instance, VACUOUS)
    g = f.g.graph
    a = f.g.summary[1]
    degree = is_regular(g)
    if degree is None or (degree + 1) * a != g.n:
        witness = {
            "regular_degree": degree,
            "alpha": a,
            "order": g.n,
        }
        return ClaimVerdict("regularity", f.instance, COUNTEREXAMPLE, witness)
    return ClaimVerdict("regularity", f.instance, HOLDS)


def _check_k3_dichotomy(f: GraphFacts) -> ClaimVerdict:
    """A nontrivial connected G with well-covered G x K3 is K3 itself or has
    an isolatable vertex."""
    if not f.nontrivial_connected:
        return ClaimVerdict("k3_dichotomy", f.instance, VACUOUS)
    prod = direct_product(f.graph, complete(3))
    if kernel.well_covered_size(prod.graph.adj) < 0:
        return ClaimVerdict("k3_dichotomy", f.instance, VACUOUS)
    if (f.graph.n == 3 and is_complete(f.graph)) or f.isolatable_mask:
        return ClaimVerdict("k3_dichotomy", f.instance, HOLDS)
    witness = {"complete_of_order_3": False, "isolatable_vertices": []}
    return ClaimVerdict("k3_dichotomy", f.instance, COUNTEREXAMPLE, witness)


def _check_no_isolatable_complete(f: PairFacts) -> ClaimVerdict:
    """Nontrivial connected factors, well-covered product, and no isolatable
    vertex in the first factor force the first factor to be complete."""
    hyp = (
        f.g.nontrivial_connected
        and f.h.nontrivial_connected
        and f.product_wc
        and f.g.isolatable_mask == 0
    )
    if not hyp:
        return ClaimVerdict("no_isolatable_complete", f.instance, VACUOUS)
    g = f.g.graph
    if is_complete(g):
        return ClaimVerdict("no_isolatable_complete", f.instance, HOLDS)
    pair = next(
        (u, v) for u in range(g.n) for v in range(u + 1, g.n) if not g.has_edge(u, v)
    )
    return ClaimVerdict(
        "no_isolatable_complete", f.instance, COUNTEREXAMPLE, {"nonadjacent_pair": list(pair)}
    )


def _check_both_complete(f: PairFacts) -> ClaimVerdict:
    """If additionally neither factor has an isolatable vertex, both factors
    are complete graphs of the same order."""
    hyp = (
        f.g.nontrivial_connected
        and f.h.nontrivial_connected
        and f.g.isolatable_mask == 0
        and f.h.isolatable_mask == 0
        and f.product_wc
    )
    if not hyp:
        return ClaimVerdict("both_complete", f.instance, VACUOUS)
    g, h = f.g.graph, f.h.graph
    if is_complete(g) and is_complete(h) and g.n == h.n:
        return ClaimVerdict("both_complete", f.instance, HOLDS)
    witness = {
        "g_complete": is_complete(g),
        "h_complete": is_complete(h),
        "orders": [g.n, h.n],
    }
    return ClaimVerdict("both_complete", f.instance, COUNTEREXAMPLE, witness)


def _check_no_bipartite_residual(f: PairFacts) -> ClaimVerdict:
    """For a well-covered but not very well-covered product of nontrivial
    connected factors, no independent set of the first factor leaves behind
    a bipartite component larger than a single vertex."""
    hyp = f.g.nontrivial_connected and f.h.nontrivial_connected and f.wc_not_vwc
    if not hyp:
        return ClaimVerdict("no_bipartite_residual", f.instance, VACUOUS)
    g = f.g.graph
    for s in enumerate_independent_sets(g):
        sub = delete_closed_neighborhood(g, s)
        for comp in components(sub.graph):
            if comp.bit_count() < 2:
                continue
            piece = induced_subgraph(sub.graph, comp).graph
            if is_bipartite(piece) is not None:
                witness = {
                    "independent_set": to_vertices(s),
                    "component_vertices": [sub.to_old(v) for v in to_vertices(comp)],
                }
                return ClaimVerdict(
                    "no_bipartite_residual", f.instance, COUNTEREXAMPLE, witness
                )
    return ClaimVerdict("no_bipartite_residual", f.instance, HOLDS)


def _in_triangle(g: Graph, w: int) -> bool:
    return any(g.adj[w] & g.adj[a] for a in to_vertices(g.adj[w]))


def _check_edge_triangle(f: PairFacts) -> ClaimVerdict:
    """Same hypothesis; every edge of either factor is incident with a
    triangle, meaning at least one endpoint lies in one.  The edge itself
    need not span a triangle."""
    hyp = f.g.nontrivial_connected and f.h.nontrivial_connected and f.wc_not_vwc
    if not hyp:
        return ClaimVerdict("edge_triangle", f.instance, VACUOUS)
    for name, facts in (("g", f.g), ("h", f.h)):
        graph = facts.graph
        for u, v in graph.edges():
            if not _in_triangle(graph, u) and not _in_triangle(graph, v):
                return ClaimVerdict(
                    "edge_triangle",
                    f.instance,
                    COUNTEREXAMPLE,
                    {"factor": name, "edge": [u, v]},
                )
    return ClaimVerdict("edge_triangle", f.instance, HOLDS)


def _check_girth_three(f: PairFacts) -> ClaimVerdict:
    """Same hypothesis; both factors have girth exactly three."""
    hyp = f.g.nontrivial_connected and f.h.nontrivial_connected and f.wc_not_vwc
    if not hyp:
        return ClaimVerdict("girth_three", f.instance, VACUOUS)
    gg = girth(f.g.graph)
    gh = girth(f.h.graph)
    if gg == 3 and gh == 3:
        return ClaimVerdict("girth_three", f.instance, HOLDS)
    witness = {"girth_g": _json_girth(gg), "girth_h": _json_girth(gh)}
    return ClaimVerdict("girth_three", f.instance, COUNTEREXAMPLE, witness)


def _check_twins(f: GraphFacts) -> ClaimVerdict:
    """Vertices with identical open neighborhoods are either both inside a
    maximal independent set or that set meets their common neighborhood.
    Vacuous when the graph has no such pair."""
    g = f.graph
    twins = [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if g.adj[u] == g.adj[v]
    ]
    if not twins:
        return ClaimVerdict("twins", f.instance, VACUOUS)
    for mis in f.mis_list:
        for u, v in twins:
            if g.adj[u] & mis:
                continue
            if mis >> u & 1 and mis >> v & 1:
                continue
            witness = {"mis": to_vertices(mis), "twin_pair": [u, v]}
            return ClaimVerdict("twins", f.instance, COUNTEREXAMPLE, witness)
    return ClaimVerdict("twins", f.instance, HOLDS)


def _check_h_family_product(f: GraphNFacts) -> ClaimVerdict:
    """Recognized split graphs H(k, n-1) have well-covered product with K_n.

    The hypothesis is recognized structurally, so relabeled instances work.
    """
    params = h_family_params(f.graph)
    if params is None or f.n != params[1] + 1:
        return ClaimVerdict("h_family_product", f.instance, VACUOUS)
    report = kn_alpha_i(f.graph, f.n, f.node_budget)
    if report.i_value == report.alpha_value:
        return ClaimVerdict("h_family_product", f.instance, HOLDS)
    witness = {
        "i": report.i_value,
        "alpha": report.alpha_value,
        "argmin": report.argmin.to_json(),
        "argmax": report.argmax.to_json(),
    }
    return ClaimVerdict("h_family_product", f.instance, COUNTEREXAMPLE, witness)


def _check_multipartite_square(f: GraphFacts) -> ClaimVerdict:
    """Complete multipartite graphs with equal parts have well-covered
    direct product squares."""
    if multipartite_params(f.graph) is None:
        return ClaimVerdict("multipartite_square", f.instance, VACUOUS)
    prod = direct_product(f.graph, f.graph)
    low, high, _, _ = kernel.independence_summary(prod.graph.adj)
    if low == high:
        return ClaimVerdict("multipartite_square", f.instance, HOLDS)
    witness = {"square_i": low, "square_alpha": high}
    return ClaimVerdict("multipartite_square", f.instance, COUNTEREXAMPLE, witness)


def _check_support_leaf_unique(f: GraphFacts) -> ClaimVerdict:
    """In a well-covered graph every support vertex has exactly one leaf."""
    g = f.graph
    leaves = [v for v in range(g.n) if g.degree(v) == 1]
    supports = sorted({g.adj[v].bit_length() - 1 for v in leaves})
    if not f.well_covered or not supports:
        return ClaimVerdict("support_leaf_unique", f.instance, VACUOUS)
    leaf_mask = to_mask(leaves)
    for x in supports:
        attached = g.adj[x] & leaf_mask
        if attached.bit_count() != 1:
            witness = {"support": x, "adjacent_leaves": to_vertices(attached)}
            return ClaimVerdict("support_leaf_unique", f.instance, COUNTEREXAMPLE, witness)
    return ClaimVerdict("support_leaf_unique", f.instance, HOLDS)


@dataclass(frozen=True)
class Claim:
    """One registered claim: stable id, instance shape, and checker."""

    claim_id: str
    shape: str
    check: Callable
    summary: str


_CLAIMS = (
    Claim(
        "inverse_image",
        SHAPE_PAIR,
        _check_inverse_image,
        "maximal independent sets of G lift to maximal sets of G x H when H has no isolated vertices",
    ),
    Claim(
        "trivial_bounds",
        SHAPE_PAIR,
        _check_trivial_bounds,
        "alpha(G x H) >= max(alpha(G) n(H), alpha(H) n(G)) and i(G x H) <= min(i(G) n(H), i(H) n(G))",
    ),
    Claim(
        "residual_wc",
        SHAPE_GRAPH,
        _check_residual_wc,
        "removing N[I] from a well-covered graph leaves a well-covered graph",
    ),
    Claim(
        "clique_leftover",
        SHAPE_GRAPH,
        _check_clique_leftover,
        "an independent set of size alpha - 1 is maximal or leaves a clique",
    ),
    Claim(
        "wc_direct",
        SHAPE_PAIR,
        _check_wc_direct,
        "well-covered products have well-covered factors with equal isolate-free independence ratios",
    ),
    Claim(
        "berge",
        SHAPE_GRAPH,
        _check_berge,
        "independent sets of well-covered isolate-free graphs satisfy |S| <= |N(S)|",
    ),
    Claim(
        "favaron",
        SHAPE_GRAPH,
        _check_favaron,
        "very well-covered is equivalent to the perfect-matching pairing property",
    ),
    Claim(
        "vwc_product",
        SHAPE_PAIR,
        _check_vwc_product,
        "with a very well-covered factor, product well-coveredness collapses to both factors very well-covered",
    ),
    Claim(
        "layer_sizes",
        SHAPE_GRAPH_N,
        _check_layer_sizes,
        "maximal independent sets of G x K_n meet every layer in 0, 1, or n vertices",
    ),
    Claim(
        "kn_necessary",
        SHAPE_GRAPH_N,
        _check_kn_necessary,
        "well-covered G x K_n forces isolated vertices in G - N[x] for every x of degree >= n",
    ),
    Claim(
        "bipartite_isolation",
        SHAPE_GRAPH,
        _check_bipartite_isolation,
        "bipartite well-covered graphs with minimum degree 2 have isolatable vertices everywhere",
    ),
    Claim(
        "closed_nbhd_size",
        SHAPE_PAIR,
        _check_closed_nbhd_size,
        "without isolatable vertices, independent k-sets have closed neighborhoods of size k n / alpha",
    ),
    Claim(
        "regularity",
        SHAPE_PAIR,
        _check_regularity,
        "without isolatable vertices, a well-covered product forces an (n/alpha - 1)-regular factor",
    ),
    Claim(
        "k3_dichotomy",
        SHAPE_GRAPH,
        _check_k3_dichotomy,
        "well-covered G x K3 forces G = K3 or an isolatable vertex in G",
    ),
    Claim(
        "no_isolatable_complete",
        SHAPE_PAIR,
        _check_no_isolatable_complete,
        "a factor without isolatable vertices in a well-covered product is complete",
    ),
    Claim(
        "both_complete",
        SHAPE_PAIR,
        _check_both_complete,
        "two factors without isolatable vertices force equal complete graphs",
    ),
    Claim(
        "no_bipartite_residual",
        SHAPE_PAIR,
        _check_no_bipartite_residual,
        "well-covered but not very well-covered products leave no bipartite residual component above K1",
    ),
    Claim(
        "edge_triangle",
        SHAPE_PAIR,
        _check_edge_triangle,
        "well-covered but not very well-covered products leave every factor edge incident with a triangle",
    ),
    Claim(
        "girth_three",
        SHAPE_PAIR,
        _check_girth_three,
        "well-covered but not very well-covered products force girth 3 in both factors",
    ),
    Claim(
        "twins",
        SHAPE_GRAPH,
        _check_twins,
        "a maximal independent set meets the common neighborhood of twins or contains both",
    ),
    Claim(
        "h_family_product",
        SHAPE_GRAPH_N,
        _check_h_family_product,
        "split graphs H(k, n-1) have well-covered direct product with K_n",
    ),
    Claim(
        "multipartite_square",
        SHAPE_GRAPH,
        _check_multipartite_square,
        "balanced complete multipartite graphs have well-covered direct product squares",
    ),
    Claim(
        "support_leaf_unique",
        SHAPE_GRAPH,
        _check_support_leaf_unique,
        "support vertices of well-covered graphs carry exactly one leaf",
    ),
)

REGISTRY: dict[str, Claim] = {c.claim_id: c for c in _CLAIMS}
CLAIM_IDS: tuple[str, ...] = tuple(c.claim_id for c in _CLAIMS)

Instance = Graph | tuple


def instance_shape(instance: Instance) -> str:
    if isinstance(instance, Graph):
        return SHAPE_GRAPH
    if isinstance(instance, tuple) and len(instance) == 2 and isinstance(instance[0], Graph):
        if isinstance(instance[1], Graph):
            return SHAPE_PAIR
        if isinstance(instance[1], int):
            return SHAPE_GRAPH_N
    raise TypeError(f"unrecognized instance {instance!r}")


def _facts_for(shape: str, instance: Instance, node_budget: int = DEFAULT_NODE_BUDGET):
    if shape == SHAPE_GRAPH:
        return GraphFacts(instance)
    if shape == SHAPE_PAIR:
        return PairFacts(instance[0], instance[1])
    return GraphNFacts(instance[0], instance[1], node_budget)


def verify(
    claim_id: str, instance: Instance, node_budget: int = DEFAULT_NODE_BUDGET
) -> ClaimVerdict:
    """Check one claim on one instance.  The instance must match the claim's
    shape: a Graph, a (Graph, Graph) pair, or a (Graph, n) pair."""
    claim = REGISTRY.get(claim_id)
    if claim is None:
        raise KeyError(f"unknown claim id: {claim_id}")
    shape = instance_shape(instance)
    if shape != claim.shape:
        raise TypeError(f"claim {claim_id} expects a {claim.shape} instance, got {shape}")
    return claim.check(_facts_for(shape, instance, node_budget))


@dataclass
class ClaimTally:
    holds: int = 0
    vacuous: int = 0
    counterexamples: list[ClaimVerdict] = field(default_factory=list)

    def add(self, verdict: ClaimVerdict) -> None:
        if verdict.status == HOLDS:
            self.holds += 1
        elif verdict.status == VACUOUS:
            self.vacuous += 1
        else:
            self.counterexamples.append(verdict)

    def merge(self, other: "ClaimTally") -> "ClaimTally":
        return ClaimTally(
            self.holds + other.holds,
            self.vacuous + other.vacuous,
            self.counterexamples + other.counterexamples,
        )

    def to_json(self) -> dict:
        return {
            "holds": self.holds,
            "vacuous": self.vacuous,
            "counterexamples": [v.to_json() for v in self.counterexamples],
        }


@dataclass
class SuiteReport:
    tallies: dict[str, ClaimTally]

    @property
    def passed(self) -> bool:
        return all(not t.counterexamples for t in self.tallies.values())

    @property
    def counterexample_count(self) -> int:
        return sum(len(t.counterexamples) for t in self.tallies.values())

    def merge(self, other: "SuiteReport") -> "SuiteReport":
        merged = dict(self.tallies)
        for claim_id, tally in other.tallies.items():
            if claim_id in merged:
                merged[claim_id] = merged[claim_id].merge(tally)
            else:
                merged[claim_id] = tally
        return SuiteReport(merged)

    def to_json(self) -> dict:
        return {claim_id: tally.to_json() for claim_id, tally in self.tallies.items()}


def run_suite(
    claim_ids: Iterable[str],
    instances: Iterable[Instance],
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> SuiteReport:
    """Apply every named claim to every instance of its shape.

    Facts are computed once per instance and shared by all claims on it.
    Instances whose shape matches no requested claim are skipped.
    """
    claims = [REGISTRY[c] for c in claim_ids]
    by_shape: dict[str, list[Claim]] = {}
    for claim in claims:
        by_shape.setdefault(claim.shape, []).append(claim)
    report = SuiteReport({c.claim_id: ClaimTally() for c in claims})
    for inst in instances:
        shape = instance_shape(inst)
        group = by_shape.get(shape)
        if not group:
            continue
        facts = _facts_for(shape, inst, node_budget)
        for claim in group:
            report.tallies[claim.claim_id].add(claim.check(facts))
    return report


def _suite_chunk(args: tuple[tuple[str, ...], list[Instance], int]) -> SuiteReport:
    claim_ids, chunk, node_budget = args
    return run_suite(claim_ids, chunk, node_budget)


def run_suite_parallel(
    claim_ids: Iterable[str],
    instances: Iterable[Instance],
    jobs: int = 1,
    chunk_size: int = 512,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> SuiteReport:
    """Partition the instance stream across worker processes and merge the
    partial reports in stream order, so output is independent of timing."""
    ids = tuple(claim_ids)
    if jobs <= 1:
        return run_suite(ids, instances, node_budget)
    import multiprocessing

    def chunked() -> Iterator[tuple[tuple[str, ...], list[Instance], int]]:
        batch: list[Instance] = []
        for inst in instances:
            batch.append(inst)
            if len(batch) >= chunk_size:
                yield ids, batch, node_budget
                batch = []
        if batch:
            yield ids, batch, node_budget

    report = SuiteReport({c: ClaimTally() for c in ids})
    ctx = multiprocessing.get_context("fork")
    with ctx.Pool(jobs) as pool:
        for partial in pool.imap(_suite_chunk, chunked()):
            report = report.merge(partial)
    return report


def corpus_single_instances(max_n: int, representatives: bool = False) -> Iterator[Graph]:
    """Connected graphs up to max_n vertices, labeled or one per class."""
    stream = corpus_representatives if representatives else corpus
    yield from stream(max_n)


def corpus_pair_instances(
    max_n: int, cap: int = 36, representatives: bool = False
) -> Iterator[tuple[Graph, Graph]]:
    """Ordered pairs of connected graphs whose product stays within cap."""
    pool = list(corpus_single_instances(max_n, representatives))
    for g in pool:
        for h in pool:
            if g.n * h.n <= cap:
                yield g, h


def corpus_graph_n_instances(
    max_n: int, orders: tuple[int, ...] = (2, 3), representatives: bool = False
) -> Iterator[tuple[Graph, int]]:
    """Connected graphs paired with each requested clique order."""
    for g in corpus_single_instances(max_n, representatives):
        for n in orders:
            if g.n * n <= 64:
                yield g, n


def targeted_instances() -> list[Instance]:
    """Hand-picked instances that exercise hypotheses too rare to appear in
    tiny corpora, so no claim passes the suite by vacuity alone."""
    k2 = complete(2)
    k3 = complete(3)
    return [
        complete(1),
        k2,
        k3,
        cycle(4),
        cycle(5),
        complete_multipartite([2, 2, 2]),
        h_family(3, 1),
        h_family(2, 2),
        (k2, k2),
        (k3, k3),
        (complete(4), complete(4)),
        (disjoint_union(k2, complete(1)), k2),
        (cycle(5), cycle(5)),
        (k3, complete_multipartite([2, 2])),
        (h_family(2, 2), k3),
        (h_family(3, 1), k2),
        (k2, 2),
        (k3, 2),
        (k3, 3),
        (cycle(4), 2),
        (cycle(7), 2),
        (h_family(3, 1), 2),
        (h_family(2, 2), 3),
        (h_family(1, 2), 3),
    ]
