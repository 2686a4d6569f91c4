"""Direct product construction, layers, lifting, and the product bound
check, against hand-computed adjacency and the subset-filter oracle."""

import random

import pytest
from hypothesis import given, strategies as st

from brute import brute_summary, is_independent, random_graph
from wellcovered import kernel
from wellcovered.families import complete, cycle, path
from wellcovered.graphs import CapacityError, Graph, from_edge_list, to_mask
from wellcovered.products import direct_product, lift_independent, product_bounds_check
from wellcovered.verdicts import HOLDS, VACUOUS


@st.composite
def graph_pairs(draw):
    def one(n):
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
        return from_edge_list(n, chosen)

    n1 = draw(st.integers(min_value=1, max_value=5))
    n2 = draw(st.integers(min_value=1, max_value=5))
    return one(n1), one(n2)


class TestConstruction:
    def test_k2_times_k2_is_two_disjoint_edges(self):
        p = direct_product(complete(2), complete(2))
        # row-major order: (0,0),(0,1),(1,0),(1,1); edges (0,0)-(1,1), (0,1)-(1,0)
        assert sorted(p.graph.edges()) == [(0, 3), (1, 2)]

    def test_adjacency_definition(self):
        g, h = cycle(3), path(3)
        p = direct_product(g, h)
        for g1 in range(3):
            for h1 in range(3):
                for g2 in range(3):
                    for h2 in range(3):
                        expect = g.has_edge(g1, g2) and h.has_edge(h1, h2)
                        got = p.graph.has_edge(p.index(g1, h1), p.index(g2, h2))
                        assert got == expect

    def test_index_round_trip(self):
        p = direct_product(cycle(4), path(3))
        for g in range(4):
            for h in range(3):
                assert p.factor_pair(p.index(g, h)) == (g, h)

    def test_capacity(self):
        with pytest.raises(CapacityError):
            direct_product(complete(9), complete(9))

    def test_commutativity_up_to_relabeling(self):
        g, h = cycle(5), path(4)
        a = direct_product(g, h).graph
        b = direct_product(h, g).graph
        assert kernel.independence_summary(a.adj)[:2] == kernel.independence_summary(b.adj)[:2]
        assert a.m == b.m

    def test_kernel_adjacency_matches_definition(self):
        rng = random.Random(5150)
        for _ in range(50):
            g = random_graph(rng, rng.randint(1, 6), rng.random())
            h = random_graph(rng, rng.randint(1, 6), rng.random())
            p = direct_product(g, h)
            assert list(p.graph.adj) == kernel.direct_product_adj(g.adj, h.adj)


class TestLayers:
    @given(graph_pairs())
    def test_layers_are_independent(self, pair):
        g, h = pair
        p = direct_product(g, h)
        for gv in range(g.n):
            assert is_independent(p.graph.adj, p.layer_h(gv))
        for hv in range(h.n):
            assert is_independent(p.graph.adj, p.layer_g(hv))

    def test_projections(self):
        p = direct_product(cycle(4), path(3))
        s = to_mask([p.index(0, 1), p.index(2, 1), p.index(2, 2)])
        assert p.project_g(s) == to_mask([0, 2])
        assert p.project_h(s) == to_mask([1, 2])

    def test_pairs_serialization(self):
        p = direct_product(cycle(3), path(2))
        s = to_mask([p.index(1, 0), p.index(2, 1)])
        assert p.pairs(s) == [(1, 0), (2, 1)]


class TestLifting:
    def test_lift_layer_union(self):
        g, h = cycle(5), complete(2)
        p = direct_product(g, h)
        lifted = lift_independent(p, to_mask([0, 2]))
        assert lifted == p.layer_h(0) | p.layer_h(2)

    def test_lift_rejects_dependent_set(self):
        p = direct_product(cycle(5), complete(2))
        with pytest.raises(ValueError, match="not independent"):
            lift_independent(p, to_mask([0, 1]))

    def test_lift_needs_carried_factors(self):
        p = direct_product(cycle(4), complete(2))
        bare = type(p)(p.graph, p.n_g, p.n_h)
        with pytest.raises(ValueError, match="factors"):
            lift_independent(bare, to_mask([0]))


class TestBoundsCheck:
    def test_holds_for_isolate_free_pairs(self):
        rng = random.Random(2)
        seen_holds = 0
        for _ in range(150):
            g = random_graph(rng, rng.randint(1, 5), 0.6)
            h = random_graph(rng, rng.randint(1, 5), 0.6)
            verdict = product_bounds_check(g, h)
            assert verdict.status in (HOLDS, VACUOUS)
            if verdict.status == HOLDS:
                seen_holds += 1
        assert seen_holds > 0

    def test_vacuous_with_isolated_vertex(self):
        g = from_edge_list(2, [])
        assert product_bounds_check(g, complete(2)).status == VACUOUS

    def test_bounds_against_oracle(self):
        rng = random.Random(31)
        for _ in range(40):
            g = random_graph(rng, rng.randint(2, 4), 0.7)
            h = random_graph(rng, rng.randint(2, 4), 0.7)
            p = direct_product(g, h)
            i_p, a_p = brute_summary(p.graph.adj, p.graph.n)
            i_g, a_g = brute_summary(g.adj, g.n)
            i_h, a_h = brute_summary(h.adj, h.n)
            has_iso = any(not r for r in g.adj) or any(not r for r in h.adj)
            if not has_iso:
                assert a_p >= max(a_g * h.n, a_h * g.n)
                assert i_p <= min(i_g * h.n, i_h * g.n)
