"""Claim registry: dispatch, known verdicts, tallying, and the suite
runner in both serial and parallel form."""

import json

import pytest

from wellcovered.claims import (
    CLAIM_IDS,
    REGISTRY,
    ClaimTally,
    SuiteReport,
    corpus_graph_n_instances,
    corpus_pair_instances,
    corpus_single_instances,
    instance_shape,
    run_suite,
    run_suite_parallel,
    targeted_instances,
    verify,
)
from wellcovered.families import (
    complete,
    complete_multipartite,
    corona_with_k1,
    cycle,
    h_family,
    path,
)
from wellcovered.graphs import disjoint_union
from wellcovered.verdicts import COUNTEREXAMPLE, HOLDS, VACUOUS, ClaimVerdict

EXPECTED_IDS = (
    "inverse_image",
    "trivial_bounds",
    "residual_wc",
    "clique_leftover",
    "wc_direct",
    "berge",
    "favaron",
    "vwc_product",
    "layer_sizes",
    "kn_necessary",
    "bipartite_isolation",
    "closed_nbhd_size",
    "regularity",
    "k3_dichotomy",
    "no_isolatable_complete",
    "both_complete",
    "no_bipartite_residual",
    "edge_triangle",
    "girth_three",
    "twins",
    "h_family_product",
    "multipartite_square",
    "support_leaf_unique",
)

PAIR_IDS = frozenset(
    {
        "inverse_image",
        "trivial_bounds",
        "wc_direct",
        "vwc_product",
        "closed_nbhd_size",
        "regularity",
        "no_isolatable_complete",
        "both_complete",
        "no_bipartite_residual",
        "edge_triangle",
        "girth_three",
    }
)
GRAPH_N_IDS = frozenset({"layer_sizes", "kn_necessary", "h_family_product"})


class TestRegistry:
    def test_ids_frozen(self):
        assert CLAIM_IDS == EXPECTED_IDS

    def test_shapes(self):
        for claim_id, claim in REGISTRY.items():
            if claim_id in PAIR_IDS:
                assert claim.shape == "graph-pair"
            elif claim_id in GRAPH_N_IDS:
                assert claim.shape == "graph-plus-n"
            else:
                assert claim.shape == "single-graph"

    def test_summaries_present(self):
        assert all(claim.summary for claim in REGISTRY.values())

    def test_instance_shape(self):
        k2 = complete(2)
        assert instance_shape(k2) == "single-graph"
        assert instance_shape((k2, k2)) == "graph-pair"
        assert instance_shape((k2, 3)) == "graph-plus-n"
        with pytest.raises(TypeError, match="unrecognized"):
            instance_shape("Bw")

    def test_dispatch_errors(self):
        with pytest.raises(KeyError, match="unknown claim"):
            verify("nope", complete(2))
        with pytest.raises(TypeError, match="expects"):
            verify("berge", (complete(2), complete(2)))


class TestKnownVerdicts:
    """Spot checks with verdicts worked out by hand."""

    def test_berge(self):
        assert verify("berge", cycle(7)).status == HOLDS
        # an isolated vertex knocks out the hypothesis
        assert verify("berge", disjoint_union(complete(2), complete(1))).status == VACUOUS

    def test_wc_direct(self):
        pair = (disjoint_union(complete(2), complete(1)), complete(2))
        assert verify("wc_direct", pair).status == HOLDS
        # an edgeless factor makes every layer-union maximal, so the claim
        # does not apply
        assert verify("wc_direct", (complete(1), cycle(6))).status == VACUOUS

    def test_inverse_image(self):
        assert verify("inverse_image", (cycle(4), cycle(4))).status == HOLDS
        assert verify("inverse_image", (complete(2), complete(1))).status == VACUOUS

    def test_girth_three(self):
        # K3 x K3 is well-covered with 2 alpha < 9, so the hypothesis bites
        assert verify("girth_three", (complete(3), complete(3))).status == HOLDS
        # C4 x K2 is very well-covered, so it does not
        assert verify("girth_three", (cycle(4), complete(2))).status == VACUOUS

    def test_multipartite_square(self):
        assert verify("multipartite_square", complete_multipartite([2, 2, 2])).status == HOLDS
        assert verify("multipartite_square", cycle(5)).status == VACUOUS

    def test_k3_dichotomy(self):
        assert verify("k3_dichotomy", complete(3)).status == HOLDS
        # P2 x K3 is not well-covered
        assert verify("k3_dichotomy", path(2)).status == VACUOUS

    def test_h_family_product(self):
        assert verify("h_family_product", (h_family(2, 2), 3)).status == HOLDS
        assert verify("h_family_product", (cycle(4), 2)).status == VACUOUS

    def test_kn_necessary(self):
        assert verify("kn_necessary", (complete(3), 3)).status == HOLDS
        assert verify("kn_necessary", (cycle(5), 2)).status == VACUOUS

    def test_twins(self):
        assert verify("twins", cycle(4)).status == HOLDS
        assert verify("twins", path(4)).status == VACUOUS

    def test_support_leaf_unique(self):
        assert verify("support_leaf_unique", corona_with_k1(2)).status == HOLDS
        # the star has a support vertex with three leaves but is not
        # well-covered, so the claim is silent
        assert verify("support_leaf_unique", complete_multipartite([1, 3])).status == VACUOUS

    def test_verdict_serialization(self):
        v = verify("berge", cycle(7))
        data = v.to_json()
        assert data["claim"] == "berge"
        assert data["status"] == "holds"
        assert set(data["instance"]) == {"graph6"}


class TestSuite:
    def test_targeted_non_vacuity(self):
        report = run_suite(CLAIM_IDS, targeted_instances())
        assert report.passed
        assert report.counterexample_count == 0
        for claim_id in CLAIM_IDS:
            assert report.tallies[claim_id].holds >= 1, claim_id

    def test_deterministic(self):
        first = run_suite(CLAIM_IDS, targeted_instances()).to_json()
        second = run_suite(CLAIM_IDS, targeted_instances()).to_json()
        assert json.dumps(first, sort_keys=True) == json.dumps(second, sort_keys=True)

    def test_parallel_matches_serial(self):
        instances = (
            list(corpus_single_instances(3))
            + list(corpus_pair_instances(3, cap=9))
            + list(corpus_graph_n_instances(3))
        )
        serial = run_suite(CLAIM_IDS, instances)
        parallel = run_suite_parallel(CLAIM_IDS, instances, jobs=2, chunk_size=8)
        assert serial.to_json() == parallel.to_json()

    def test_subset_of_claims(self):
        report = run_suite(["berge"], targeted_instances())
        assert set(report.tallies) == {"berge"}

    def test_pair_cap_bounds_product_order(self):
        pairs = list(corpus_pair_instances(3, cap=5))
        assert len(pairs) == 12
        assert all(g.n * h.n <= 5 for g, h in pairs)

    def test_graph_n_orders(self):
        insts = list(corpus_graph_n_instances(2, orders=(2, 4)))
        assert [(g.n, n) for g, n in insts] == [(1, 2), (1, 4), (2, 2), (2, 4)]


class TestTallyMachinery:
    """The counterexample path never fires on real claims, so exercise it
    with a hand-built verdict."""

    def fake(self, status):
        return ClaimVerdict("berge", {"graph6": "Bw"}, status, witness={"set": [0]})

    def test_add_and_counts(self):
        tally = ClaimTally()
        tally.add(self.fake(HOLDS))
        tally.add(self.fake(VACUOUS))
        tally.add(self.fake(COUNTEREXAMPLE))
        assert (tally.holds, tally.vacuous, len(tally.counterexamples)) == (1, 1, 1)

    def test_report_fails_on_counterexample(self):
        report = SuiteReport({"berge": ClaimTally()})
        report.tallies["berge"].add(self.fake(COUNTEREXAMPLE))
        assert not report.passed
        assert report.counterexample_count == 1
        encoded = report.to_json()["berge"]["counterexamples"][0]
        assert encoded["status"] == "counterexample"
        assert encoded["witness"] == {"set": [0]}

    def test_merge(self):
        a = SuiteReport({"berge": ClaimTally(holds=2)})
        b = SuiteReport({"berge": ClaimTally(holds=1, vacuous=3), "twins": ClaimTally(holds=5)})
        merged = a.merge(b)
        assert merged.tallies["berge"].holds == 3
        assert merged.tallies["berge"].vacuous == 3
        assert merged.tallies["twins"].holds == 5
