"""The compiled kernel and the pure-Python fallback must be observationally
identical: same sets, same order, same witnesses, same short-circuits."""

import os
import random
import subprocess
import sys

import pytest

from brute import brute_maximal_independent_sets, brute_summary, random_graph
from wellcovered import _mis_fallback as pure
from wellcovered import kernel
from wellcovered.families import complete, complete_multipartite, cycle, h_family, path

compiled = pytest.importorskip(
    "wellcovered._mis_core", reason="compiled kernel not built"
)


def sample_graphs():
    rng = random.Random(41)
    graphs = [
        complete(1),
        complete(6),
        cycle(4),
        cycle(7),
        path(6),
        h_family(4, 2),
        h_family(3, 1),
        complete_multipartite([2, 2, 2]),
    ]
    for _ in range(200):
        graphs.append(random_graph(rng, rng.randint(1, 10), rng.random()))
    for _ in range(10):
        graphs.append(random_graph(rng, rng.randint(11, 18), 0.4))
    return graphs


@pytest.mark.parametrize("g", sample_graphs(), ids=lambda g: f"n{g.n}m{g.m}")
def test_identical_enumeration(g):
    assert compiled.maximal_independent_sets(g.adj) == pure.maximal_independent_sets(g.adj)


def test_identical_derived_quantities():
    for g in sample_graphs():
        assert compiled.count_maximal_independent_sets(g.adj) == pure.count_maximal_independent_sets(g.adj)
        assert compiled.independence_summary(g.adj) == pure.independence_summary(g.adj)
        assert compiled.well_covered_size(g.adj) == pure.well_covered_size(g.adj)


def test_agrees_with_subset_filter():
    rng = random.Random(99)
    for _ in range(120):
        g = random_graph(rng, rng.randint(0, 9), rng.random())
        expect = brute_maximal_independent_sets(g.adj, g.n)
        assert sorted(compiled.maximal_independent_sets(g.adj)) == expect
        if expect:
            assert compiled.independence_summary(g.adj)[:2] == brute_summary(g.adj, g.n)


def test_order_64_boundary():
    g = complete(64)
    sets = compiled.maximal_independent_sets(g.adj)
    assert sets == pure.maximal_independent_sets(g.adj)
    assert len(sets) == 64


def test_env_forces_fallback():
    code = "import wellcovered; print(wellcovered.BACKEND)"
    env = dict(os.environ, WELLCOVERED_PURE="1")
    out = subprocess.run(
        [sys.executable, "-c", code], capture_output=True, text=True, env=env, check=True
    )
    assert out.stdout.strip() == "python"
    env.pop("WELLCOVERED_PURE")
    out = subprocess.run(
        [sys.executable, "-c", code], capture_output=True, text=True, env=env, check=True
    )
    assert out.stdout.strip() == "cython"


def test_selected_backend_exports_kernel_api():
    for name in (
        "maximal_independent_sets",
        "count_maximal_independent_sets",
        "independence_summary",
        "well_covered_size",
        "direct_product_adj",
    ):
        assert hasattr(kernel, name)
