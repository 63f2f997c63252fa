import itertools

import pytest
from hypothesis import given

from hog.core import build_graph, standard_cycle, standard_path
from hog.enumeration import small_graphs
from hog.errors import EmptyGraphError
from hog.scc import (
    is_acyclic,
    is_connected,
    is_strongly_connected,
    scc_decompose,
    weak_components,
)
from oracles import scc_by_transitive_closure
from strategies import graphs


def test_cycle_is_one_component():
    dec = scc_decompose(standard_cycle(3))
    assert dec.components == (("x0", "x1", "x2"),)
    assert dec.condensation.arcs == ()


def test_path_gives_singletons_with_path_shaped_condensation():
    dec = scc_decompose(standard_path(3))
    assert len(dec.components) == 3
    assert all(len(c) == 1 for c in dec.components)
    cond = dec.condensation
    assert len(cond.arcs) == 2
    assert is_acyclic(cond)


def test_two_disjoint_cycles():
    g = build_graph(
        ["a", "b", "c", "d"],
        [("e0", "a", "b"), ("e1", "b", "a"), ("e2", "c", "d"), ("e3", "d", "c")],
    )
    dec = scc_decompose(g)
    assert len(dec.components) == 2


def test_strongly_connected_predicates():
    assert is_strongly_connected(standard_cycle(5))
    assert not is_strongly_connected(standard_path(2))
    assert is_strongly_connected(standard_cycle(0))  # single trivial component
    with pytest.raises(EmptyGraphError):
        is_strongly_connected(build_graph([], []))


def test_is_connected():
    assert is_connected(standard_path(4))
    assert not is_connected(build_graph(["a", "b"], []))
    assert is_connected(standard_cycle(3))
    with pytest.raises(EmptyGraphError):
        is_connected(build_graph([], []))


def test_is_acyclic():
    assert is_acyclic(standard_path(5))
    assert not is_acyclic(standard_cycle(1))
    assert is_acyclic(build_graph([], []))


@given(graphs(max_nodes=5, max_arcs=8))
def test_partition_matches_transitive_closure_oracle(g):
    dec = scc_decompose(g)
    assert {frozenset(c) for c in dec.components} == scc_by_transitive_closure(g)


@given(graphs(max_nodes=5, max_arcs=8))
def test_condensation_is_acyclic_and_reverse_topological(g):
    dec = scc_decompose(g)
    assert is_acyclic(dec.condensation)
    # components listed successors-first: every condensation arc points backwards
    for a in dec.condensation.arcs:
        assert int(a.src) > int(a.tgt)


@given(graphs(max_nodes=5, max_arcs=8, min_nodes=1))
def test_strongly_connected_iff_single_component(g):
    assert is_strongly_connected(g) == (len(scc_decompose(g).components) == 1)


def test_component_subgraph_strong_connectivity():
    g = build_graph(
        ["a", "b", "c"],
        [("e0", "a", "b"), ("e1", "b", "a"), ("e2", "b", "c")],
    )
    dec = scc_decompose(g)
    for i, comp in enumerate(dec.components):
        sub = dec.subgraph(i).as_graph()
        if len(sub.nodes) >= 2 or sub.arcs:
            assert is_strongly_connected(sub)


def test_deterministic_enumeration_sample_against_oracle():
    # every 97th graph from the exhaustive <=5 node, <=8 arc enumeration
    sample = itertools.islice(small_graphs(5, 8), 0, None, 97)
    checked = 0
    for g in itertools.islice(sample, 400):
        dec = scc_decompose(g)
        assert {frozenset(c) for c in dec.components} == scc_by_transitive_closure(g)
        checked += 1
    assert checked == 400


def test_weak_components_partition():
    g = build_graph(["a", "b", "c"], [("e", "a", "b")])
    assert weak_components(g) == (("a", "b"), ("c",))
