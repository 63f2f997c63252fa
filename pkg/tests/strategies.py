"""Hypothesis strategies for graphs, chains, and morphisms."""

from __future__ import annotations

import hypothesis.strategies as st

from hog.core import GraphMorphism, build_graph


@st.composite
def graphs(draw, max_nodes: int = 5, max_arcs: int = 8, min_nodes: int = 1):
    n = draw(st.integers(min_nodes, max_nodes))
    nodes = [f"x{i}" for i in range(n)]
    m = draw(st.integers(0, max_arcs))
    arcs = []
    for k in range(m):
        s = draw(st.integers(0, n - 1))
        t = draw(st.integers(0, n - 1))
        arcs.append((f"a{k}", nodes[s], nodes[t]))
    return build_graph(nodes, arcs)


@st.composite
def arc_chains(draw, max_nodes: int = 4, max_arcs: int = 6, max_coeff: int = 4):
    from hog.homology import ArcChain

    g = draw(graphs(max_nodes=max_nodes, max_arcs=max_arcs))
    coeffs = {
        a.id: draw(st.integers(-max_coeff, max_coeff)) for a in g.arcs
    }
    return ArcChain(g, coeffs)


@st.composite
def quotient_morphisms(draw, max_nodes: int = 4, max_arcs: int = 6):
    """A valid morphism built as a node-collapse followed by an arc pushforward,
    with optional extra structure added to the codomain."""
    g = draw(graphs(max_nodes=max_nodes, max_arcs=max_arcs))
    targets = draw(
        st.lists(
            st.integers(0, len(g.nodes) - 1),
            min_size=len(g.nodes),
            max_size=len(g.nodes),
        )
    )
    node_map = {n: f"y{t}" for n, t in zip(g.nodes, targets)}
    cod_nodes = []
    for name in node_map.values():
        if name not in cod_nodes:
            cod_nodes.append(name)
    cod_arcs = [(f"b{i}", node_map[a.src], node_map[a.tgt]) for i, a in enumerate(g.arcs)]
    extra = draw(st.integers(0, 2))
    for j in range(extra):
        s = draw(st.integers(0, len(cod_nodes) - 1))
        t = draw(st.integers(0, len(cod_nodes) - 1))
        cod_arcs.append((f"extra{j}", cod_nodes[s], cod_nodes[t]))
    codomain = build_graph(cod_nodes, cod_arcs)
    arc_map = {a.id: f"b{i}" for i, a in enumerate(g.arcs)}
    return GraphMorphism(g, codomain, node_map, arc_map)
