"""Strongly connected components, condensation, connectivity predicates.

Two nodes share a component iff they are equal or lie on a common closed
walk, so a singleton without a self-loop is a (trivial) component of its own.
Components are listed in reverse topological order of the condensation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache

from .core import Arc, DirectedGraph, induced_subgraph
from .errors import EmptyGraphError


@dataclass(frozen=True, eq=False)
class ComponentSubgraph:
    """One strongly connected component viewed as an induced subgraph."""

    parent: DirectedGraph
    index: int
    nodes: frozenset[str]
    arcs: tuple[Arc, ...]

    def as_graph(self) -> DirectedGraph:
        return induced_subgraph(self.parent, self.nodes)


@dataclass(frozen=True, eq=False)
class SccDecomposition:
    graph: DirectedGraph
    components: tuple[tuple[str, ...], ...]
    component_of: dict[str, int]
    condensation: DirectedGraph

    @cached_property
    def component_arcs(self) -> tuple[tuple[Arc, ...], ...]:
        """Arcs lying inside each component, in graph order."""
        buckets: list[list[Arc]] = [[] for _ in self.components]
        comp = self.component_of
        for a in self.graph.arcs:
            ci = comp[a.src]
            if ci == comp[a.tgt]:
                buckets[ci].append(a)
        return tuple(tuple(b) for b in buckets)

    def subgraph(self, index: int) -> ComponentSubgraph:
        return ComponentSubgraph(
            self.graph,
            index,
            frozenset(self.components[index]),
            self.component_arcs[index],
        )


@lru_cache(maxsize=8192)
def scc_decompose(g: DirectedGraph) -> SccDecomposition:
    """Single-pass Tarjan decomposition (iterative, insertion-order determinism).

    Graphs are immutable values, so results are memoized; treat the returned
    decomposition as read-only.
    """
    idx_of = g.node_index
    n = len(g.nodes)
    succ: list[list[int]] = [[] for _ in range(n)]
    for a in g.arcs:
        s, t = idx_of[a.src], idx_of[a.tgt]
        if t not in succ[s]:
            succ[s].append(t)

    index = [-1] * n
    lowlink = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    comp_of = [-1] * n
    components: list[list[int]] = []
    counter = 0

    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, pi = work.pop()
            if pi == 0:
                index[v] = lowlink[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            recurse = False
            for j in range(pi, len(succ[v])):
                w = succ[v][j]
                if index[w] == -1:
                    work.append((v, j + 1))
                    work.append((w, 0))
                    recurse = True
                    break
                if on_stack[w]:
                    lowlink[v] = min(lowlink[v], index[w])
            if recurse:
                continue
            if lowlink[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp_of[w] = len(components)
                    comp.append(w)
                    if w == v:
                        break
                components.append(comp)
            if work:
                parent = work[-1][0]
                lowlink[parent] = min(lowlink[parent], lowlink[v])

    ordered = tuple(tuple(g.nodes[i] for i in sorted(comp)) for comp in components)
    component_of = {g.nodes[i]: comp_of[i] for i in range(n)}

    seen_pairs: set[tuple[int, int]] = set()
    cond_arcs: list[Arc] = []
    for a in g.arcs:
        ci, cj = component_of[a.src], component_of[a.tgt]
        if ci != cj and (ci, cj) not in seen_pairs:
            seen_pairs.add((ci, cj))
            cond_arcs.append(Arc(f"e{len(cond_arcs)}", str(ci), str(cj)))
    condensation = DirectedGraph(
        tuple(str(i) for i in range(len(components))), tuple(cond_arcs)
    )
    return SccDecomposition(g, ordered, component_of, condensation)


def is_strongly_connected(g: DirectedGraph) -> bool:
    """True iff the graph has exactly one strongly connected component."""
    if not g.nodes:
        raise EmptyGraphError("strong connectivity is undefined on the empty graph")
    return len(scc_decompose(g).components) == 1


def weak_components(g: DirectedGraph) -> tuple[tuple[str, ...], ...]:
    """Partition of the nodes ignoring arc direction."""
    idx_of = g.node_index
    parent = list(range(len(g.nodes)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for a in g.arcs:
        ri, rj = find(idx_of[a.src]), find(idx_of[a.tgt])
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)
    buckets: dict[int, list[str]] = {}
    for i, node in enumerate(g.nodes):
        buckets.setdefault(find(i), []).append(node)
    return tuple(tuple(buckets[r]) for r in sorted(buckets))


def is_connected(g: DirectedGraph) -> bool:
    """True iff the underlying undirected graph is connected."""
    if not g.nodes:
        raise EmptyGraphError("connectivity is undefined on the empty graph")
    return len(weak_components(g)) == 1


def is_acyclic(g: DirectedGraph) -> bool:
    """True iff there is no closed walk of positive length."""
    comp = scc_decompose(g).component_of
    return not any(comp[a.src] == comp[a.tgt] for a in g.arcs)
