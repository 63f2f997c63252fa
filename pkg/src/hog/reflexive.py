"""Reflexive graphs: every node carries a distinguished degenerate self-loop.

Degenerate loops are materialized as ordinary arcs plus a marker map, so
forgetting the marker is the identity on data and walk counting over the full
arc set stays honest.  A closed walk is degenerate when any step uses a
marked loop; nondegenerate walks are exactly the walks of the graph with the
marked loops stripped.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from . import homotopy
from .core import Arc, ClosedWalk, DirectedGraph, GraphMorphism
from .errors import InvalidMorphismError, ValidationError
from .homotopy import HomSet, WeakEquivalenceVerdict
from .scc import scc_decompose


@dataclass(frozen=True)
class ReflexiveGraph:
    """Directed multigraph plus one marked self-loop per node."""

    nodes: tuple[str, ...]
    arcs: tuple[Arc, ...]
    degeneracy: Mapping[str, str]

    def __post_init__(self) -> None:
        object.__setattr__(self, "degeneracy", dict(self.degeneracy))
        g = DirectedGraph(self.nodes, self.arcs)
        object.__setattr__(self, "nodes", g.nodes)
        object.__setattr__(self, "arcs", g.arcs)
        seen_loops: set[str] = set()
        for n in g.nodes:
            loop = self.degeneracy.get(n)
            if loop is None:
                raise ValidationError(f"node {n!r} has no degenerate loop")
            rec = g.arc(loop)
            if rec.src != n or rec.tgt != n:
                raise ValidationError(
                    f"degenerate arc {loop!r} of node {n!r} is not a self-loop at it"
                )
            if loop in seen_loops:
                raise ValidationError(f"arc {loop!r} marked degenerate twice")
            seen_loops.add(loop)
        extra = set(self.degeneracy) - set(g.nodes)
        if extra:
            raise ValidationError(f"degeneracy entries for unknown nodes {sorted(extra)}")

    @property
    def degenerate_arc_ids(self) -> frozenset[str]:
        return frozenset(self.degeneracy.values())


@dataclass(frozen=True)
class ReflexiveMorphism:
    """Morphism of reflexive graphs: commutes with source, target, degeneracy."""

    domain: ReflexiveGraph
    codomain: ReflexiveGraph
    node_map: Mapping[str, str]
    arc_map: Mapping[str, str]

    def __post_init__(self) -> None:
        object.__setattr__(self, "node_map", dict(self.node_map))
        object.__setattr__(self, "arc_map", dict(self.arc_map))

    def underlying(self) -> GraphMorphism:
        return GraphMorphism(
            forget_reflexive(self.domain),
            forget_reflexive(self.codomain),
            self.node_map,
            self.arc_map,
        )

    def violations(self) -> list[str]:
        out = self.underlying().violations()
        for n in self.domain.nodes:
            loop = self.domain.degeneracy[n]
            image_node = self.node_map.get(n)
            if image_node is None:
                continue
            want = self.codomain.degeneracy.get(image_node)
            if self.arc_map.get(loop) != want:
                out.append(
                    f"degenerate loop {loop!r} of {n!r} maps to "
                    f"{self.arc_map.get(loop)!r}, expected {want!r}"
                )
        return out

    def is_valid(self) -> bool:
        return not self.violations()

    def validate(self) -> None:
        bad = self.violations()
        if bad:
            raise InvalidMorphismError("; ".join(bad))


def add_degeneracies(g: DirectedGraph) -> ReflexiveGraph:
    """Freely add one marked self-loop per node (ids loop_<node>)."""
    taken = {a.id for a in g.arcs}
    degeneracy: dict[str, str] = {}
    loops: list[Arc] = []
    for n in g.nodes:
        loop_id = f"loop_{n}"
        while loop_id in taken:
            loop_id = "_" + loop_id
        taken.add(loop_id)
        degeneracy[n] = loop_id
        loops.append(Arc(loop_id, n, n))
    return ReflexiveGraph(g.nodes, g.arcs + tuple(loops), degeneracy)


def forget_reflexive(g: ReflexiveGraph) -> DirectedGraph:
    """All arcs kept; degenerate loops become ordinary self-loops."""
    return DirectedGraph(g.nodes, g.arcs)


def strip_degeneracies(g: ReflexiveGraph) -> DirectedGraph:
    """Drop exactly the marked loops."""
    marked = g.degenerate_arc_ids
    return DirectedGraph(g.nodes, tuple(a for a in g.arcs if a.id not in marked))


def is_degenerate_cycle(g: ReflexiveGraph, walk: ClosedWalk) -> bool:
    """True iff any step of the walk uses a marked loop."""
    marked = g.degenerate_arc_ids
    return any(a in marked for a in walk.arcs)


def enumerate_nondegenerate_cycles(
    g: ReflexiveGraph, n: int, cap: int | None = homotopy.DEFAULT_HOM_CAP
) -> HomSet:
    """Closed walks of length n avoiding every marked loop."""
    return homotopy.enumerate_hom_cycles(strip_degeneracies(g), n, cap)


def lift_morphism(f: GraphMorphism) -> ReflexiveMorphism:
    """Extend a graph morphism to the freely reflexive graphs on both sides."""
    dom = add_degeneracies(f.domain)
    cod = add_degeneracies(f.codomain)
    arc_map = dict(f.arc_map)
    for n in f.domain.nodes:
        arc_map[dom.degeneracy[n]] = cod.degeneracy[f.node_map[n]]
    return ReflexiveMorphism(dom, cod, dict(f.node_map), arc_map)


def is_weak_equivalence_reflexive(f: ReflexiveMorphism) -> WeakEquivalenceVerdict:
    """Component characterization applied to the underlying graphs.

    Marked loops never change reachability, so the component partition is the
    same whether they are kept or stripped; both are computed and compared as
    an internal consistency check.  Only the forward direction of the
    characterization is backed by a proof; the converse is validated
    empirically by the test suite.
    """
    f.validate()
    for rg in (f.domain, f.codomain):
        full = scc_decompose(forget_reflexive(rg))
        bare = scc_decompose(strip_degeneracies(rg))
        assert {frozenset(c) for c in full.components} == {
            frozenset(c) for c in bare.components
        }, "degeneracies changed the component partition"
    return homotopy.is_weak_equivalence(f.underlying())
