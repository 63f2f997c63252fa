"""Integer chain complex of a directed multigraph.

One-chains are stored by their arc images: an integer coefficient per arc.
The boundary of an arc is target minus source; its kernel is the cycle space
(first homology), which is free, so a rank and a basis describe it fully.
Positive chains with zero boundary decompose constructively into closed walks,
which yields both a boundary-based Euler criterion and, combined with a
min-cost flow over the degree imbalances, the minimal covering closed walk
(the directed postman tour).
"""

from __future__ import annotations

import heapq
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .core import ClosedWalk, DirectedGraph
from .errors import (
    CapExceededError,
    NegativeCoefficientError,
    NoArcsError,
    NonzeroBoundaryError,
    NotConnectedError,
    NotStronglyConnectedError,
)
from .euler import EulerReport
from .scc import is_connected, is_strongly_connected


@dataclass(frozen=True)
class ArcChain:
    """Finitely supported integer vector over the arcs (zero entries dropped)."""

    graph: DirectedGraph
    coefficients: dict[str, int]

    def __post_init__(self) -> None:
        clean = {}
        for aid, c in self.coefficients.items():
            self.graph.arc(aid)
            if c:
                clean[aid] = int(c)
        object.__setattr__(self, "coefficients", clean)

    @property
    def is_positive(self) -> bool:
        return all(c >= 0 for c in self.coefficients.values())

    @property
    def length(self) -> int:
        return sum(abs(c) for c in self.coefficients.values())

    def add(self, other: "ArcChain") -> "ArcChain":
        if other.graph != self.graph:
            raise ValueError("chains live on different graphs")
        merged = Counter(self.coefficients)
        merged.update(other.coefficients)
        return ArcChain(self.graph, dict(merged))


@dataclass(frozen=True)
class NodeChain:
    graph: DirectedGraph
    coefficients: dict[str, int]

    def __post_init__(self) -> None:
        clean = {}
        for nid, c in self.coefficients.items():
            if not self.graph.has_node(nid):
                raise ValueError(f"unknown node {nid!r}")
            if c:
                clean[nid] = int(c)
        object.__setattr__(self, "coefficients", clean)


@dataclass(frozen=True, eq=False)
class HomologySummary:
    h0_rank: int
    h1_rank: int
    h1_basis: tuple[ArcChain, ...]
    component_count: int


@dataclass(frozen=True, eq=False)
class CycleDecomposition:
    cycles: tuple[ClosedWalk, ...]
    multiplicities: tuple[int, ...]

    def arc_multiset(self) -> Counter:
        total: Counter = Counter()
        for walk, mult in zip(self.cycles, self.multiplicities):
            for aid in walk.arcs:
                total[aid] += mult
        return total


def boundary_1(u: ArcChain) -> NodeChain:
    """Linear extension of arc -> target - source (self-loops vanish)."""
    out: Counter = Counter()
    for aid, c in u.coefficients.items():
        a = u.graph.arc(aid)
        out[a.tgt] += c
        out[a.src] -= c
    return NodeChain(u.graph, dict(out))


def boundary_0(v: NodeChain) -> int:
    """Sum of coefficients; zero on every boundary of a 1-chain."""
    return sum(v.coefficients.values())


def fundamental_chain(g: DirectedGraph) -> ArcChain:
    """Coefficient 1 on every arc."""
    return ArcChain(g, {a.id: 1 for a in g.arcs})


def length(u: ArcChain) -> int:
    """Sum of absolute coefficients: the length of a walk realizing the chain."""
    return u.length


def _rational_rank(rows: list[list[int]]) -> int:
    """Rank of an integer matrix by exact elimination over the rationals."""
    m = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    for col in range(cols):
        pivot = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [x * inv for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col]:
                factor = m[r][col]
                m[r] = [x - factor * y for x, y in zip(m[r], m[rank])]
        rank += 1
        if rank == len(m):
            break
    return rank


def incidence_matrix(g: DirectedGraph) -> list[list[int]]:
    """Node-by-arc matrix with +1 at targets and -1 at sources."""
    idx = g.node_index
    rows = [[0] * len(g.arcs) for _ in g.nodes]
    for col, a in enumerate(g.arcs):
        rows[idx[a.tgt]][col] += 1
        rows[idx[a.src]][col] -= 1
    return rows


def homology_summary(g: DirectedGraph) -> HomologySummary:
    """Ranks from the incidence matrix, basis from a spanning forest.

    The kernel of the boundary is free, so rank plus basis is a complete
    description.  The degree-zero rank is component count minus one (zero on
    the empty graph).
    """
    if not g.nodes:
        return HomologySummary(0, 0, (), 0)
    rank = _rational_rank(incidence_matrix(g))
    components = len(g.nodes) - rank
    h1_rank = len(g.arcs) - rank
    basis = _forest_cycle_basis(g)
    if len(basis) != h1_rank:
        raise AssertionError("cycle basis size disagrees with kernel rank")
    return HomologySummary(components - 1, h1_rank, basis, components)


def _forest_cycle_basis(g: DirectedGraph) -> tuple[ArcChain, ...]:
    """One kernel chain per non-forest arc: the arc plus its tree path back.

    The forest ignores orientation; tree arcs enter with +1 when traversed
    source-to-target and -1 otherwise, so every basis chain has zero boundary.
    """
    parent: dict[str, str] = {n: n for n in g.nodes}

    def find(n: str) -> str:
        while parent[n] != n:
            parent[n] = parent[parent[n]]
            n = parent[n]
        return n

    tree: dict[str, list[tuple[str, str, int]]] = {n: [] for n in g.nodes}
    chords = []
    for a in g.arcs:
        rs, rt = find(a.src), find(a.tgt)
        if rs == rt:
            chords.append(a)
        else:
            parent[max(rs, rt)] = min(rs, rt)
            tree[a.src].append((a.tgt, a.id, +1))
            tree[a.tgt].append((a.src, a.id, -1))

    def tree_path(frm: str, to: str) -> list[tuple[str, int]]:
        """Signed tree arcs from frm to to (+1 means traversed src->tgt)."""
        if frm == to:
            return []
        prev: dict[str, tuple[str, str, int]] = {}
        queue = [frm]
        seen = {frm}
        while queue:
            nxt = []
            for v in queue:
                for w, aid, sign in tree[v]:
                    if w not in seen:
                        seen.add(w)
                        prev[w] = (v, aid, sign)
                        if w == to:
                            queue = []
                            nxt = []
                            break
                        nxt.append(w)
                else:
                    continue
                break
            else:
                queue = nxt
                continue
            break
        path = []
        v = to
        while v != frm:
            u, aid, sign = prev[v]
            path.append((aid, sign))
            v = u
        path.reverse()
        return path

    basis = []
    for a in chords:
        coeffs: Counter = Counter({a.id: 1})
        for aid, sign in tree_path(a.tgt, a.src):
            coeffs[aid] += sign
        basis.append(ArcChain(g, dict(coeffs)))
    return tuple(basis)


def decompose_positive_chain(u: ArcChain) -> CycleDecomposition:
    """Write a positive boundaryless chain as a sum of closed walks.

    Repeatedly starts at the first arc with positive residual and extends
    forward; flow conservation guarantees an unused outgoing arc at every
    node except back at the start, so each extraction closes.  The summed
    arc multiset of the result equals the input coefficients exactly.
    """
    if not u.is_positive:
        raise NegativeCoefficientError("chain has a negative coefficient")
    if boundary_1(u).coefficients:
        raise NonzeroBoundaryError("chain has nonzero boundary")
    g = u.graph
    residual = dict(u.coefficients)
    arc_order = [a.id for a in g.arcs]
    out_ids = {v: [a.id for a in g.out_arcs(v)] for v in g.nodes}
    cycles: list[ClosedWalk] = []
    mults: list[int] = []
    scan = 0
    while residual:
        while scan < len(arc_order) and residual.get(arc_order[scan], 0) <= 0:
            scan += 1
        start_arc = arc_order[scan]
        start = g.arc(start_arc).src
        walk = []
        v = start
        aid: str | None = start_arc
        while aid is not None:
            walk.append(aid)
            residual[aid] -= 1
            if not residual[aid]:
                del residual[aid]
            v = g.arc(aid).tgt
            aid = next((b for b in out_ids[v] if residual.get(b, 0) > 0), None)
        if v != start:
            raise AssertionError("extraction stuck away from its start")
        counts = Counter(walk)
        extra = min(residual.get(b, 0) // k for b, k in counts.items())
        if extra:
            for b, k in counts.items():
                residual[b] -= extra * k
                if not residual[b]:
                    del residual[b]
        cycles.append(ClosedWalk(g, tuple(walk)))
        mults.append(1 + extra)
    return CycleDecomposition(tuple(cycles), tuple(mults))


def _splice_all(walks: list[ClosedWalk], g: DirectedGraph) -> ClosedWalk:
    """Merge closed walks sharing nodes into one; smallest shared id first."""
    current = walks[0]
    rest = list(walks[1:])
    while rest:
        best: tuple[str, int] | None = None
        current_nodes = set(current.visits)
        for i, w in enumerate(rest):
            shared = current_nodes & set(w.visits)
            if shared:
                node = min(shared)
                if best is None or node < best[0]:
                    best = (node, i)
        if best is None:
            raise AssertionError("walks do not connect; graph not connected?")
        node, i = best
        w = rest.pop(i)
        rebased = w.rotate_to(node)
        pos = current.visits.index(node)
        current = ClosedWalk(
            g, current.arcs[:pos] + rebased.arcs + current.arcs[pos:],
            base=current.base if current.arcs else node,
        )
    return current


def euler_via_homology(g: DirectedGraph) -> EulerReport:
    """Euler criterion through boundaries: the fundamental chain is a cycle.

    When the boundary of the all-ones chain vanishes, decomposing it gives
    arc-disjoint closed walks covering every arc, and connectivity lets them
    splice into a single Eulerian cycle.  Independent of the degree-balance
    route in euler_check; the two must agree.
    """
    if not g.arcs:
        raise NoArcsError("graph has no arcs")
    if not is_connected(g):
        raise NotConnectedError("graph is not connected")
    chain = fundamental_chain(g)
    b = boundary_1(chain).coefficients
    if b:
        violations = tuple(
            (v, len(g.in_arcs(v)), len(g.out_arcs(v))) for v in g.nodes if v in b
        )
        return EulerReport(False, True, violations)
    dec = decompose_positive_chain(chain)
    walks = list(dec.cycles)
    cycle = _splice_all(walks, g)
    return EulerReport(True, True, (), cycle)


def _min_cost_duplicates(g: DirectedGraph) -> dict[str, int]:
    """Cheapest nonnegative arc multiset balancing every node's degree.

    Successive shortest paths with node potentials: surplus-in nodes supply
    extra traversals, surplus-out nodes absorb them, every arc costs one step.
    A virtual source and sink (potentials 0 and pot_t) keep all reduced costs
    nonnegative, so plain Dijkstra stays exact.  Feasible whenever the graph
    is strongly connected.
    """
    idx = g.node_index
    n = len(g.nodes)
    arcs = g.arcs
    flow = [0] * len(arcs)
    supply = [0] * n
    for a in arcs:
        supply[idx[a.tgt]] += 1
        supply[idx[a.src]] -= 1
    out_pos: list[list[int]] = [[] for _ in range(n)]
    in_pos: list[list[int]] = [[] for _ in range(n)]
    for pos, a in enumerate(arcs):
        out_pos[idx[a.src]].append(pos)
        in_pos[idx[a.tgt]].append(pos)
    pot = [0] * n
    pot_t = 0
    remaining = sum(s for s in supply if s > 0)
    while remaining:
        dist: list[int | None] = [None] * n
        prev: list[tuple[int, int, bool] | None] = [None] * n
        heap = []
        for v in range(n):
            if supply[v] > 0:
                dist[v] = -pot[v]
                heapq.heappush(heap, (-pot[v], v))
        while heap:
            d, v = heapq.heappop(heap)
            if dist[v] != d:
                continue
            for pos in out_pos[v]:
                w = idx[arcs[pos].tgt]
                nd = d + 1 + pot[v] - pot[w]
                if dist[w] is None or nd < dist[w]:
                    dist[w] = nd
                    prev[w] = (v, pos, True)
                    heapq.heappush(heap, (nd, w))
            for pos in in_pos[v]:
                if flow[pos] > 0:
                    w = idx[arcs[pos].src]
                    nd = d - 1 + pot[v] - pot[w]
                    if dist[w] is None or nd < dist[w]:
                        dist[w] = nd
                        prev[w] = (v, pos, False)
                        heapq.heappush(heap, (nd, w))
        sink = min(
            (v for v in range(n) if supply[v] < 0 and dist[v] is not None),
            key=lambda v: (dist[v] + pot[v] - pot_t, v),
        )
        path = []
        v = sink
        while prev[v] is not None:
            u, pos, forward = prev[v]
            path.append((pos, forward))
            v = u
        source = v
        amount = min(supply[source], -supply[sink])
        for pos, forward in path:
            if not forward:
                amount = min(amount, flow[pos])
        for pos, forward in path:
            flow[pos] += amount if forward else -amount
        supply[source] -= amount
        supply[sink] += amount
        remaining -= amount
        d_t = dist[sink] + pot[sink] - pot_t
        for v in range(n):
            if dist[v] is not None:
                pot[v] += dist[v]
        pot_t += d_t
    return {arcs[pos].id: f for pos, f in enumerate(flow) if f}


def minimal_covering_walk(g: DirectedGraph) -> tuple[ClosedWalk, int]:
    """Shortest closed walk covering every arc (directed postman tour).

    Minimizes the length of the all-ones chain plus a nonnegative balancing
    chain found by min-cost flow, then realizes it by cycle decomposition and
    splicing.  On an Eulerian input the length equals the arc count.
    """
    if not g.arcs:
        raise NoArcsError("graph has no arcs")
    if not is_strongly_connected(g):
        raise NotStronglyConnectedError("postman tour needs a strongly connected graph")
    extra = _min_cost_duplicates(g)
    total = Counter({a.id: 1 for a in g.arcs})
    total.update(extra)
    chain = ArcChain(g, dict(total))
    dec = decompose_positive_chain(chain)
    expanded: list[ClosedWalk] = []
    for walk, mult in zip(dec.cycles, dec.multiplicities):
        expanded.extend([walk] * mult)
    tour = _splice_all(expanded, g)
    return tour, tour.length


def positive_kernel_vectors(
    g: DirectedGraph, max_coeff: int, cap: int = 10**6
) -> tuple[ArcChain, ...]:
    """All nonzero boundaryless chains with coefficients in 0..max_coeff.

    Brute-force enumeration over the coefficient grid; raises CapExceededError
    when the grid is larger than *cap*.
    """
    arcs = [a.id for a in g.arcs]
    grid = (max_coeff + 1) ** len(arcs)
    if grid > cap:
        raise CapExceededError(f"{grid} coefficient vectors exceed the cap of {cap}")
    found = []
    for combo in product(range(max_coeff + 1), repeat=len(arcs)):
        if not any(combo):
            continue
        chain = ArcChain(g, dict(zip(arcs, combo)))
        if not boundary_1(chain).coefficients:
            found.append(chain)
    return tuple(found)
