"""Random-walk transition matrix and damped power-iteration scores.

Columns are normalized (column j holds the out-probabilities of node j), so
the score vector is a right fixed vector of the damped matrix.  Dangling
nodes get uniform columns, the standard fix that keeps the matrix stochastic.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import DirectedGraph
from .errors import EmptyGraphError, NoConvergenceError
from .scc import scc_decompose


@dataclass(frozen=True, eq=False)
class MarkovMatrix:
    order: int
    entries: np.ndarray
    index: dict[str, int]
    column_stochastic: bool = True


@dataclass(frozen=True, eq=False)
class RankVector:
    scores: dict[str, float]
    iterations: int
    residual: float


@dataclass(frozen=True, eq=False)
class ConnectivityReport:
    node_count: int
    component_count: int
    largest_component_size: int
    largest_component_fraction: float
    irreducible: bool


def markov_from_graph(g: DirectedGraph) -> MarkovMatrix:
    """Column-stochastic transition matrix; parallel arcs add probability mass."""
    if not g.nodes:
        raise EmptyGraphError("cannot normalize an empty graph")
    n = len(g.nodes)
    idx = g.node_index
    counts = np.zeros((n, n), dtype=np.float64)
    for a in g.arcs:
        counts[idx[a.tgt], idx[a.src]] += 1.0
    sums = counts.sum(axis=0)
    entries = np.empty_like(counts)
    for j in range(n):
        if sums[j] == 0.0:
            entries[:, j] = 1.0 / n
        else:
            entries[:, j] = counts[:, j] / sums[j]
    return MarkovMatrix(n, entries, dict(idx))


def pagerank(
    g: DirectedGraph,
    damping: float = 0.85,
    tol: float = 1e-12,
    max_iter: int = 10000,
) -> RankVector:
    """Power iteration on the damped transition matrix until the L1 step
    shrinks below tol.  Deterministic: fixed start, fixed accumulation order.
    """
    if not 0.0 < damping < 1.0:
        raise ValueError("damping must lie strictly between 0 and 1")
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    matrix = markov_from_graph(g)
    n = matrix.order
    teleport = (1.0 - damping) / n
    rank = np.full(n, 1.0 / n)
    residual = float("inf")
    for iteration in range(1, max_iter + 1):
        nxt = damping * (matrix.entries @ rank) + teleport
        residual = float(np.abs(nxt - rank).sum())
        rank = nxt
        if residual < tol:
            scores = {node: float(rank[i]) for node, i in matrix.index.items()}
            return RankVector(scores, iteration, residual)
    raise NoConvergenceError(
        f"no convergence after {max_iter} iterations (residual {residual:.3e})"
    )


def connectivity_report(g: DirectedGraph) -> ConnectivityReport:
    """Component census: count, largest strongly connected component, fraction."""
    if not g.nodes:
        return ConnectivityReport(0, 0, 0, 0.0, False)
    decomposition = scc_decompose(g)
    sizes = [len(c) for c in decomposition.components]
    largest = max(sizes)
    return ConnectivityReport(
        node_count=len(g.nodes),
        component_count=len(sizes),
        largest_component_size=largest,
        largest_component_fraction=largest / len(g.nodes),
        irreducible=len(sizes) == 1,
    )
