"""Built-in graph families (graphs).

Everything is relabelled to vertices 1..k with edges listed in sorted order,
so edge indices are stable across runs.
"""

import logging
from typing import List

import networkx as nx

from ..common.errors import ArgumentError
from .mixed_graph import MixedGraph, Pair, digraph, graph


logger = logging.getLogger(__name__)


def from_networkx(H: nx.Graph) -> MixedGraph:
    order = {v: i + 1 for i, v in enumerate(sorted(H.nodes()))}
    edges = sorted(tuple(sorted((order[u], order[v]))) for u, v in H.edges())
    return graph(len(order), edges)


def complete(k: int) -> MixedGraph:
    if k < 2:
        raise ArgumentError(f"complete graph needs at least 2 vertices, got {k}")
    return from_networkx(nx.complete_graph(k))


def cycle(k: int) -> MixedGraph:
    if k < 3:
        raise ArgumentError(f"cycle needs at least 3 vertices, got {k}")
    return from_networkx(nx.cycle_graph(k))


def path(k: int) -> MixedGraph:
    if k < 2:
        raise ArgumentError(f"path needs at least 2 vertices, got {k}")
    return from_networkx(nx.path_graph(k))


def petersen() -> MixedGraph:
    return from_networkx(nx.petersen_graph())


def complete_bipartite(a: int, b: int) -> MixedGraph:
    if a < 1 or b < 1:
        raise ArgumentError(f"both sides must be nonempty, got {a} and {b}")
    return from_networkx(nx.complete_bipartite_graph(a, b))


def hypercube(d: int) -> MixedGraph:
    if d < 1:
        raise ArgumentError(f"hypercube dimension must be positive, got {d}")
    return from_networkx(nx.hypercube_graph(d))


def bipartite_digraph(a: int, b: int) -> MixedGraph:
    """Sources 1..a, sinks a+1..a+b, every source joined to every sink."""
    if a < 1 or b < 1:
        raise ArgumentError(f"both sides must be nonempty, got {a} and {b}")
    arcs = [(s, a + t) for s in range(1, a + 1) for t in range(1, b + 1)]
    return digraph(a + b, arcs)


def staircase(k: int) -> MixedGraph:
    """The k-vertex staircase: K4 grown by repeated triangle expansion.

    Each step replaces the current tail vertex t (incident to a, b, c in edge
    order) by a triangle t, y, z: t keeps its edge to a, b is re-attached to
    y and c to z, and z becomes the new tail.
    """
    if k < 4 or k % 2:
        raise ArgumentError(f"staircase size must be even and at least 4, got {k}")
    edges: List[Pair] = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
    tail, vcount = 4, 4
    while vcount < k:
        incident = [i for i, e in enumerate(edges) if tail in e]
        _, ib, ic = incident
        b = edges[ib][0] if edges[ib][1] == tail else edges[ib][1]
        c = edges[ic][0] if edges[ic][1] == tail else edges[ic][1]
        y, z = vcount + 1, vcount + 2
        edges[ib] = (b, y)
        edges[ic] = (c, z)
        edges.extend([(tail, y), (y, z), (tail, z)])
        tail, vcount = z, vcount + 2
    logger.debug("staircase on %d vertices with %d edges", vcount, len(edges))
    return graph(vcount, edges)
