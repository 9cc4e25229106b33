"""Perfect matchings, odd cuts, postman sets and cycle spaces (graphs).

Edge subsets are masks over E (edge k is bit k-1); parallel edges are
distinct elements.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from ..clutter.clutter_logic import Clutter, minimize
from ..common import config
from ..common.errors import ArgumentError, ConsistencyError
from ..common.linalg import rank
from ..setsys.set_system import SetSystem
from .mixed_graph import Cut, MixedGraph, odd_cuts, require_graph


logger = logging.getLogger(__name__)


def _require_even(G: MixedGraph) -> None:
    if G.vcount % 2:
        raise ArgumentError(f"an even number of vertices is required, got {G.vcount}")


def _require_regular(G: MixedGraph, r: int) -> None:
    bad = [v for v in range(1, G.vcount + 1) if G.degree(v) != r]
    if bad:
        raise ArgumentError(f"graph is not {r}-regular: vertices {bad} have other degrees")


def perfect_matchings(G: MixedGraph) -> List[int]:
    require_graph(G)
    _require_even(G)
    config.require_cap('vertex count', G.vcount, config.settings().rgraph_max_vertices)
    incident: List[List[int]] = [[] for _ in range(G.vcount + 1)]
    for k, (u, v) in enumerate(G.edges):
        incident[u].append(k)
        incident[v].append(k)

    found: List[int] = []

    def extend(matched: int, chosen: int) -> None:
        free = next((v for v in range(1, G.vcount + 1) if not matched >> v & 1), None)
        if free is None:
            found.append(chosen)
            return
        for k in incident[free]:
            u, v = G.edges[k]
            other = v if u == free else u
            if not matched >> other & 1:
                extend(matched | 1 << free | 1 << other, chosen | 1 << k)

    extend(0, 0)
    return sorted(found)


@dataclass(frozen=True)
class RGraphSuite:
    r: int
    is_r_graph: bool
    min_odd_cuts: Tuple[Cut, ...]
    matchings: Clutter
    core_matchings: Clutter
    rank: int
    vcount: int

    @property
    def rank_bound(self) -> Fraction:
        """(3/2)|V| - 1"""
        return Fraction(3, 2) * self.vcount - 1


def rgraph_suite(G: MixedGraph, r: int) -> RGraphSuite:
    """Odd cuts, perfect matchings and the core matchings of an r-regular graph."""
    require_graph(G)
    _require_even(G)
    config.require_cap('vertex count', G.vcount, config.settings().rgraph_max_vertices)
    _require_regular(G, r)
    cuts = odd_cuts(G)
    smallest = min(len(c.edges) for c in cuts)
    is_r_graph = smallest >= r
    if not is_r_graph:
        logger.warning("odd cut of size %d below r=%d", smallest, r)
    minimum = tuple(c for c in cuts if len(c.edges) == smallest)
    m = len(G.edges)
    pms = perfect_matchings(G)
    core = [p for p in pms if all(bin(p & c.edge_mask).count('1') == 1 for c in minimum)]
    rk = rank([[c.edge_mask >> k & 1 for k in range(m)] for c in minimum])
    logger.debug("%d perfect matchings, %d in the core, rank %d", len(pms), len(core), rk)
    return RGraphSuite(r, is_r_graph, minimum, Clutter(m, pms), Clutter(m, core), rk, G.vcount)


def _parity_table(G: MixedGraph) -> List[int]:
    """Vertex-parity mask of every edge subset (vertex v is bit v-1)."""
    m = len(G.edges)
    config.require_cap('edge count', m, config.settings().graph_max_edges)
    single = [(1 << (u - 1)) ^ (1 << (v - 1)) for u, v in G.edges]
    table = [0] * (1 << m)
    for mask in range(1, 1 << m):
        low = (mask & -mask).bit_length() - 1
        table[mask] = table[mask & (mask - 1)] ^ single[low]
    return table


def postman_clutter(G: MixedGraph) -> Clutter:
    """Minimal edge sets in which every vertex has odd degree."""
    require_graph(G)
    _require_even(G)
    config.require_cap('vertex count', G.vcount, config.settings().postman_max_vertices)
    odd = (1 << G.vcount) - 1
    table = _parity_table(G)
    return Clutter(len(G.edges), minimize(J for J, par in enumerate(table) if par == odd))


def odd_cut_clutter(G: MixedGraph) -> Clutter:
    _require_even(G)
    return Clutter(len(G.edges), minimize(c.edge_mask for c in odd_cuts(G)))


def cycle_space(G: MixedGraph) -> SetSystem:
    """Edge sets with every degree even."""
    require_graph(G)
    m = len(G.edges)
    if m == 0:
        raise ArgumentError("the graph has no edges")
    table = _parity_table(G)
    S = SetSystem(m, (J for J, par in enumerate(table) if par == 0))
    expected = 1 << (m - G.vcount + G.component_count())
    if len(S) != expected:
        raise ConsistencyError(f"cycle space has {len(S)} members, expected {expected}")
    return S
