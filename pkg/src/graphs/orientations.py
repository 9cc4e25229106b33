"""Strongly connected re-orientations of mixed graphs (graphs).

An orientation vector x has one bit per edge of E: bit k-1 set means edge k
is flipped against the reference orientation. The reference orientation is
itself a mask over the listed pairs, so edge k points u -> v for its listed
(u, v) exactly when bit k-1 of x ^ ref is clear.
"""

import logging
from dataclasses import dataclass
from typing import FrozenSet, List, Optional, Tuple

import networkx as nx

from ..common import config
from ..common.errors import ArgumentError, PreconditionError
from ..polytope.vertices import is_cube_ideal
from ..setsys.gsc import GscIneq
from ..setsys.set_system import SetSystem
from .mixed_graph import Cut, MixedGraph, pseudo_dicuts


logger = logging.getLogger(__name__)


def _require_edges(G: MixedGraph) -> None:
    if not G.edges:
        raise ArgumentError("the mixed graph has no undirected edges to orient")
    config.require_cap('edge count', len(G.edges), config.settings().graph_max_edges)


def checked_pseudo_dicuts(G: MixedGraph) -> List[Cut]:
    """Pseudo dicuts, after checking each carries at least two edges of E."""
    cuts = pseudo_dicuts(G)
    for cut in cuts:
        if len(cut.edges) < 2:
            raise PreconditionError(
                f"pseudo dicut U={sorted(cut.U)} contains {len(cut.edges)} edge(s) of E, at least 2 are needed")
    return cuts


def oriented(G: MixedGraph, x: int, ref: int = 0) -> nx.DiGraph:
    D = nx.DiGraph()
    D.add_nodes_from(range(1, G.vcount + 1))
    D.add_edges_from(G.arcs)
    flips = x ^ ref
    for k, (u, v) in enumerate(G.edges):
        D.add_edge(*((v, u) if flips >> k & 1 else (u, v)))
    return D


def is_strong(G: MixedGraph, x: int, ref: int = 0) -> bool:
    return nx.is_strongly_connected(oriented(G, x, ref))


def _check_ref(G: MixedGraph, ref: int) -> None:
    if ref < 0 or ref >> len(G.edges):
        raise ArgumentError(f"reference orientation {ref} has bits beyond |E| = {len(G.edges)}")


def scr(G: MixedGraph, ref: int = 0) -> SetSystem:
    """All flip vectors whose re-orientation makes G strongly connected."""
    _require_edges(G)
    _check_ref(G, ref)
    checked_pseudo_dicuts(G)
    m = len(G.edges)
    S = SetSystem(m, (x for x in range(1 << m) if is_strong(G, x, ref)))
    logger.debug("SCR over %d edges: %d strong orientations", m, len(S))
    return S


def orientation_count(G: MixedGraph) -> int:
    return len(scr(G))


def scr_inequalities(G: MixedGraph, ref: int = 0) -> List[GscIneq]:
    """One GSC inequality per pseudo dicut: some edge of the cut must enter U.

    Edges leaving U under the reference orientation enter it once flipped,
    so they are the I side; edges already entering U are the J side.
    """
    _require_edges(G)
    _check_ref(G, ref)
    rows = set()
    for cut in checked_pseudo_dicuts(G):
        I, J = set(), set()
        for e in cut.edges:
            u, v = G.edges[e - 1]
            if ref >> (e - 1) & 1:
                u, v = v, u
            (I if u in cut.U else J).add(e)
        rows.add(GscIneq(frozenset(I), frozenset(J)))
    return sorted(rows, key=GscIneq.sort_key)


def scr_cross_validate(G: MixedGraph, ref: int = 0) -> bool:
    """Strong connectivity and the cut inequalities agree on every flip vector."""
    rows = scr_inequalities(G, ref)
    S = scr(G, ref)
    for x in range(1 << len(G.edges)):
        feasible = not any(g.violated_by(x) for g in rows)
        if feasible != (x in S):
            logger.warning("orientation %s: strong=%s but inequalities say %s", bin(x), x in S, feasible)
            return False
    return True


def scr_is_cube_ideal(G: MixedGraph, ref: int = 0) -> bool:
    return is_cube_ideal(scr(G, ref)).verdict


@dataclass(frozen=True)
class PseudoDicutGraph:
    """The graph on E joining e, f when some pseudo dicut meets E in exactly {e, f}."""

    graph: nx.Graph
    components: Tuple[FrozenSet[int], ...]
    kappa: Optional[int]

    @property
    def d(self) -> int:
        return len(self.components)


def two_pseudo_dicut_graph(G: MixedGraph) -> PseudoDicutGraph:
    _require_edges(G)
    cuts = checked_pseudo_dicuts(G)
    H = nx.Graph()
    H.add_nodes_from(range(1, len(G.edges) + 1))
    for cut in cuts:
        if len(cut.edges) == 2:
            H.add_edge(*cut.edges)
    comps = tuple(sorted((frozenset(c) for c in nx.connected_components(H)), key=min))
    label = {e: i for i, comp in enumerate(comps) for e in comp}
    kappa: Optional[int] = None
    for cut in cuts:
        tags = [label[e] for e in cut.edges]
        if len(set(tags)) == len(tags) and (kappa is None or len(tags) < kappa):
            kappa = len(tags)
    logger.debug("2-pseudo-dicut graph: %d components, kappa=%s", len(comps), kappa)
    return PseudoDicutGraph(H, comps, kappa)
