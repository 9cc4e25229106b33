"""Mixed graphs with indexed arcs and edges, and their cuts (graphs).

Vertices are 1-based. Arc and edge labels are their 1-based positions in
file order, which is also the coordinate they get in set-systems over E.
"""

import logging
from dataclasses import dataclass
from typing import FrozenSet, Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from ..common import config
from ..common.errors import ArgumentError, IndexSetError


logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


@dataclass(frozen=True)
class MixedGraph:
    vcount: int
    arcs: Tuple[Pair, ...] = ()
    edges: Tuple[Pair, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'arcs', tuple(tuple(a) for a in self.arcs))
        object.__setattr__(self, 'edges', tuple(tuple(e) for e in self.edges))
        if self.vcount < 1:
            raise ArgumentError(f"a graph needs at least one vertex, got {self.vcount}")
        for kind, pairs in (('arc', self.arcs), ('edge', self.edges)):
            for u, v in pairs:
                if not (1 <= u <= self.vcount and 1 <= v <= self.vcount):
                    raise IndexSetError(f"{kind} ({u}, {v}) has an endpoint outside [1, {self.vcount}]")
                if u == v:
                    raise ArgumentError(f"{kind} ({u}, {v}) is a loop")

    @property
    def is_digraph(self) -> bool:
        return not self.edges

    @property
    def is_graph(self) -> bool:
        return not self.arcs

    def degree(self, v: int) -> int:
        return sum((a == v) + (b == v) for a, b in self.edges)

    def multigraph(self) -> nx.MultiGraph:
        """Underlying undirected multigraph of arcs and edges."""
        G = nx.MultiGraph()
        G.add_nodes_from(range(1, self.vcount + 1))
        G.add_edges_from(self.arcs)
        G.add_edges_from(self.edges)
        return G

    def is_connected(self) -> bool:
        return nx.is_connected(self.multigraph())

    def component_count(self) -> int:
        return nx.number_connected_components(self.multigraph())


def graph(vcount: int, edges: Sequence[Pair]) -> MixedGraph:
    return MixedGraph(vcount, (), tuple(edges))


def digraph(vcount: int, arcs: Sequence[Pair]) -> MixedGraph:
    return MixedGraph(vcount, tuple(arcs), ())


def require_graph(G: MixedGraph) -> None:
    if not G.is_graph:
        raise ArgumentError("an undirected graph (no arcs) is required")


def require_digraph(G: MixedGraph) -> None:
    if not G.is_digraph:
        raise ArgumentError("a digraph (no undirected edges) is required")


@dataclass(frozen=True)
class Cut:
    """delta(U) with 1-based edge and arc labels; arcs are those leaving U."""

    U: FrozenSet[int]
    edges: Tuple[int, ...]
    arcs: Tuple[int, ...]

    @property
    def edge_mask(self) -> int:
        mask = 0
        for e in self.edges:
            mask |= 1 << (e - 1)
        return mask


def vertex_subsets(G: MixedGraph, require_first: bool = False) -> Iterator[int]:
    """Nonempty proper vertex subsets as masks (vertex v is bit v-1)."""
    config.require_cap('vertex count', G.vcount, config.settings().graph_max_vertices)
    full = (1 << G.vcount) - 1
    for U in range(1, full):
        if require_first and not U & 1:
            continue
        yield U


def _in(U: int, v: int) -> bool:
    return bool(U >> (v - 1) & 1)


def cut_of(G: MixedGraph, U: int) -> Cut:
    edges = tuple(k + 1 for k, (a, b) in enumerate(G.edges) if _in(U, a) != _in(U, b))
    arcs = tuple(k + 1 for k, (a, b) in enumerate(G.arcs) if _in(U, a) and not _in(U, b))
    members = frozenset(v for v in range(1, G.vcount + 1) if _in(U, v))
    return Cut(members, edges, arcs)


def arcs_entering(G: MixedGraph, U: int) -> List[int]:
    return [k + 1 for k, (a, b) in enumerate(G.arcs) if not _in(U, a) and _in(U, b)]


def pseudo_dicuts(G: MixedGraph) -> List[Cut]:
    """All delta(U) with no arc entering U."""
    cuts = [cut_of(G, U) for U in vertex_subsets(G) if not arcs_entering(G, U)]
    logger.debug("%d pseudo dicuts on %d vertices", len(cuts), G.vcount)
    return cuts


def odd_cuts(G: MixedGraph) -> List[Cut]:
    """delta(U) for odd |U|, one side per cut (the side containing vertex 1)."""
    require_graph(G)
    return [cut_of(G, U) for U in vertex_subsets(G, require_first=True) if bin(U).count('1') % 2]


def edge_connectivity(G: MixedGraph) -> Optional[int]:
    """Fewest edges (arcs counted as edges) in a cut; None for one vertex."""
    if G.vcount == 1:
        return None
    best = None
    for U in vertex_subsets(G, require_first=True):
        size = sum(1 for a, b in G.edges + G.arcs if _in(U, a) != _in(U, b))
        if best is None or size < best:
            best = size
    return best


def ear_count(G: MixedGraph) -> int:
    require_graph(G)
    if not G.is_connected():
        raise ArgumentError("ear count needs a connected graph")
    return len(G.edges) - G.vcount + 1
