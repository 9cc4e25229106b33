"""Dicuts and tight dijoins of source-sink digraphs (graphs)."""

import logging
from dataclasses import dataclass
from typing import Tuple

from ..clutter.clutter_logic import Clutter, blocker, minimize
from ..common import config
from ..common.errors import ArgumentError
from ..common.linalg import rank
from .mixed_graph import MixedGraph, pseudo_dicuts, require_digraph


logger = logging.getLogger(__name__)


def _popcount(mask: int) -> int:
    return bin(mask).count('1')


def require_bipartite_digraph(D: MixedGraph) -> None:
    """Every vertex must be a source or a sink."""
    require_digraph(D)
    tails = {u for u, _ in D.arcs}
    heads = {v for _, v in D.arcs}
    both = sorted(tails & heads)
    if both:
        raise ArgumentError(f"vertices {both} have both incoming and outgoing arcs")


def dicut_clutter(D: MixedGraph) -> Clutter:
    """Minimal dicuts as arc masks (arc k is bit k-1)."""
    require_digraph(D)
    config.require_cap('arc count', len(D.arcs), config.settings().graph_max_edges)
    masks = []
    for cut in pseudo_dicuts(D):
        mask = 0
        for a in cut.arcs:
            mask |= 1 << (a - 1)
        masks.append(mask)
    return Clutter(len(D.arcs), minimize(masks))


@dataclass(frozen=True)
class TightDijoins:
    tau: int
    members: Clutter
    minimum_dicuts: Tuple[int, ...]
    rank: int


def tight_dijoins(D: MixedGraph) -> TightDijoins:
    """Minimal dijoins meeting every minimum dicut exactly once.

    The minimal dijoins are the blocker of the dicut clutter; rank is the
    rational rank of the minimum dicut incidence vectors.
    """
    require_bipartite_digraph(D)
    dicuts = dicut_clutter(D)
    if dicuts.has_empty_member:
        raise ArgumentError("the digraph has an empty dicut (it is not weakly connected)")
    if dicuts.has_no_members:
        raise ArgumentError("the digraph has no dicuts")
    tau = min(_popcount(c) for c in dicuts.members)
    minimum = tuple(sorted(c for c in dicuts.members if _popcount(c) == tau))
    joins = blocker(dicuts)
    tight = [j for j in joins.members if all(_popcount(j & c) == 1 for c in minimum)]
    m = len(D.arcs)
    rk = rank([[c >> k & 1 for k in range(m)] for c in minimum])
    logger.debug("tau=%d, %d minimal dijoins, %d tight, rank %d", tau, len(joins), len(tight), rk)
    return TightDijoins(tau, Clutter(m, tight), minimum, rk)
