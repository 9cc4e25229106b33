"""Built-in fixtures for `gen` and the regression suite (cli)."""

import logging
from typing import Callable, Dict, List

from ..clutter.clutter_logic import Clutter
from ..common.data_manager import Loaded
from ..common.errors import ArgumentError
from ..graphs import generators
from ..graphs.matchings import cycle_space
from ..graphs.mixed_graph import MixedGraph
from ..setsys.set_system import example_chain


logger = logging.getLogger(__name__)


def mixed_example() -> MixedGraph:
    """One arc 1 -> 2 and the edges 2-3, 3-1, 2-1."""
    return MixedGraph(3, ((1, 2),), ((2, 3), (3, 1), (2, 1)))


def triangle_clutter() -> Clutter:
    return Clutter.from_sets(3, [(1, 2), (1, 3), (2, 3)])


FIXTURES: Dict[str, Callable[[int], Loaded]] = {
    'example-5.1': lambda size: example_chain(size or 3),
    'chain': lambda size: example_chain(size or 3),
    'cycle-space-c3': lambda size: cycle_space(generators.cycle(3)),
    'cycle-space-k4': lambda size: cycle_space(generators.complete(4)),
    'cycle-space-k5': lambda size: cycle_space(generators.complete(5)),
    'cycle-space-petersen': lambda size: cycle_space(generators.petersen()),
    'staircase': lambda size: generators.staircase(size or 4),
    'k22-dijoin': lambda size: generators.bipartite_digraph(2, 2),
    'k33-dijoin': lambda size: generators.bipartite_digraph(3, 3),
    'triangle': lambda size: generators.cycle(3),
    'k4': lambda size: generators.complete(4),
    'k44': lambda size: generators.complete_bipartite(4, 4),
    'petersen': lambda size: generators.petersen(),
    'mixed': lambda size: mixed_example(),
    'triangle-clutter': lambda size: triangle_clutter(),
}


def names() -> List[str]:
    return sorted(FIXTURES)


def build(name: str, size: int = 0) -> Loaded:
    """`size` is n for example-5.1 and chain, k for staircase; other fixtures ignore it."""
    try:
        maker = FIXTURES[name]
    except KeyError:
        raise ArgumentError(f"unknown fixture {name!r}; choose from {', '.join(names())}")
    obj = maker(size)
    logger.debug("built fixture %s", name)
    return obj
