"""Mixed graphs: strong orientations, dijoins, matchings and cut families."""

from .mixed_graph import (  # noqa: F401
    Cut, MixedGraph, digraph, edge_connectivity, ear_count, graph, odd_cuts, pseudo_dicuts,
)
from .orientations import (  # noqa: F401
    PseudoDicutGraph, orientation_count, scr, scr_cross_validate, scr_inequalities,
    scr_is_cube_ideal, two_pseudo_dicut_graph,
)
from .dijoins import TightDijoins, dicut_clutter, tight_dijoins  # noqa: F401
from .matchings import (  # noqa: F401
    RGraphSuite, cycle_space, odd_cut_clutter, perfect_matchings, postman_clutter, rgraph_suite,
)
from .laminar import LaminarCheck, LaminarMaximum, laminar_bound_check, max_laminar_odd_family  # noqa: F401
from . import generators  # noqa: F401
