"""Set-systems over the cube and their GSC inequalities."""

from .set_system import (  # noqa: F401
    SetSystem, example_chain, full_cube, project, shattered_sets, twist, vc_dimension,
)
from .gsc import (  # noqa: F401
    CanonicalTwist, CoverGraph, GscIneq, canonical_twist, connectivity, core_points,
    cover_graph, is_rainbow, is_valid, kappa, minimal_valid_gsc, valid_two_gsc,
)
