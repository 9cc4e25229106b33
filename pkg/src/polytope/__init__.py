"""Exact polyhedral computations on capacity + GSC descriptions."""

from .hull import hull_contains  # noqa: F401
from .vertices import (  # noqa: F401
    CubeIdealVerdict, IneqRow, IneqSystem, check_subcube, description, enumerate_vertices,
    is_cube_ideal, membership,
)
from .faces import Face, FaceSubcubeCheck, check_face_subcube, core_is_cube_ideal, minimal_face  # noqa: F401
