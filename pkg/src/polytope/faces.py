"""Minimal faces of conv(S) for cube-ideal S (polytope)."""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from ..common.errors import ArgumentError, ConsistencyError, DimensionError, PreconditionError
from ..common.linalg import RationalVector, affine_rank, constant_vector, in_affine_hull
from ..setsys.gsc import connectivity, core_points, minimal_valid_gsc
from ..setsys.set_system import SetSystem
from .vertices import IneqRow, IneqSystem, enumerate_vertices, is_cube_ideal, require_cube_ideal


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Face:
    tight: Tuple[IneqRow, ...]
    lattice_points: SetSystem
    dim: int
    affine_hull_rank: int


def _as_vector(p: int, n: int) -> RationalVector:
    return tuple(Fraction(p >> k & 1) for k in range(n))


def minimal_face(S: SetSystem, x: Sequence[Fraction]) -> Face:
    system = require_cube_ideal(S)
    if len(x) != S.n:
        raise DimensionError(f"point has {len(x)} coordinates, expected {S.n}")
    x = tuple(Fraction(v) for v in x)
    if not system.satisfied_by(x):
        raise PreconditionError("point is not in conv(S)")
    tight = system.tight_rows(x)
    lattice = [p for p in S.sorted_points() if all(row.slack(_as_vector(p, S.n)) == 0 for row in tight)]
    if not lattice:
        raise ConsistencyError("minimal face has no lattice points")
    vectors = [_as_vector(p, S.n) for p in lattice]
    rk = affine_rank(vectors)
    if not in_affine_hull(x, vectors):
        raise ConsistencyError("point is not in the affine hull of its face's lattice points")
    return Face(tight, SetSystem(S.n, lattice), rk - 1, rk)


def core_is_cube_ideal(S: SetSystem) -> bool:
    require_cube_ideal(S)
    core = core_points(S)
    verdict = is_cube_ideal(core).verdict
    if not verdict:
        logger.warning("core of a cube-ideal set-system is not cube-ideal (n=%d, |core|=%d)", S.n, len(core))
    return verdict


@dataclass(frozen=True)
class FaceSubcubeCheck:
    holds: bool
    hypothesis: bool
    face_dim: int
    slice_vertices: int
    violation: Optional[RationalVector]


def sc_hypothesis(S: SetSystem, lam: int) -> bool:
    """Every variable of a valid lam-GSC inequality lies in a valid lam-SC inequality."""
    members = [g for g in minimal_valid_gsc(S) if g.size == lam]
    in_gsc = set().union(*(g.variables for g in members)) if members else set()
    in_sc = set().union(*(g.I for g in members if not g.J)) if members else set()
    return in_gsc <= in_sc


def check_face_subcube(S: SetSystem, lam: int) -> FaceSubcubeCheck:
    """Is the slice [1/(lam+1), 2/lam - 1/(lam+1)]^n of aff(F) inside F?

    F is the minimal face of conv(S) at (1/lam) 1. The slice is cut out by the
    small box and the rows tight at that point taken as equations; its
    vertices are enumerated exactly and tested against the description.
    """
    if lam < 3:
        raise ArgumentError(f"lambda must be at least 3, got {lam}")
    system = require_cube_ideal(S)
    lam_s = connectivity(S)
    if lam_s is not None and lam_s < lam:
        raise PreconditionError(f"connectivity {lam_s} is below lambda = {lam}")
    centre = constant_vector(Fraction(1, lam), S.n)
    face = minimal_face(S, centre)
    equations: List[IneqRow] = []
    for row in face.tight:
        equations.append(row)
        equations.append(row.negated())
    lo = Fraction(1, lam + 1)
    hi = Fraction(2, lam) - lo
    slice_system = IneqSystem.boxed(S.n, equations, lo=lo, hi=hi)
    vertices = enumerate_vertices(slice_system, method='double_description')
    violation = next((v for v in vertices if not system.satisfied_by(v)), None)
    return FaceSubcubeCheck(violation is None, sc_hypothesis(S, lam), face.dim, len(vertices), violation)

