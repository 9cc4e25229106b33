from fractions import Fraction

import pytest

from src.common import config
from src.common.errors import ArgumentError, DimensionError, PreconditionError
from src.common.linalg import constant_vector
from src.polytope import faces, vertices
from src.polytope.hull import hull_contains
from src.polytope.vertices import IneqRow, IneqSystem, enumerate_vertices
from src.setsys.set_system import SetSystem, full_cube

HALF = Fraction(1, 2)


@pytest.fixture
def weight_one() -> SetSystem:
    return SetSystem.from_bitstrings(['100', '010', '001'])


def test_hull_membership(chain3):
    assert hull_contains(chain3, constant_vector(HALF, 3))
    assert not hull_contains(chain3, (Fraction(1), Fraction(0), Fraction(1)))
    assert hull_contains(chain3, (Fraction(1), Fraction(1, 3), Fraction(1, 3)))


def test_hull_dimension_mismatch(chain3):
    with pytest.raises(DimensionError):
        hull_contains(chain3, (HALF, HALF))


def test_box_with_chain_rows_has_chain_vertices():
    rows = [IneqRow((Fraction(1), Fraction(-1), Fraction(0)), Fraction(0)),
            IneqRow((Fraction(0), Fraction(1), Fraction(-1)), Fraction(0))]
    system = IneqSystem.boxed(3, rows)
    found = sorted(enumerate_vertices(system))
    assert found == sorted([(Fraction(0),) * 3, (Fraction(1), Fraction(0), Fraction(0)),
                            (Fraction(1), Fraction(1), Fraction(0)), (Fraction(1),) * 3])


def test_both_enumerators_agree():
    rows = [IneqRow((Fraction(1), Fraction(1), Fraction(1)), Fraction(1))]
    system = IneqSystem.boxed(3, rows)
    basis = sorted(enumerate_vertices(system, method='basis'))
    dd = sorted(enumerate_vertices(system, method='double_description'))
    assert basis == dd
    assert len(dd) == 7


def test_chain_is_cube_ideal(chain3):
    verdict = vertices.is_cube_ideal(chain3)
    assert verdict
    assert verdict.witness is None


def test_full_cube_is_cube_ideal():
    assert vertices.is_cube_ideal(full_cube(3)).verdict


@pytest.mark.parametrize('cap', [{'max_n': 2}, {'vertex_max_n': 2}])
def test_cube_ideal_cap_applies_after_a_cached_verdict(chain3, cap):
    assert vertices.is_cube_ideal(chain3).verdict
    config.configure(**cap)
    with pytest.raises(ArgumentError):
        vertices.is_cube_ideal(chain3)


def test_weight_one_points_are_not_cube_ideal(weight_one):
    verdict = vertices.is_cube_ideal(weight_one)
    assert not verdict
    assert verdict.witness == (HALF, HALF, HALF)


def test_membership_needs_cube_ideal(weight_one, chain3):
    with pytest.raises(PreconditionError):
        vertices.membership(weight_one, constant_vector(HALF, 3))
    assert vertices.membership(chain3, constant_vector(HALF, 3))


def test_cycle_space_contains_subcube(k4_cycle_space):
    assert vertices.check_subcube(k4_cycle_space, 3)
    assert vertices.subcube_corners_inside(k4_cycle_space, 3) == 64


def test_chain_misses_subcube(chain3):
    assert not vertices.check_subcube(chain3, 3)
    with pytest.raises(ArgumentError):
        vertices.check_subcube(chain3, 1)


def test_face_at_half_is_the_core(chain3):
    face = faces.minimal_face(chain3, constant_vector(HALF, 3))
    assert face.dim == 1
    assert face.lattice_points.to_bitstrings() == ['000', '111']


def test_face_at_a_vertex_is_a_point(chain3):
    face = faces.minimal_face(chain3, (Fraction(1), Fraction(0), Fraction(0)))
    assert face.dim == 0
    assert face.lattice_points.to_bitstrings() == ['100']


def test_face_outside_hull(chain3):
    with pytest.raises(PreconditionError):
        faces.minimal_face(chain3, (Fraction(0), Fraction(1), Fraction(0)))


def test_core_is_cube_ideal(chain3, k4_cycle_space):
    assert faces.core_is_cube_ideal(chain3)
    assert faces.core_is_cube_ideal(k4_cycle_space)


def test_face_subcube_on_cycle_space(k4_cycle_space):
    check = faces.check_face_subcube(k4_cycle_space, 3)
    assert check.holds
    assert check.violation is None


def test_face_subcube_needs_connectivity(chain3):
    with pytest.raises(PreconditionError):
        faces.check_face_subcube(chain3, 3)
