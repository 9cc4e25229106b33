import pytest

from src.clutter import clutter_logic as cl
from src.clutter.clutter_logic import Clutter
from src.common.errors import ArgumentError, IndexSetError, PreconditionError


@pytest.fixture
def triangle() -> Clutter:
    return Clutter.from_sets(3, [(1, 2), (1, 3), (2, 3)])


@pytest.fixture
def two_pairs() -> Clutter:
    """{1,2} and {3,4}: ideal, tau = 2, every element in a minimum cover."""
    return Clutter.from_sets(4, [(1, 2), (3, 4)])


def test_members_must_be_an_antichain():
    with pytest.raises(ArgumentError):
        Clutter(3, [0b001, 0b011])
    with pytest.raises(IndexSetError):
        Clutter(2, [0b100])


def test_from_sets_keeps_minimal_members():
    C = Clutter.from_sets(3, [(1,), (1, 2), (2, 3)])
    assert C.sets() == [(1,), (2, 3)]


def test_degenerate_clutters():
    assert Clutter(3).degenerate
    assert Clutter(3, [0]).has_empty_member
    assert not Clutter.from_sets(2, [(1,)]).degenerate


def test_blocker_of_triangle_is_itself(triangle):
    assert cl.blocker(triangle) == triangle


def test_blocker_of_two_pairs(two_pairs):
    assert cl.blocker(two_pairs).sets() == [(1, 3), (1, 4), (2, 3), (2, 4)]
    assert cl.blocker(cl.blocker(two_pairs)) == two_pairs


def test_blocker_of_degenerate_clutters():
    assert cl.blocker(Clutter(2)).sets() == [()]
    assert cl.blocker(Clutter(2, [0])).sets() == []


def test_covering_number(triangle, two_pairs):
    assert cl.covering_number(triangle) == 2
    assert cl.covering_number(two_pairs) == 2
    assert cl.covering_number(Clutter(2)) is None


def test_triangle_is_not_ideal(triangle):
    verdict = cl.is_ideal(triangle)
    assert not verdict
    assert verdict.witness_in_q


def test_two_pairs_is_ideal(two_pairs):
    assert cl.is_ideal(two_pairs).verdict
    assert cl.is_ideal(cl.blocker(two_pairs)).verdict


def test_degenerate_clutter_counts_as_ideal():
    verdict = cl.is_ideal(Clutter(3))
    assert verdict.verdict and verdict.degenerate


def test_cuboid_of_chain(chain3):
    C = cl.cuboid(chain3)
    assert C.ground == 6
    assert C.sets() == [(1, 3, 5), (1, 3, 6), (1, 4, 6), (2, 4, 6)]


def test_monotone_system(two_pairs):
    S = cl.monotone_system(two_pairs)
    assert len(S) == 7
    assert '1100' in S.to_bitstrings()
    assert '1010' not in S.to_bitstrings()


def test_minors(triangle):
    assert cl.minor(triangle, delete=[1]).sets() == [(1, 2)]
    assert cl.minor(triangle, contract=[1]).sets() == [(1,), (2,)]
    with pytest.raises(ArgumentError):
        cl.minor(triangle, delete=[1], contract=[1])
    with pytest.raises(IndexSetError):
        cl.minor(triangle, delete=[4])


def test_tau_cover_minimal(triangle, two_pairs):
    assert cl.is_tau_cover_minimal(triangle)
    tcm = cl.is_tau_cover_minimal(two_pairs)
    assert tcm.verdict and tcm.tau == 2
    lopsided = Clutter.from_sets(3, [(1, 2), (1, 3)])
    assert not cl.is_tau_cover_minimal(lopsided).verdict


def test_core_clutter(two_pairs):
    assert cl.core_clutter(two_pairs) == two_pairs
    with pytest.raises(PreconditionError):
        cl.core_clutter(Clutter.from_sets(3, [(1, 2), (1, 3)]))


def test_width_length(triangle, two_pairs):
    assert cl.find_width_length_violation(two_pairs) is None
    w, ell = cl.find_width_length_violation(triangle)
    assert len(w) == len(ell) == 3
    assert cl.width_length_check(two_pairs, trials=50, seed=1)


def test_rainbow_covering_number(two_pairs):
    rb = cl.rainbow_covering_number(two_pairs)
    assert rb.d == 1
    assert rb.mu is None


def test_rainbow_covering_number_needs_tau_two():
    with pytest.raises(PreconditionError):
        cl.rainbow_covering_number(Clutter.from_sets(3, [(1, 2, 3)]))


def test_up_monotone_vc_bound(two_pairs):
    vc, bound = cl.up_monotone_vc_bound(two_pairs)
    assert vc >= bound == 2


def test_uphull_face(two_pairs):
    check = cl.uphull_face_check(two_pairs)
    assert check.connectivity == 2
    assert check.expected_dim == 1
    assert check.holds
