from fractions import Fraction

import pytest

from src.common.errors import ArgumentError, IndexSetError, ParseError, PreconditionError
from src.setsys import gsc
from src.setsys.gsc import GscIneq
from src.setsys.set_system import SetSystem, full_cube, twist


def test_ineq_rejects_overlap_and_empty():
    with pytest.raises(ArgumentError):
        GscIneq(frozenset({1}), frozenset({1}))
    with pytest.raises(ArgumentError):
        GscIneq(frozenset(), frozenset())
    with pytest.raises(IndexSetError):
        GscIneq(frozenset({0}))


def test_ineq_value_and_violation():
    g = GscIneq(frozenset({1}), frozenset({2}))
    assert g.violated_by(0b010)
    assert not g.violated_by(0b011)
    assert g.value([Fraction(1, 2), Fraction(1, 2)]) == 1
    assert g.as_row(3) == ((Fraction(1), Fraction(-1), Fraction(0)), Fraction(0))


def test_ineq_format_and_parse():
    g = GscIneq(frozenset({1, 3}), frozenset())
    assert g.format() == 'I: 1 3 ; J: -'
    assert GscIneq.parse('I: 1 3 ; J: -') == g
    with pytest.raises(ParseError):
        GscIneq.parse('I: 1 x ; J: 2')
    with pytest.raises(ParseError):
        GscIneq.parse('I: 1')


def test_twisted_ineq_stays_valid(chain3):
    g = GscIneq(frozenset({1}), frozenset({2}))
    q = 0b011
    assert gsc.is_valid(chain3, g)
    assert gsc.is_valid(twist(chain3, q), g.twisted(q))


def test_chain_minimal_inequalities(chain3):
    found = [g.format() for g in gsc.minimal_valid_gsc(chain3)]
    assert found == ['I: 1 ; J: 2', 'I: 1 ; J: 3', 'I: 2 ; J: 3']


def test_connectivity(chain3, k4_cycle_space):
    assert gsc.connectivity(chain3) == 2
    assert gsc.connectivity(k4_cycle_space) == 3
    assert gsc.connectivity(full_cube(3)) is None


def test_connectivity_of_empty_system():
    with pytest.raises(ArgumentError):
        gsc.connectivity(SetSystem(2))


def test_chain_cover_graph_is_one_component(chain3):
    cg = gsc.cover_graph(chain3)
    assert cg.edges == frozenset({(1, 2), (1, 3), (2, 3)})
    assert cg.d == 1
    assert gsc.kappa(chain3) is None


def test_cycle_space_cover_graph_is_edgeless(k4_cycle_space):
    cg = gsc.cover_graph(k4_cycle_space)
    assert cg.d == 6
    assert not cg.edges
    assert gsc.kappa(k4_cycle_space) == 3
    assert gsc.core_points(k4_cycle_space) == k4_cycle_space


def test_chain_core(chain3):
    core = gsc.core_points(chain3)
    assert core.to_bitstrings() == ['000', '111']


def test_cover_graph_needs_connectivity_two():
    S = SetSystem.from_bitstrings(['00', '01'])
    with pytest.raises(PreconditionError):
        gsc.cover_graph(S)


def test_rainbow(k4_cycle_space, chain3):
    g = gsc.minimal_valid_gsc(k4_cycle_space)[0]
    assert gsc.is_rainbow(k4_cycle_space, g)
    assert not gsc.is_rainbow(chain3, GscIneq(frozenset({1}), frozenset({2})))


def test_canonical_twist_of_chain(chain3):
    ct = gsc.canonical_twist(chain3)
    assert ct.q_bits() == '000'
    assert ct.preorder == frozenset({(1, 2), (1, 3), (2, 3)})
    assert ct.is_comparability
    assert ct.dominates(1, 3)
    assert not ct.dominates(3, 1)


def test_canonical_twist_of_twisted_chain(chain3):
    T = twist(chain3, '010')
    ct = gsc.canonical_twist(T)
    twisted = twist(T, ct.q)
    for g in gsc.valid_two_gsc(twisted):
        assert len(g.I) == 1 and len(g.J) == 1


def test_canonical_twist_needs_half_point():
    S = SetSystem.from_bitstrings(['000', '100'])
    with pytest.raises(PreconditionError):
        gsc.canonical_twist(S)
