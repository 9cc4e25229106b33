from fractions import Fraction
from itertools import combinations

import networkx as nx
import pytest

from src.cli.fixtures import mixed_example
from src.common.errors import ArgumentError, IndexSetError, PreconditionError
from src.graphs import dijoins, generators, laminar, matchings, mixed_graph, orientations
from src.graphs.mixed_graph import MixedGraph, digraph, graph
from src.polytope.vertices import is_cube_ideal
from src.setsys.set_system import vc_dimension


# mixed graphs and cuts

def test_graph_validation():
    with pytest.raises(IndexSetError):
        graph(2, [(1, 3)])
    with pytest.raises(ArgumentError):
        graph(2, [(2, 2)])
    with pytest.raises(ArgumentError):
        MixedGraph(0)


def test_kinds():
    assert generators.cycle(3).is_graph
    assert generators.bipartite_digraph(2, 2).is_digraph
    G = mixed_example()
    assert not G.is_graph and not G.is_digraph


def test_odd_cuts_of_k4():
    cuts = mixed_graph.odd_cuts(generators.complete(4))
    assert len(cuts) == 4
    assert all(len(c.edges) == 3 for c in cuts)
    assert all(1 in c.U for c in cuts)


def test_pseudo_dicuts_skip_entered_sets():
    cuts = mixed_graph.pseudo_dicuts(mixed_example())
    assert sorted(sorted(c.U) for c in cuts) == [[1], [1, 2], [1, 3], [3]]
    assert all(len(c.edges) == 2 for c in cuts)


def test_edge_connectivity_and_ears():
    assert mixed_graph.edge_connectivity(generators.complete(4)) == 3
    assert mixed_graph.edge_connectivity(generators.cycle(5)) == 2
    assert mixed_graph.edge_connectivity(graph(1, [])) is None
    assert mixed_graph.ear_count(generators.complete(4)) == 3
    with pytest.raises(ArgumentError):
        mixed_graph.ear_count(graph(4, [(1, 2), (3, 4)]))


# strong orientations

def test_triangle_has_two_strong_orientations():
    S = orientations.scr(generators.cycle(3))
    assert len(S) == 2
    assert S.to_bitstrings() == ['010', '101']


def test_k4_strong_orientations():
    G = generators.complete(4)
    assert orientations.orientation_count(G) == 24
    assert orientations.scr_cross_validate(G)
    assert orientations.scr_is_cube_ideal(G)


def test_mixed_example_orientations():
    G = mixed_example()
    assert orientations.orientation_count(G) == 3
    assert orientations.scr_cross_validate(G)


def test_reference_orientation_twists_the_system():
    G = generators.cycle(3)
    base = orientations.scr(G)
    shifted = orientations.scr(G, ref=0b001)
    assert {x ^ 0b001 for x in base.points} == set(shifted.points)
    assert orientations.scr_cross_validate(G, ref=0b001)
    with pytest.raises(ArgumentError):
        orientations.scr(G, ref=0b1000)


def test_scr_inequalities_of_triangle():
    rows = orientations.scr_inequalities(generators.cycle(3))
    assert len(rows) == 6
    assert all(r.size == 2 for r in rows)


def test_bridge_breaks_the_precondition():
    with pytest.raises(PreconditionError):
        orientations.scr(generators.path(3))


def test_no_edges_to_orient():
    with pytest.raises(ArgumentError):
        orientations.scr(generators.bipartite_digraph(2, 2))


def test_pseudo_dicut_graph_of_triangle():
    pdg = orientations.two_pseudo_dicut_graph(generators.cycle(3))
    assert pdg.d == 1
    assert pdg.kappa is None


def test_pseudo_dicut_graph_of_k4():
    pdg = orientations.two_pseudo_dicut_graph(generators.complete(4))
    assert pdg.d == 6
    assert pdg.kappa == 3
    assert pdg.graph.number_of_edges() == 0


# dijoins

def test_k22_tight_dijoins():
    res = dijoins.tight_dijoins(generators.bipartite_digraph(2, 2))
    assert res.tau == 2
    assert res.members.sets() == [(1, 4), (2, 3)]
    assert res.rank == 3
    assert len(res.minimum_dicuts) == 4


def test_k33_tight_dijoins():
    res = dijoins.tight_dijoins(generators.bipartite_digraph(3, 3))
    assert res.tau == 3
    assert len(res.members) == 6
    assert res.rank == 5


def test_dicut_clutter_of_k22():
    C = dijoins.dicut_clutter(generators.bipartite_digraph(2, 2))
    assert C.sets() == [(1, 2), (1, 3), (2, 4), (3, 4)]


def test_dijoins_need_a_bipartite_digraph():
    with pytest.raises(ArgumentError):
        dijoins.tight_dijoins(digraph(3, [(1, 2), (2, 3)]))
    with pytest.raises(ArgumentError):
        dijoins.tight_dijoins(generators.cycle(3))
    with pytest.raises(ArgumentError):
        dijoins.tight_dijoins(digraph(4, [(1, 2), (3, 4)]))


# matchings, postman sets and cycle spaces

def test_k4_perfect_matchings():
    assert matchings.perfect_matchings(generators.complete(4)) == [12, 18, 33]


def test_parallel_edges_are_distinct():
    assert matchings.perfect_matchings(graph(2, [(1, 2), (1, 2)])) == [1, 2]


def test_odd_vertex_count_has_no_perfect_matching():
    with pytest.raises(ArgumentError):
        matchings.perfect_matchings(generators.cycle(3))


def test_k4_rgraph_suite():
    suite = matchings.rgraph_suite(generators.complete(4), 3)
    assert suite.is_r_graph
    assert len(suite.matchings) == 3
    assert len(suite.core_matchings) == 3
    assert suite.rank == 4
    assert suite.rank_bound == 5


def test_petersen_rgraph_suite():
    suite = matchings.rgraph_suite(generators.petersen(), 3)
    assert suite.is_r_graph
    assert len(suite.matchings) == 6
    assert len(suite.core_matchings) == 6
    assert suite.rank <= suite.rank_bound == 14


def test_k44_rgraph_suite():
    suite = matchings.rgraph_suite(generators.complete_bipartite(4, 4), 4)
    assert len(suite.matchings) == 24
    assert suite.rank == 7


def test_rgraph_suite_needs_regularity():
    with pytest.raises(ArgumentError):
        matchings.rgraph_suite(generators.complete(4), 4)


@pytest.mark.parametrize('k, edges, rank', [(4, 6, 4), (6, 9, 7), (8, 12, 10)])
def test_staircases(k, edges, rank):
    G = generators.staircase(k)
    assert G.vcount == k
    assert len(G.edges) == edges
    suite = matchings.rgraph_suite(G, 3)
    assert suite.is_r_graph
    assert suite.rank == rank == edges - 2
    assert len(suite.core_matchings) == 3


def test_staircase_six_is_the_prism():
    G = generators.staircase(6)
    assert sorted(G.edges) == [(1, 2), (1, 3), (1, 4), (2, 3), (2, 5), (3, 6), (4, 5), (4, 6), (5, 6)]
    with pytest.raises(ArgumentError):
        generators.staircase(5)


def test_postman_clutter_of_k4():
    G = generators.complete(4)
    postman = matchings.postman_clutter(G)
    assert len(postman) == 7
    odd = matchings.odd_cut_clutter(G)
    assert len(odd) == 4
    from src.clutter.clutter_logic import blocker
    assert blocker(postman) == odd


def test_cycle_spaces():
    assert len(matchings.cycle_space(generators.cycle(3))) == 2
    S = matchings.cycle_space(generators.complete(4))
    assert len(S) == 8
    assert vc_dimension(S) == 3
    assert is_cube_ideal(S).verdict
    with pytest.raises(ArgumentError):
        matchings.cycle_space(graph(3, []))


def test_cycle_space_of_forest_is_trivial():
    S = matchings.cycle_space(graph(4, [(1, 2), (3, 4)]))
    assert S.to_bitstrings() == ['00']


# laminar families

def _odd_subsets(n):
    ground = range(1, 2 * n + 1)
    return [frozenset(c) for size in range(1, 2 * n + 1, 2) for c in combinations(ground, size)]


def _brute_force_maximum(n):
    sets = _odd_subsets(n)
    best = 0
    for mask in range(1 << len(sets)):
        family = [s for k, s in enumerate(sets) if mask >> k & 1]
        if len(family) > best and laminar.is_laminar(family):
            best = len(family)
    return best


@pytest.mark.parametrize('n, size', [(1, 2), (2, 5), (3, 8), (4, 11)])
def test_laminar_maximum(n, size):
    result = laminar.max_laminar_odd_family(n)
    assert result.size == size == 3 * n - 1
    check = laminar.laminar_bound_check(result.family, n)
    assert check.laminar and check.odd and check.holds


@pytest.mark.parametrize('n', [1, 2])
def test_laminar_maximum_matches_brute_force(n):
    assert laminar.max_laminar_odd_family(n).size == _brute_force_maximum(n)


def _clique_maximum(n):
    # singletons fit every laminar family, so search the larger odd sets only
    sets = [s for s in _odd_subsets(n) if len(s) > 1]
    H = nx.Graph()
    H.add_nodes_from(sets)
    H.add_edges_from((a, b) for a, b in combinations(sets, 2) if laminar.is_laminar([a, b]))
    clique, _ = nx.max_weight_clique(H, weight=None)
    return 2 * n + len(clique)


@pytest.mark.parametrize('n', [1, 2, 3, 4])
def test_laminar_maximum_matches_exhaustive_search(n):
    assert laminar.max_laminar_odd_family(n).size == _clique_maximum(n)


def test_laminar_check_flags_bad_families():
    crossing = laminar.laminar_bound_check([(1, 2, 3), (3, 4, 5)], 3)
    assert not crossing.laminar and crossing.holds is None
    even = laminar.laminar_bound_check([(1, 2)], 1)
    assert not even.odd and even.holds is None
    with pytest.raises(IndexSetError):
        laminar.laminar_bound_check([(5,)], 2)


def test_rank_bound_is_a_fraction():
    suite = matchings.rgraph_suite(generators.complete(4), 3)
    assert isinstance(suite.rank_bound, Fraction)
