import random

import networkx as nx
import pytest

from raagcomm.combinatorics import Graph, SimplicialComplex, all_graphs, clique_complex, random_graph
from raagcomm.errors import ValidationError
from raagcomm.freegroup import Word, exponent_sums
from raagcomm.generators import count_P, count_W_closed
from raagcomm.topology import (
    build_cube_complex,
    build_grid,
    cycle_rank,
    expected_cell_counts,
    h1_rank_and_torsion,
    in_maximal_tree,
    is_spanning_tree,
    nontree_edges,
    nontree_loop_word,
    paper_spanning_tree,
    tree_path_word,
)


@pytest.mark.parametrize("m,s,V,E", [(2, 1, 4, 4), (2, 2, 9, 12), (3, 1, 8, 12), (3, 2, 27, 54)])
def test_grid_counts(m, s, V, E):
    grid = build_grid(m, s)
    assert len(list(grid.vertices())) == grid.vertex_count == V
    assert len(list(grid.edges())) == grid.edge_count == E


def test_grid_rejects_small_m():
    with pytest.raises(ValidationError):
        build_grid(1, 2)
    with pytest.raises(ValidationError):
        build_grid(3, 0)


@pytest.mark.parametrize("m,s", [(2, 1), (2, 3), (3, 2), (4, 2)])
def test_cycle_rank_matches_networkx(m, s):
    g = nx.grid_graph(dim=[s + 1] * m)
    expected = g.number_of_edges() - g.number_of_nodes() + nx.number_connected_components(g)
    assert cycle_rank(build_grid(m, s)) == expected == count_W_closed(m, s)


def test_cycle_rank_of_plain_graphs():
    assert cycle_rank(Graph.cycle(5)) == 1
    assert cycle_rank(Graph.empty(4)) == 0
    assert cycle_rank(Graph.complete(4)) == 3


def test_tree_small_cases():
    assert nontree_edges(2, 1) == [((0, 1), 1)]
    assert len(paper_spanning_tree(3, 1)) == 7
    assert len(nontree_edges(3, 1)) == 5


@pytest.mark.parametrize("m", [2, 3, 4])
@pytest.mark.parametrize("s", [1, 2, 3])
def test_tree_is_spanning_with_W_complement(m, s):
    grid = build_grid(m, s)
    tree = paper_spanning_tree(m, s)
    assert is_spanning_tree(grid.vertices(), tree)
    assert len(nontree_edges(m, s)) == count_W_closed(m, s)


def test_is_spanning_tree_rejects_cycle_and_forest():
    grid = build_grid(2, 1)
    assert not is_spanning_tree(grid.vertices(), list(grid.edges()))
    assert not is_spanning_tree(grid.vertices(), [((0, 0), 1)])


def test_tree_paths_follow_axis_order():
    assert tree_path_word(3, 2, (1, 2, 1)).syllables == ((2, 2), (1, 1), (3, 1))
    assert tree_path_word(4, 2, (1, 2, 1, 2)).syllables == ((3, 1), (2, 2), (1, 1), (4, 2))
    assert tree_path_word(3, 2, (0, 0, 0)).is_identity


def test_m3_loop_words_have_expected_shape():
    s = 2
    for (c, p) in nontree_edges(3, s):
        c1, c2, c3 = c
        w = nontree_loop_word(3, s, (c, p))
        step = [0, 0, 0]
        step[p - 1] = 1
        d1, d2, d3 = c1 + step[0], c2 + step[1], c3 + step[2]
        expected = Word(3, [(2, c2), (1, c1), (3, c3), (p, 1), (3, -d3), (1, -d1), (2, -d2)])
        assert w == expected
        assert not any(exponent_sums(w))
        assert not w.is_identity


def test_m2_loop_word():
    w = nontree_loop_word(2, 2, ((1, 1), 1))
    assert w == Word(2, [(1, 1), (2, 1), (1, 1), (2, -1), (1, -2)])


def test_loop_word_errors():
    with pytest.raises(ValidationError):
        nontree_loop_word(3, 1, ((0, 0, 0), 3))
    with pytest.raises(ValidationError):
        nontree_loop_word(3, 1, ((0, 1, 1), 3))
    with pytest.raises(ValidationError):
        tree_path_word(3, 1, (2, 0, 0))


def test_in_maximal_tree_rule():
    assert in_maximal_tree(3, ((1, 1, 0), 3))
    assert in_maximal_tree(3, ((0, 1, 0), 1))
    assert not in_maximal_tree(3, ((0, 1, 1), 1))
    assert not in_maximal_tree(3, ((1, 0, 0), 2))


@pytest.mark.parametrize("s", [1, 2])
def test_cell_counts_and_boundary_square(pentagon_complex, s):
    C = build_cube_complex(pentagon_complex, s)
    assert C.counts() == expected_cell_counts(pentagon_complex, s)
    assert (C.boundary(1) @ C.boundary(2)).is_zero()


def test_named_cell_counts(pentagon_complex):
    assert build_cube_complex(pentagon_complex, 1).counts() == (32, 80, 40)
    assert build_cube_complex(pentagon_complex, 2).counts() == (243, 810, 540)


def test_single_edge_has_trivial_h1():
    K = clique_complex(Graph(2, frozenset({(1, 2)})))
    assert h1_rank_and_torsion(build_cube_complex(K, 1)) == (0, [])
    assert h1_rank_and_torsion(build_cube_complex(K, 3)) == (0, [])


def test_discrete_complex_h1_is_grid_cycle_rank():
    K = clique_complex(Graph.empty(3))
    for s in (1, 2):
        assert h1_rank_and_torsion(build_cube_complex(K, s)) == (cycle_rank(build_grid(3, s)), [])


def test_pentagon_h1(pentagon_complex):
    assert h1_rank_and_torsion(build_cube_complex(pentagon_complex, 1)) == (10, [])
    assert h1_rank_and_torsion(build_cube_complex(pentagon_complex, 2)) == (60, [])


def test_non_flag_input_is_filled():
    hollow = SimplicialComplex(3, ((1, 2), (2, 3), (1, 3)))
    C = build_cube_complex(hollow, 1)
    assert not C.was_flag
    assert h1_rank_and_torsion(C) == (0, [])


def test_h1_matches_P_on_small_graphs():
    rng = random.Random(9)
    graphs = [g for m in (2, 3, 4) for g in all_graphs(m)] + [random_graph(5, rng) for _ in range(3)]
    for g in graphs:
        K = clique_complex(g)
        assert h1_rank_and_torsion(build_cube_complex(K, 1)) == (count_P(K, 1).P, [])


def test_boundary_rejects_other_degrees(pentagon_complex):
    with pytest.raises(ValidationError):
        build_cube_complex(pentagon_complex, 1).boundary(3)
    with pytest.raises(ValidationError):
        build_cube_complex(pentagon_complex, 0)
