import pickle
import pytest
from src.trees.ChemicalTree import (ChemicalTree, DegreeCensus, InvalidTreeError, branching_count,
                                    degree_census, max_degree, wp_both, wp_distance, wp_edge)


class TestChemicalTree:
    def test_from_edges_sorts_adjacency(self):
        t = ChemicalTree.from_edges(4, [(2, 1), (0, 1), (3, 1)])
        assert t.order == 4
        assert t.neighbors(1) == (0, 2, 3)
        assert t.edges() == [(0, 1), (1, 2), (1, 3)]
        assert t.degree(1) == 3
        assert t.has_edge(2, 1)
        assert not t.has_edge(0, 2)

    def test_single_vertex(self):
        t = ChemicalTree.from_edges(1, [])
        assert t.edges() == []
        assert wp_edge(t) == 0
        assert wp_distance(t) == 0

    def test_rejects_degree_five(self):
        with pytest.raises(InvalidTreeError):
            ChemicalTree.star(5)

    def test_rejects_cycle(self):
        with pytest.raises(InvalidTreeError):
            ChemicalTree.from_edges(4, [(0, 1), (1, 2), (2, 0)])

    def test_rejects_disconnected_forest_with_right_edge_count(self):
        with pytest.raises(InvalidTreeError):
            ChemicalTree.from_edges(5, [(0, 1), (1, 2), (2, 0), (3, 4)])

    def test_rejects_out_of_range_vertex(self):
        with pytest.raises(InvalidTreeError):
            ChemicalTree.from_edges(3, [(0, 1), (1, 3)])

    def test_rejects_asymmetric_adjacency(self):
        with pytest.raises(InvalidTreeError):
            ChemicalTree(2, [[1], []])

    def test_invalid_tree_error_is_value_error(self):
        assert issubclass(InvalidTreeError, ValueError)

    def test_branch_excludes_root(self, isopentane):
        assert isopentane.branch(1, 2) == [2, 3]
        assert isopentane.branch(2, 1) == [0, 1, 4]

    def test_path_between(self, path7):
        assert path7.path_between(1, 4) == [1, 2, 3, 4]

    def test_with_edges_replaced(self, path7):
        t = path7.with_edges_replaced([(5, 6)], [(2, 6)])
        assert t.degree(2) == 3
        assert wp_edge(t) == wp_distance(t)

    def test_with_edges_replaced_keeps_edge_in_both_sets(self, path7):
        t = path7.with_edges_replaced([(0, 1)], [(0, 1)])
        assert t == path7

    def test_with_edges_replaced_rejects_absent_edge(self, path7):
        with pytest.raises(InvalidTreeError):
            path7.with_edges_replaced([(0, 2)], [(0, 1)])

    def test_relabeled(self, isopentane):
        t = isopentane.relabeled([4, 3, 2, 1, 0])
        assert t.degree(3) == 3
        assert wp_edge(t) == 2

    def test_equality_and_hash(self):
        a = ChemicalTree.from_edges(3, [(0, 1), (1, 2)])
        b = ChemicalTree.path(3)
        assert a == b
        assert len({a, b}) == 1

    def test_pickle_round_trip(self, isopentane):
        clone = pickle.loads(pickle.dumps(isopentane))
        assert clone == isopentane
        assert wp_distance(clone) == 2

    def test_shortest_paths_live_with_the_tree(self, isopentane):
        paths = isopentane.shortest_paths()
        assert isopentane.shortest_paths() is paths
        assert paths[0][3] == [0, 1, 2, 3]
        twin = ChemicalTree.from_edges(5, isopentane.edges())
        assert twin == isopentane
        assert twin.shortest_paths() is not paths
        clone = pickle.loads(pickle.dumps(isopentane))
        assert clone.__getstate__() == isopentane.__getstate__()
        assert clone.path_between(3, 4) == [3, 2, 1, 4]


class TestDegreeCensus:
    def test_path(self, path7):
        census = degree_census(path7)
        assert census.as_tuple() == (2, 5, 0, 0)
        assert census.branching == 0
        assert census.segment_count == 1

    def test_star(self, star4):
        census = degree_census(star4)
        assert census == DegreeCensus(4, 0, 0, 1)
        assert census.segment_count == 4
        assert branching_count(star4) == 1

    def test_isopentane(self, isopentane):
        assert degree_census(isopentane).as_dict() == {'n1': 3, 'n2': 1, 'n3': 1, 'n4': 0}

    def test_single_vertex_yields_zeros(self):
        assert degree_census(ChemicalTree.from_edges(1, [])).as_tuple() == (0, 0, 0, 0)

    def test_realizable(self):
        assert DegreeCensus(4, 0, 0, 1).is_realizable()
        assert DegreeCensus(2, 5, 0, 0).is_realizable()
        assert not DegreeCensus(3, 0, 0, 1).is_realizable()
        assert not DegreeCensus(0, 0, 0, 0).is_realizable()


class TestWienerPolarity:
    def test_path_seven(self, path7):
        assert wp_edge(path7) == 4
        assert wp_distance(path7) == 4

    def test_star(self, star4):
        assert wp_both(star4) == (0, 0)

    def test_isopentane(self, isopentane):
        assert wp_both(isopentane) == (2, 2)

    def test_twin_branch_tree(self, twin_branch_tree):
        assert wp_both(twin_branch_tree) == (5, 5)

    def test_short_paths_have_no_pairs_at_distance_three(self):
        for n in (1, 2, 3):
            assert wp_both(ChemicalTree.path(n)) == (0, 0)
        assert wp_both(ChemicalTree.path(4)) == (1, 1)

    def test_max_degree(self, star4, path7):
        assert max_degree(star4) == 4
        assert max_degree(path7) == 2
