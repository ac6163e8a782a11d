import pytest
import pandas as pd
from src.enumeration.ExtremalTable import COLUMNS, ExtremalTable, extremal_table, tree_records
from src.enumeration.TreeEnumerator import EnumerationQueryError
from src.trees.CanonicalForm import parse_code, tree_from_level_sequence
from src.trees.ChemicalTree import wp_edge


@pytest.fixture(scope="module")
def b_table():
    return extremal_table(7, 12, 'b')


@pytest.fixture(scope="module")
def k_table():
    return extremal_table(7, 11, 'k')


class TestTreeRecords:
    def test_records_of_order_seven(self, enumerator):
        records = list(tree_records(7, enumerator))
        assert len(records) == 9
        path = [r for r in records if r.b == 0]
        assert len(path) == 1
        assert path[0].wp == 4
        assert path[0].k == 1
        assert path[0].constraint_value('k') == 1


class TestExtremalTable:
    def test_columns(self, b_table):
        assert list(b_table.frame.columns) == COLUMNS

    def test_max_for_branching(self, b_table):
        assert b_table.lookup(10, 1)['max_wp'] == 13
        assert b_table.lookup(10, 2)['max_wp'] == 15
        assert b_table.lookup(10, 3)['max_wp'] == 15
        assert b_table.lookup(12, 1)['max_wp'] == 15
        assert b_table.lookup(12, 2)['max_wp'] == 21

    def test_min_for_branching(self, b_table):
        assert b_table.lookup(10, 3)['min_wp'] == 8
        assert b_table.lookup(7, 2)['min_wp'] == 4
        assert b_table.lookup(9, 2)['min_wp'] == 6
        assert b_table.lookup(7, 1)['min_wp'] == 4

    def test_max_for_segments(self, k_table):
        assert k_table.lookup(10, 4)['max_wp'] == 13
        assert k_table.lookup(11, 6)['max_wp'] == 17

    def test_path_row(self, b_table):
        row = b_table.lookup(7, 0)
        assert row == {'n': 7, 'constraint': 'b', 'value': 0, 'min_wp': 4, 'max_wp': 4,
                       'min_code': '0 1 2 3 1 2 3', 'max_code': '0 1 2 3 1 2 3', 'class_size': 1}

    def test_witness_codes_attain_extremes(self, b_table):
        row = b_table.lookup(11, 3)
        assert wp_edge(tree_from_level_sequence(parse_code(row['max_code']))) == row['max_wp']
        assert wp_edge(tree_from_level_sequence(parse_code(row['min_code']))) == row['min_wp']

    def test_unrealized_class(self, b_table):
        assert b_table.lookup(7, 3) is None

    def test_class_sizes_sum_to_tree_count(self, b_table):
        assert sum(b_table.lookup(n, b)['class_size'] for n, b in b_table.keys() if n == 10) == 75

    def test_keys_sorted(self, k_table):
        keys = k_table.keys()
        assert keys == sorted(keys)
        assert len(k_table) == len(keys)

    def test_rejects_bad_range(self):
        with pytest.raises(EnumerationQueryError):
            extremal_table(8, 7, 'b')

    def test_rejects_unknown_constraint(self):
        with pytest.raises(EnumerationQueryError):
            extremal_table(7, 8, 'x')
        with pytest.raises(EnumerationQueryError):
            ExtremalTable("x", pd.DataFrame([], columns=COLUMNS))
