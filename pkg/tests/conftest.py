import os
import pytest
import tempfile

from src.enumeration.TreeEnumerator import EnumerationQuery, TreeEnumerator
from src.trees.ChemicalTree import ChemicalTree


@pytest.fixture
def path7():
    return ChemicalTree.path(7)


@pytest.fixture
def star4():
    return ChemicalTree.star(4)


@pytest.fixture
def isopentane():
    """2-methylbutane: one degree-3 vertex, W_p = 2."""
    return ChemicalTree.from_edges(5, [(0, 1), (1, 2), (2, 3), (1, 4)])


@pytest.fixture
def twin_branch_tree():
    """Two degree-3 vertices joined by a path of length 3, each with two leaves."""
    return ChemicalTree.from_edges(8, [(0, 1), (1, 2), (2, 3), (0, 4), (0, 5), (3, 6), (3, 7)])


@pytest.fixture
def enumerator():
    return TreeEnumerator(max_order=12)


@pytest.fixture(scope="session")
def trees_by_order():
    """Every chemical tree of orders 1..14, keyed by order."""
    source = TreeEnumerator(max_order=14)
    return {n: list(source.enumerate(EnumerationQuery(n))) for n in range(1, 15)}


@pytest.fixture
def mock_edge_list_file():
    """Temporary edge list file holding P7."""
    with tempfile.NamedTemporaryFile(mode='w', delete=False, suffix='.txt') as temp:
        temp.write("# path on 7 vertices\n")
        temp.write("7\n")
        for i in range(6):
            temp.write(f"{i} {i + 1}\n")
        temp_path = temp.name

    yield temp_path
    os.unlink(temp_path)


@pytest.fixture
def output_path():
    """Path of a not yet existing temporary file, removed afterwards."""
    handle, path = tempfile.mkstemp(suffix='.out')
    os.close(handle)
    os.unlink(path)
    yield path
    if os.path.exists(path):
        os.unlink(path)
