#!/usr/bin/env python3
"""
Edge Type Census

x[i, j] counts the edges whose end vertices have degrees i and j (i <= j). The census
is kept as an upper triangular integer matrix indexed by degree, so the Wiener
polarity index is the sum of the census weighted by (i - 1)(j - 1).
"""

from typing import Dict, Iterator, Mapping, Tuple

import numpy as np

from src.trees.ChemicalTree import MAX_CHEMICAL_DEGREE, ChemicalTree, DegreeCensus

_SIZE = MAX_CHEMICAL_DEGREE + 1
_DEGREES = np.arange(_SIZE)
WEIGHTS = np.outer(_DEGREES - 1, _DEGREES - 1)
WEIGHTS[0, :] = 0
WEIGHTS[:, 0] = 0


class EdgeTypeCensus:
    """
    Counts x_{i,j} of edges by end degree pair, 1 <= i <= j <= 4.
    """

    def __init__(self, counts: Mapping[Tuple[int, int], int] = None):
        self._matrix = np.zeros((_SIZE, _SIZE), dtype=np.int64)
        for (i, j), value in (counts or {}).items():
            self[i, j] = value

    @staticmethod
    def _key(i: int, j: int) -> Tuple[int, int]:
        if not (1 <= i <= MAX_CHEMICAL_DEGREE and 1 <= j <= MAX_CHEMICAL_DEGREE):
            raise KeyError(f"degree pair ({i}, {j}) outside 1..{MAX_CHEMICAL_DEGREE}")
        return (i, j) if i <= j else (j, i)

    def __getitem__(self, pair: Tuple[int, int]) -> int:
        return int(self._matrix[self._key(*pair)])

    def __setitem__(self, pair: Tuple[int, int], value: int) -> None:
        self._matrix[self._key(*pair)] = value

    def __eq__(self, other):
        if not isinstance(other, EdgeTypeCensus):
            return NotImplemented
        return bool(np.array_equal(self._matrix, other._matrix))

    def __repr__(self):
        return f"EdgeTypeCensus({self.as_dict()})"

    @property
    def matrix(self) -> np.ndarray:
        return self._matrix.copy()

    def items(self) -> Iterator[Tuple[Tuple[int, int], int]]:
        for i in range(1, _SIZE):
            for j in range(i, _SIZE):
                yield (i, j), int(self._matrix[i, j])

    def as_dict(self, nonzero: bool = True) -> Dict[str, int]:
        """Census keyed 'x12', 'x24', ...; zero entries dropped unless nonzero=False."""
        return {f"x{i}{j}": value for (i, j), value in self.items() if value or not nonzero}

    def edge_count(self) -> int:
        return int(np.triu(self._matrix).sum())

    def incidences(self) -> np.ndarray:
        """
        Edge ends at vertices of each degree: entry d equals d * n_d for a consistent
        census.
        """
        upper = np.triu(self._matrix)
        return upper.sum(axis=0) + upper.sum(axis=1)

    def is_consistent_with(self, census: DegreeCensus) -> bool:
        expected = np.array([0, census.n1, 2 * census.n2, 3 * census.n3, 4 * census.n4])
        return self.edge_count() == census.order - 1 and bool(np.array_equal(self.incidences(), expected))

    def with_pendent_edges(self, census: DegreeCensus) -> 'EdgeTypeCensus':
        """
        Fill in x_{1,d} from a census of the edges between non-leaf vertices.

        Every edge end at a degree-d vertex not used by those edges goes to a leaf.
        """
        completed = EdgeTypeCensus()
        completed._matrix = self._matrix.copy()
        used = self.incidences()
        degree_ends = [0, census.n1, 2 * census.n2, 3 * census.n3, 4 * census.n4]
        for d in range(2, _SIZE):
            completed[1, d] = degree_ends[d] - int(used[d])
        if census.order == 2:
            completed[1, 1] = 1
        return completed


def edge_type_census(t: ChemicalTree) -> EdgeTypeCensus:
    """Measured edge type census of a tree."""
    census = EdgeTypeCensus()
    degrees = t.degrees()
    for u, v in t.edges():
        key = EdgeTypeCensus._key(degrees[u], degrees[v])
        census._matrix[key] += 1
    return census


def wp_from_census(c: EdgeTypeCensus) -> int:
    """Sum of x_{i,j} (i - 1)(j - 1)."""
    return int((np.triu(c.matrix) * WEIGHTS).sum())
