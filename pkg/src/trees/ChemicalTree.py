#!/usr/bin/env python3
"""
Chemical Tree Representation

This module provides the immutable tree value used by every other part of the
package, together with the degree based queries (degree census, branching count)
and both definitions of the Wiener polarity index.
"""

import logging
from collections import deque
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

logger = logging.getLogger(__name__)

MAX_CHEMICAL_DEGREE = 4


class InvalidTreeError(ValueError):
    """Raised when an edge set does not describe a chemical tree."""


@dataclass(frozen=True)
class DegreeCensus:
    """Counts of vertices of degree 1, 2, 3 and 4."""

    n1: int
    n2: int
    n3: int
    n4: int

    @property
    def order(self) -> int:
        return self.n1 + self.n2 + self.n3 + self.n4

    @property
    def branching(self) -> int:
        return self.n3 + self.n4

    @property
    def segment_count(self) -> int:
        return self.n1 + self.n3 + self.n4 - 1

    def is_realizable(self) -> bool:
        """
        Check the handshake condition for a tree of this census.

        Returns:
            bool: True if the degree sum equals 2(n-1) and every count is non-negative
        """
        counts = (self.n1, self.n2, self.n3, self.n4)
        if any(c < 0 for c in counts) or self.order == 0:
            return False
        degree_sum = self.n1 + 2 * self.n2 + 3 * self.n3 + 4 * self.n4
        return degree_sum == 2 * (self.order - 1)

    def as_tuple(self) -> Tuple[int, int, int, int]:
        return (self.n1, self.n2, self.n3, self.n4)

    def as_dict(self) -> Dict[str, int]:
        return {'n1': self.n1, 'n2': self.n2, 'n3': self.n3, 'n4': self.n4}


class ChemicalTree:
    """
    Class representing a labeled tree with maximum degree at most 4.

    Vertices are the integers 0..n-1 and the adjacency of every vertex is kept as a
    sorted tuple. Instances are immutable; rewrites build new trees.
    """

    __slots__ = ('_order', '_adjacency', '_graph', '_paths')

    def __init__(self, order: int, adjacency: Sequence[Sequence[int]]):
        """
        Initialize a ChemicalTree from an adjacency structure.

        Args:
            order: Number of vertices
            adjacency: For each vertex, the labels of its neighbors

        Raises:
            InvalidTreeError: If the structure is not a tree or a degree exceeds 4
        """
        if order < 1:
            raise InvalidTreeError(f"tree order must be positive, got {order}")
        if len(adjacency) != order:
            raise InvalidTreeError(f"adjacency lists {len(adjacency)} vertices, expected {order}")
        self._order = order
        self._adjacency = tuple(tuple(sorted(nbrs)) for nbrs in adjacency)
        self._graph = None
        self._paths = None
        self._validate()

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[Tuple[int, int]]) -> 'ChemicalTree':
        """
        Build a tree from an edge list.

        Args:
            order: Number of vertices
            edges: Iterable of (u, v) pairs with 0 <= u, v < order

        Returns:
            ChemicalTree: The validated tree
        """
        adjacency: List[List[int]] = [[] for _ in range(order)]
        for u, v in edges:
            if not (0 <= u < order and 0 <= v < order):
                raise InvalidTreeError(f"edge ({u}, {v}) has a vertex outside 0..{order - 1}")
            adjacency[u].append(v)
            adjacency[v].append(u)
        return cls(order, adjacency)

    @classmethod
    def path(cls, order: int) -> 'ChemicalTree':
        return cls.from_edges(order, [(i, i + 1) for i in range(order - 1)])

    @classmethod
    def star(cls, leaves: int) -> 'ChemicalTree':
        return cls.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])

    def _validate(self) -> None:
        n = self._order
        edge_ends = 0
        for u, nbrs in enumerate(self._adjacency):
            if len(set(nbrs)) != len(nbrs):
                raise InvalidTreeError(f"vertex {u} has a repeated neighbor")
            for v in nbrs:
                if not 0 <= v < n:
                    raise InvalidTreeError(f"vertex {u} has neighbor {v} outside 0..{n - 1}")
                if v == u:
                    raise InvalidTreeError(f"vertex {u} has a loop")
                if u not in self._adjacency[v]:
                    raise InvalidTreeError(f"edge ({u}, {v}) is not stored symmetrically")
            if len(nbrs) > MAX_CHEMICAL_DEGREE:
                raise InvalidTreeError(f"vertex {u} has degree {len(nbrs)} > {MAX_CHEMICAL_DEGREE}")
            edge_ends += len(nbrs)
        if edge_ends != 2 * (n - 1):
            raise InvalidTreeError(f"a tree on {n} vertices has {n - 1} edges, got {edge_ends // 2}")
        if n > 1 and not nx.is_connected(self.to_networkx()):
            raise InvalidTreeError("edge set is not connected")

    @property
    def order(self) -> int:
        return self._order

    @property
    def adjacency(self) -> Tuple[Tuple[int, ...], ...]:
        return self._adjacency

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self._adjacency[v]

    def degree(self, v: int) -> int:
        return len(self._adjacency[v])

    def degrees(self) -> List[int]:
        return [len(nbrs) for nbrs in self._adjacency]

    def edges(self) -> List[Tuple[int, int]]:
        """Edges as (u, v) with u < v, sorted."""
        return [(u, v) for u, nbrs in enumerate(self._adjacency) for v in nbrs if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adjacency[u]

    def to_networkx(self) -> nx.Graph:
        """
        Get the tree as a NetworkX graph. The graph is built once and cached.

        Returns:
            nx.Graph: Graph on nodes 0..n-1
        """
        if self._graph is None:
            graph = nx.Graph()
            graph.add_nodes_from(range(self._order))
            graph.add_edges_from(self.edges())
            self._graph = graph
        return self._graph

    def branch(self, root: int, via: int) -> List[int]:
        """
        Vertices reachable from `via` without passing through `root`.

        Args:
            root: The vertex the branch hangs from
            via: A neighbor of root

        Returns:
            List[int]: Sorted vertex labels of the branch, `via` included
        """
        seen = {root, via}
        queue = deque([via])
        while queue:
            x = queue.popleft()
            for y in self._adjacency[x]:
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        seen.discard(root)
        return sorted(seen)

    def shortest_paths(self) -> Dict[int, Dict[int, List[int]]]:
        """All-pairs vertex paths, computed on first use and kept with the tree."""
        if self._paths is None:
            self._paths = dict(nx.all_pairs_shortest_path(self.to_networkx()))
        return self._paths

    def path_between(self, source: int, target: int) -> List[int]:
        return self.shortest_paths()[source][target]

    def with_edges_replaced(self, removed: Iterable[Tuple[int, int]],
                            added: Iterable[Tuple[int, int]]) -> 'ChemicalTree':
        """
        Build the tree (E - removed) + added on the same vertex set.

        An edge listed in both sets stays in the result.

        Raises:
            InvalidTreeError: If the result is not a chemical tree
        """
        edges = {frozenset(e) for e in self.edges()}
        drop = {frozenset(e) for e in removed}
        missing = drop - edges
        if missing:
            raise InvalidTreeError(f"cannot remove absent edges {sorted(tuple(sorted(e)) for e in missing)}")
        result = (edges - drop) | {frozenset(e) for e in added}
        return ChemicalTree.from_edges(self._order, (tuple(e) for e in result))

    def relabeled(self, permutation: Sequence[int]) -> 'ChemicalTree':
        """Copy of the tree with vertex v renamed permutation[v]."""
        return ChemicalTree.from_edges(self._order,
                                       ((permutation[u], permutation[v]) for u, v in self.edges()))

    def __eq__(self, other):
        if not isinstance(other, ChemicalTree):
            return NotImplemented
        return self._adjacency == other._adjacency

    def __hash__(self):
        return hash(self._adjacency)

    def __getstate__(self):
        return (self._order, self._adjacency)

    def __setstate__(self, state):
        self._order, self._adjacency = state
        self._graph = None
        self._paths = None

    def __repr__(self):
        return f"ChemicalTree(order={self._order}, edges={self.edges()})"


def degree_census(t: ChemicalTree) -> DegreeCensus:
    """
    Count the vertices of each degree.

    Args:
        t: A chemical tree

    Returns:
        DegreeCensus: Counts n1..n4; the one-vertex tree has no degree class and yields zeros
    """
    counts = [0] * (MAX_CHEMICAL_DEGREE + 1)
    for d in t.degrees():
        counts[d] += 1
    return DegreeCensus(counts[1], counts[2], counts[3], counts[4])


def branching_count(t: ChemicalTree) -> int:
    return degree_census(t).branching


def wp_edge(t: ChemicalTree) -> int:
    """
    Wiener polarity index by the edge formula: sum over edges of (d_u - 1)(d_v - 1).
    """
    degrees = t.degrees()
    return sum((degrees[u] - 1) * (degrees[v] - 1) for u, v in t.edges())


def wp_distance(t: ChemicalTree) -> int:
    """
    Wiener polarity index as the number of unordered vertex pairs at distance 3.

    A breadth-first search truncated at depth 3 runs from every vertex; each pair is
    seen from both ends.
    """
    graph = t.to_networkx()
    ordered_pairs = 0
    for v in range(t.order):
        lengths = nx.single_source_shortest_path_length(graph, v, cutoff=3)
        ordered_pairs += sum(1 for d in lengths.values() if d == 3)
    return ordered_pairs // 2


def wp_both(t: ChemicalTree) -> Tuple[int, int]:
    return wp_edge(t), wp_distance(t)


def max_degree(t: ChemicalTree) -> Optional[int]:
    degrees = t.degrees()
    return max(degrees) if degrees else None
