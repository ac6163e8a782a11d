#!/usr/bin/env python3
"""
Chemical Tree Enumerator

This module generates every chemical tree of a given order exactly once, up to
isomorphism. Free trees are produced as canonical level sequences with the Beyer and
Hedetniemi successor step for rooted trees and the Wright, Richmond, Odlyzko and McKay
rejection of non-canonical rootings. The degree bound is applied while the
sequences are built: a prefix that gives a vertex a fifth neighbor is skipped with
every sequence extending it.
"""

import logging
from dataclasses import dataclass
from typing import Iterator, List, Optional, Set, Tuple

from src.trees.ChemicalTree import MAX_CHEMICAL_DEGREE, ChemicalTree

logger = logging.getLogger(__name__)

DEFAULT_MAX_ORDER = 18
CONSTRAINTS = ('b', 'k')


class EnumerationQueryError(ValueError):
    """Raised for an enumeration query that cannot be answered."""


@dataclass(frozen=True)
class EnumerationQuery:
    """
    Enumeration request: tree order, an optional filter on the branching count `b`
    or the segment count `k`, and an optional cap on the number of trees yielded.
    """

    n: int
    b: Optional[int] = None
    k: Optional[int] = None
    limit: Optional[int] = None

    def __post_init__(self):
        if self.n < 1:
            raise EnumerationQueryError(f"order must be at least 1, got {self.n}")
        if self.b is not None and self.k is not None:
            raise EnumerationQueryError("at most one of b and k may be set")
        if self.b is not None and self.b < 0:
            raise EnumerationQueryError(f"b must be non-negative, got {self.b}")
        if self.k is not None and self.k < 1:
            raise EnumerationQueryError(f"k must be positive, got {self.k}")
        if self.limit is not None and self.limit < 0:
            raise EnumerationQueryError(f"limit must be non-negative, got {self.limit}")


def _next_rooted_tree(predecessor: List[int], p: Optional[int] = None) -> Optional[List[int]]:
    """One successor step on rooted level sequences."""
    if p is None:
        p = len(predecessor) - 1
        while predecessor[p] == 1:
            p -= 1
    if p == 0:
        return None

    q = p - 1
    while predecessor[q] != predecessor[p] - 1:
        q -= 1
    result = list(predecessor)
    for i in range(p, len(result)):
        result[i] = result[i - p + q]
    return result


def _split_tree(layout: List[int]) -> Tuple[List[int], List[int]]:
    """Split a layout into the first subtree of the root and the remainder."""
    m = len(layout)
    ones = 0
    for i, level in enumerate(layout):
        if level == 1:
            ones += 1
            if ones == 2:
                m = i
                break
    left = [level - 1 for level in layout[1:m]]
    rest = [0] + layout[m:]
    return left, rest


def _next_tree(candidate: List[int]) -> Optional[List[int]]:
    """Advance to the next layout that is the canonical rooting of a free tree."""
    left, rest = _split_tree(candidate)
    left_height = max(left)
    rest_height = max(rest)
    valid = rest_height >= left_height
    if valid and rest_height == left_height:
        if len(left) > len(rest):
            valid = False
        elif len(left) == len(rest) and left > rest:
            valid = False

    if valid:
        return candidate

    p = len(left)
    new_candidate = _next_rooted_tree(candidate, p)
    if candidate[p] > 2:
        new_left, _ = _split_tree(new_candidate)
        suffix = range(1, max(new_left) + 2)
        new_candidate[-len(suffix):] = suffix
    return new_candidate


def _layout_parents(layout: List[int]) -> List[int]:
    """Parent of every vertex of a level sequence, -1 for the root."""
    parents = [-1] * len(layout)
    stack: List[int] = []
    for i, level in enumerate(layout):
        while stack and layout[stack[-1]] >= level:
            stack.pop()
        if stack:
            parents[i] = stack[-1]
        stack.append(i)
    return parents


def _first_excess_child(layout: List[int], max_degree: int) -> Optional[int]:
    """Position of the first vertex that pushes its parent above `max_degree`, or None."""
    children = [0] * len(layout)
    stack: List[int] = []
    for i, level in enumerate(layout):
        while stack and layout[stack[-1]] >= level:
            stack.pop()
        if stack:
            parent = stack[-1]
            children[parent] += 1
            # the root has no parent edge
            limit = max_degree if parent == 0 else max_degree - 1
            if children[parent] > limit:
                return i
        stack.append(i)
    return None


def _skip_prefix(layout: List[int], p: int) -> Optional[List[int]]:
    """
    First rooted layout after every layout sharing layout[:p + 1]: the smallest of
    them ends in root children, and one successor step leaves the block.
    """
    return _next_rooted_tree(layout[:p + 1] + [1] * (len(layout) - p - 1))


def free_tree_layouts(order: int, max_degree: Optional[int] = None) -> Iterator[List[int]]:
    """
    Yield one level sequence per isomorphism class of free trees of `order` vertices.

    With `max_degree` set, a layout whose prefix already gives some vertex too many
    neighbors is never completed: the successor jumps past every layout with that
    prefix.
    """
    if order < 1:
        return
    if order == 1:
        yield [0]
        return
    skipped = 0
    # start at the path graph rooted at its center
    layout = list(range(order // 2 + 1)) + list(range(1, (order + 1) // 2))
    while layout is not None:
        layout = _next_tree(layout)
        if layout is None:
            break
        excess = _first_excess_child(layout, max_degree) if max_degree is not None else None
        if excess is None:
            yield layout
            layout = _next_rooted_tree(layout)
        else:
            skipped += 1
            layout = _skip_prefix(layout, excess)
    logger.debug(f"order {order}: {skipped} prefixes pruned on degree above {max_degree}")


class TreeEnumerator:
    """
    Streams the chemical trees of an order, optionally filtered by the number of
    branching vertices or the number of segments.
    """

    def __init__(self, max_order: int = DEFAULT_MAX_ORDER):
        """
        Args:
            max_order: Largest order the enumerator accepts
        """
        self.max_order = max_order

    def _check_order(self, n: int) -> None:
        if n > self.max_order:
            raise EnumerationQueryError(
                f"order {n} exceeds the enumeration ceiling {self.max_order}")

    def chemical_layouts(self, n: int) -> Iterator[Tuple[List[int], List[int]]]:
        """
        Yield (parents, degrees) for every chemical tree layout of order n.
        """
        self._check_order(n)
        for layout in free_tree_layouts(n, MAX_CHEMICAL_DEGREE):
            parents = _layout_parents(layout)
            degrees = [0] * n
            for child, parent in enumerate(parents):
                if parent >= 0:
                    degrees[child] += 1
                    degrees[parent] += 1
            yield parents, degrees

    def enumerate(self, query: EnumerationQuery) -> Iterator[ChemicalTree]:
        """
        Stream the trees matching a query, in a fixed order.

        Args:
            query: The enumeration request

        Yields:
            ChemicalTree: One representative per isomorphism class
        """
        logger.debug(f"Enumerating chemical trees for {query}")
        produced = 0
        for parents, degrees in self.chemical_layouts(query.n):
            if query.limit is not None and produced >= query.limit:
                return
            if query.b is not None and _branching(degrees) != query.b:
                continue
            if query.k is not None and _segment_count(degrees) != query.k:
                continue
            produced += 1
            yield ChemicalTree.from_edges(
                query.n, ((child, parent) for child, parent in enumerate(parents) if parent >= 0))

    def count(self, query: EnumerationQuery) -> int:
        return sum(1 for _ in self.enumerate(query))

    def realizable_values(self, n: int, constraint: str) -> Set[int]:
        """
        Values of b or k carried by at least one chemical tree of order n.

        Args:
            n: Tree order
            constraint: 'b' or 'k'

        Returns:
            Set[int]: Realized constraint values, read off the enumeration
        """
        measure = _constraint_measure(constraint)
        return {measure(degrees) for _, degrees in self.chemical_layouts(n)}


def _branching(degrees: List[int]) -> int:
    return sum(1 for d in degrees if d >= 3)


def _segment_count(degrees: List[int]) -> int:
    if len(degrees) < 2:
        return 0
    return sum(1 for d in degrees if d != 2) - 1


def _constraint_measure(constraint: str):
    if constraint == 'b':
        return _branching
    if constraint == 'k':
        return _segment_count
    raise EnumerationQueryError(f"constraint must be one of {CONSTRAINTS}, got {constraint!r}")


def enumerate_chemical_trees(query: EnumerationQuery) -> Iterator[ChemicalTree]:
    return TreeEnumerator().enumerate(query)


def realizable_values(n: int, constraint: str) -> Set[int]:
    return TreeEnumerator().realizable_values(n, constraint)
