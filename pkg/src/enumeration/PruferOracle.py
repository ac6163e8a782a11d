#!/usr/bin/env python3
"""
Naive enumeration oracle: labeled trees of order n are decoded from their Prüfer
sequences and deduplicated by canonical form. A vertex of degree d occurs d - 1
times in the sequence, so only sequences whose label counts are non-increasing
(labels sorted by decreasing degree) and at most 3 are decoded; every chemical tree
has such a labeling. Exponential in n; meant for cross-checking the level sequence
enumerator at small orders.
"""

import itertools
import logging
from typing import Dict, Iterator, List, Tuple

import networkx as nx

from src.trees.CanonicalForm import CanonicalCode, canonical_form
from src.trees.ChemicalTree import MAX_CHEMICAL_DEGREE, ChemicalTree

logger = logging.getLogger(__name__)


def _count_profiles(total: int, slots: int, cap: int) -> Iterator[Tuple[int, ...]]:
    """Non-increasing tuples of `slots` counts in 0..cap summing to `total`."""
    if slots == 0:
        if total == 0:
            yield ()
        return
    for first in range(min(cap, total), -1, -1):
        if first * slots < total:
            break
        for rest in _count_profiles(total - first, slots - 1, first):
            yield (first,) + rest


def degree_sorted_sequences(n: int) -> Iterator[Tuple[int, ...]]:
    """
    Prüfer sequences of the labeled chemical trees of order n whose vertex degrees
    do not increase with the label.
    """
    for profile in _count_profiles(n - 2, n, MAX_CHEMICAL_DEGREE - 1):
        multiset = [label for label, count in enumerate(profile) for _ in range(count)]
        yield from sorted(set(itertools.permutations(multiset)))


def naive_chemical_trees(n: int) -> List[ChemicalTree]:
    """
    Representatives of all chemical trees of order n, one per isomorphism class.

    Args:
        n: Tree order

    Returns:
        List[ChemicalTree]: Representatives sorted by canonical code
    """
    if n < 1:
        return []
    if n == 1:
        return [ChemicalTree(1, [[]])]
    if n == 2:
        return [ChemicalTree.path(2)]

    representatives: Dict[CanonicalCode, ChemicalTree] = {}
    decoded = 0
    for sequence in degree_sorted_sequences(n):
        graph = nx.from_prufer_sequence(list(sequence))
        tree = ChemicalTree.from_edges(n, graph.edges())
        representatives.setdefault(canonical_form(tree), tree)
        decoded += 1
    logger.debug(f"Decoded {decoded} labeled chemical trees of order {n}, "
                 f"{len(representatives)} classes")
    return [representatives[code] for code in sorted(representatives)]


def naive_count(n: int) -> int:
    return len(naive_chemical_trees(n))
