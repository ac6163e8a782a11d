#!/usr/bin/env python3
"""
Segment and Path Structure

Segments are the maximal paths whose end vertices have degree other than 2 and whose
inner vertices all have degree 2. A segment with a leaf at one end and a branching
vertex at the other is a pendent path; one with branching vertices at both ends is an
internal path.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Tuple

from src.trees.ChemicalTree import ChemicalTree

logger = logging.getLogger(__name__)

PENDENT = 'pendent'
INTERNAL = 'internal'
NEITHER = 'neither'


class ClassificationError(ValueError):
    """Raised when path classification is requested for a tree without branching vertices."""


@dataclass(frozen=True)
class Segment:
    vertices: Tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def ends(self) -> Tuple[int, int]:
        return self.vertices[0], self.vertices[-1]

    def edges(self) -> List[Tuple[int, int]]:
        return [tuple(sorted(pair)) for pair in zip(self.vertices, self.vertices[1:])]


@dataclass(frozen=True)
class PathClassification:
    kind: str
    length: int
    segment: Segment


def segments(t: ChemicalTree) -> List[Segment]:
    """
    Split the edge set of a tree into its segments.

    Walks start at every vertex of degree other than 2 and follow degree-2 vertices until
    the next such vertex; each segment is found from both ends and kept once, oriented
    so the smaller end label comes first.

    Args:
        t: A chemical tree with at least two vertices

    Returns:
        List[Segment]: Segments sorted by their vertex tuples
    """
    if t.order < 2:
        return []
    found = set()
    for start in range(t.order):
        if t.degree(start) == 2:
            continue
        for first in t.neighbors(start):
            walk = [start, first]
            while t.degree(walk[-1]) == 2:
                a, b = t.neighbors(walk[-1])
                walk.append(b if a == walk[-2] else a)
            if walk[0] > walk[-1]:
                walk.reverse()
            found.add(tuple(walk))
    return [Segment(vertices) for vertices in sorted(found)]


def segment_count(t: ChemicalTree) -> int:
    return len(segments(t))


def classify_paths(t: ChemicalTree) -> List[PathClassification]:
    """
    Classify every segment as a pendent or internal path.

    Raises:
        ClassificationError: If the tree has no branching vertex
    """
    degrees = t.degrees()
    if not any(d >= 3 for d in degrees):
        raise ClassificationError(f"tree of order {t.order} has no branching vertex")
    result = []
    for seg in segments(t):
        a, b = seg.ends
        branching_ends = (degrees[a] >= 3) + (degrees[b] >= 3)
        kind = INTERNAL if branching_ends == 2 else PENDENT if branching_ends == 1 else NEITHER
        result.append(PathClassification(kind, seg.length, seg))
    return result


def pendent_path_lengths(t: ChemicalTree) -> List[int]:
    return sorted(p.length for p in classify_paths(t) if p.kind == PENDENT)


def internal_path_lengths(t: ChemicalTree) -> List[int]:
    return sorted(p.length for p in classify_paths(t) if p.kind == INTERNAL)


def has_long_internal_path(t: ChemicalTree, longer_than: int = 1) -> bool:
    """True if some internal path has more than `longer_than` edges."""
    if not any(d >= 3 for d in t.degrees()):
        return False
    return any(length > longer_than for length in internal_path_lengths(t))


def short_internal_if_adjacent(t: ChemicalTree) -> bool:
    """
    False only when the tree has an internal path of length 1 together with an
    internal path longer than 2.
    """
    if not any(d >= 3 for d in t.degrees()):
        return True
    lengths = internal_path_lengths(t)
    return 1 not in lengths or max(lengths) <= 2


def path_summary(t: ChemicalTree) -> Dict[str, int]:
    """Counts and extreme lengths of pendent and internal paths, zeros for a path graph."""
    if not any(d >= 3 for d in t.degrees()):
        return {'pendent': 0, 'internal': 0, 'max_pendent': 0, 'max_internal': 0}
    pendent = pendent_path_lengths(t)
    internal = internal_path_lengths(t)
    return {
        'pendent': len(pendent),
        'internal': len(internal),
        'max_pendent': max(pendent, default=0),
        'max_internal': max(internal, default=0),
    }
