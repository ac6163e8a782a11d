#!/usr/bin/env python3
"""
Edge List Document

Plain text tree format: the first line holds the order n, each of the following n - 1
lines holds one edge "u v" with 0 <= u < v < n. Lines end with LF. Blank lines and
lines starting with '#' are skipped on input.
"""

import logging
from typing import List, Tuple

import networkx as nx

from src.trees.ChemicalTree import MAX_CHEMICAL_DEGREE, ChemicalTree

logger = logging.getLogger(__name__)


class EdgeListError(ValueError):
    """Base class for rejected edge list documents."""


class MalformedLineError(EdgeListError):
    pass


class VertexOutOfRangeError(EdgeListError):
    pass


class DuplicateEdgeError(EdgeListError):
    pass


class NotATreeError(EdgeListError):
    """Raised for a disconnected or cyclic edge set, or a wrong number of edges."""


class DegreeBoundError(EdgeListError):
    pass


def _content_lines(text: str) -> List[Tuple[int, str]]:
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith('#'):
            lines.append((number, line))
    return lines


def parse_edge_list(text: str) -> ChemicalTree:
    """
    Parse an edge list document.

    Args:
        text: Document text

    Returns:
        ChemicalTree: The tree described by the document

    Raises:
        MalformedLineError: A line is not an integer (header) or a pair of integers
        VertexOutOfRangeError: An edge names a vertex outside 0..n-1
        DuplicateEdgeError: An edge appears twice, or is a loop
        NotATreeError: The edges do not form a tree on n vertices
        DegreeBoundError: A vertex has degree above 4
    """
    lines = _content_lines(text)
    if not lines:
        raise MalformedLineError("empty document, expected the vertex count on the first line")
    number, header = lines[0]
    try:
        n = int(header)
    except ValueError:
        raise MalformedLineError(f"line {number}: expected the vertex count, got {header!r}")
    if n < 1:
        raise MalformedLineError(f"line {number}: vertex count must be positive, got {n}")

    edges = []
    seen = set()
    for number, line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise MalformedLineError(f"line {number}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise MalformedLineError(f"line {number}: vertex labels must be integers, got {line!r}")
        for vertex in (u, v):
            if not 0 <= vertex < n:
                raise VertexOutOfRangeError(f"line {number}: vertex {vertex} outside 0..{n - 1}")
        key = frozenset((u, v))
        if u == v or key in seen:
            raise DuplicateEdgeError(f"line {number}: edge ({u}, {v}) repeated or a loop")
        seen.add(key)
        edges.append((u, v))

    graph = nx.Graph()
    graph.add_nodes_from(range(n))
    graph.add_edges_from(edges)
    if len(edges) != n - 1 or not nx.is_tree(graph):
        raise NotATreeError(f"{len(edges)} edges on {n} vertices do not form a tree")
    heavy = [v for v, d in graph.degree() if d > MAX_CHEMICAL_DEGREE]
    if heavy:
        raise DegreeBoundError(f"vertices {heavy} have degree above {MAX_CHEMICAL_DEGREE}")
    return ChemicalTree.from_edges(n, edges)


def serialize_edge_list(t: ChemicalTree) -> str:
    """Edge list document of a tree, edges sorted, LF terminated."""
    lines = [str(t.order)] + [f"{u} {v}" for u, v in t.edges()]
    return '\n'.join(lines) + '\n'


def compact_edges(t: ChemicalTree) -> str:
    """Single line form 'u-v u-v ...' used inside report cells."""
    return ' '.join(f"{u}-{v}" for u, v in t.edges())


def read_edge_list(path: str) -> ChemicalTree:
    with open(path, 'r', encoding='utf-8') as f:
        return parse_edge_list(f.read())


def write_edge_list(t: ChemicalTree, path: str) -> None:
    with open(path, 'w', encoding='utf-8', newline='\n') as f:
        f.write(serialize_edge_list(t))
    logger.info(f"Wrote tree of order {t.order} to {path}")
