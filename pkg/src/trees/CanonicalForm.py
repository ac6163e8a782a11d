#!/usr/bin/env python3
"""
Canonical Form for Free Trees

The code of a tree is its rooted level sequence at a center, with the subtrees of
every vertex ordered so that the sequence is lexicographically maximal. Bicentral
trees are encoded from both centers and the larger code is kept, so two trees share a
code exactly when they are isomorphic.
"""

from typing import Dict, List, Tuple

import networkx as nx

from src.trees.ChemicalTree import ChemicalTree

CanonicalCode = Tuple[int, ...]


def rooted_level_sequence(t: ChemicalTree, root: int) -> CanonicalCode:
    """
    Maximal level sequence of the tree rooted at `root`.

    Args:
        t: A chemical tree
        root: Vertex used as the root (depth 0)

    Returns:
        CanonicalCode: Depths of the vertices in preorder
    """
    graph = t.to_networkx()
    depth: Dict[int, int] = {root: 0}
    order: List[int] = [root]
    children: Dict[int, List[int]] = {root: []}
    for parent, child in nx.bfs_edges(graph, root):
        depth[child] = depth[parent] + 1
        children[child] = []
        children[parent].append(child)
        order.append(child)

    encoded: Dict[int, CanonicalCode] = {}
    for v in reversed(order):
        parts = sorted((encoded.pop(c) for c in children[v]), reverse=True)
        code = [depth[v]]
        for part in parts:
            code.extend(part)
        encoded[v] = tuple(code)
    return encoded[root]


def canonical_form(t: ChemicalTree) -> CanonicalCode:
    """
    Relabeling invariant code of a free tree.

    Returns:
        CanonicalCode: The larger of the level sequences rooted at the tree's centers
    """
    if t.order == 1:
        return (0,)
    centers = nx.center(t.to_networkx())
    return max(rooted_level_sequence(t, c) for c in centers)


def tree_from_level_sequence(code: CanonicalCode) -> ChemicalTree:
    """
    Rebuild a tree from a level sequence; vertex i is the i-th entry of the sequence.

    Raises:
        InvalidTreeError: If the rebuilt tree has a vertex of degree above 4
    """
    edges = []
    last_at_depth: Dict[int, int] = {}
    for v, level in enumerate(code):
        if level > 0:
            edges.append((last_at_depth[level - 1], v))
        last_at_depth[level] = v
    return ChemicalTree.from_edges(len(code), edges)


def are_isomorphic(a: ChemicalTree, b: ChemicalTree) -> bool:
    return a.order == b.order and canonical_form(a) == canonical_form(b)


def format_code(code: CanonicalCode) -> str:
    return ' '.join(str(level) for level in code)


def parse_code(text: str) -> CanonicalCode:
    return tuple(int(level) for level in text.split())
