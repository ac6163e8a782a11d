#!/usr/bin/env python3
"""
Extremal Table

Exact minimum and maximum Wiener polarity index of every class of chemical trees of
order n with a fixed number of branching vertices (b) or segments (k), read off the
exhaustive enumeration, together with one witness per extreme.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Iterator, Optional, Tuple

import pandas as pd

from src.enumeration.TreeEnumerator import CONSTRAINTS, EnumerationQuery, EnumerationQueryError, TreeEnumerator
from src.trees.CanonicalForm import canonical_form, format_code
from src.trees.ChemicalTree import ChemicalTree, degree_census, wp_edge

logger = logging.getLogger(__name__)

COLUMNS = ['n', 'constraint', 'value', 'min_wp', 'max_wp', 'min_code', 'max_code', 'class_size']


@dataclass(frozen=True)
class TreeRecord:
    """A tree with the quantities every campaign groups or ranks it by."""

    tree: ChemicalTree
    wp: int
    b: int
    k: int

    def constraint_value(self, constraint: str) -> int:
        return self.b if constraint == 'b' else self.k


def tree_records(n: int, enumerator: Optional[TreeEnumerator] = None) -> Iterator[TreeRecord]:
    """Stream a TreeRecord for every chemical tree of order n."""
    enumerator = enumerator or TreeEnumerator()
    for tree in enumerator.enumerate(EnumerationQuery(n)):
        census = degree_census(tree)
        k = census.segment_count if n >= 2 else 0
        yield TreeRecord(tree, wp_edge(tree), census.branching, k)


class ExtremalTable:
    """
    Table keyed by (n, constraint value) with the extremes of W_p over the class.
    """

    def __init__(self, constraint: str, frame: pd.DataFrame):
        if constraint not in CONSTRAINTS:
            raise EnumerationQueryError(f"constraint must be one of {CONSTRAINTS}, got {constraint!r}")
        self.constraint = constraint
        self.frame = frame.reset_index(drop=True)

    @classmethod
    def from_records(cls, constraint: str, records) -> 'ExtremalTable':
        """
        Fold tree records into per-class extremes. The first tree met in enumeration
        order is kept as the witness of each extreme.
        """
        cells: Dict[Tuple[int, int], dict] = {}
        for record in records:
            key = (record.tree.order, record.constraint_value(constraint))
            cell = cells.get(key)
            if cell is None:
                code = format_code(canonical_form(record.tree))
                cells[key] = {'min_wp': record.wp, 'max_wp': record.wp,
                              'min_code': code, 'max_code': code, 'class_size': 1}
                continue
            cell['class_size'] += 1
            if record.wp < cell['min_wp']:
                cell['min_wp'] = record.wp
                cell['min_code'] = format_code(canonical_form(record.tree))
            if record.wp > cell['max_wp']:
                cell['max_wp'] = record.wp
                cell['max_code'] = format_code(canonical_form(record.tree))

        rows = [{'n': n, 'constraint': constraint, 'value': value, **cell}
                for (n, value), cell in sorted(cells.items())]
        return cls(constraint, pd.DataFrame(rows, columns=COLUMNS))

    def keys(self):
        return list(zip(self.frame['n'].tolist(), self.frame['value'].tolist()))

    def lookup(self, n: int, value: int) -> Optional[dict]:
        """
        Row for one class, or None when no tree of order n has this constraint value.
        """
        match = self.frame[(self.frame['n'] == n) & (self.frame['value'] == value)]
        if match.empty:
            return None
        row = match.iloc[0].to_dict()
        return {key: (int(v) if key not in ('constraint', 'min_code', 'max_code') else v)
                for key, v in row.items()}

    def __len__(self):
        return len(self.frame)


def extremal_table(n_min: int, n_max: int, constraint: str,
                   enumerator: Optional[TreeEnumerator] = None) -> ExtremalTable:
    """
    Build the extremal table for orders n_min..n_max.

    Args:
        n_min: Smallest order, at least 1
        n_max: Largest order
        constraint: 'b' or 'k'
        enumerator: Enumerator to draw trees from

    Returns:
        ExtremalTable: One row per realized (n, value) class
    """
    if not 1 <= n_min <= n_max:
        raise EnumerationQueryError(f"need 1 <= n_min <= n_max, got {n_min}..{n_max}")
    if constraint not in CONSTRAINTS:
        raise EnumerationQueryError(f"constraint must be one of {CONSTRAINTS}, got {constraint!r}")
    enumerator = enumerator or TreeEnumerator()

    def all_records():
        for n in range(n_min, n_max + 1):
            logger.info(f"Tabulating extremes for n={n} by {constraint}")
            yield from tree_records(n, enumerator)

    return ExtremalTable.from_records(constraint, all_records())
