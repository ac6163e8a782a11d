#!/usr/bin/env python3
"""
Extremal Family Builder

This module builds one deterministic witness of each extremal family and predicts
its degree and edge type censuses:

- BT2(n, b): b degree-4 vertices on a path, degree-2 vertices on the pendent paths.
- BT1(n, b): degree-4 vertices on a path, degree-3 vertices next to them.
- Bnb(n, b): b degree-3 vertices on a path, degree-2 vertices on the internal paths.
- CT1(n, k), CT2(n, k), CT3(n, k): degree-4 vertices on a path carrying none, one or
  two degree-3 vertices, for k = 1, 0 and 2 (mod 3).

Labels are assigned in creation order: the branching skeleton first, then the
subdividing degree-2 vertices, then pendent paths slot by slot.
"""

import logging
from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from src.extremal.EdgeCensus import EdgeTypeCensus, wp_from_census
from src.trees.ChemicalTree import ChemicalTree, DegreeCensus

logger = logging.getLogger(__name__)

FAMILIES = ('BT1', 'BT2', 'Bnb', 'CT1', 'CT2', 'CT3')
B_FAMILIES = ('BT1', 'BT2', 'Bnb')
K_FAMILIES = ('CT1', 'CT2', 'CT3')


class FamilyConstructionError(ValueError):
    """Raised when a family has no member for the requested (n, parameter)."""


@dataclass(frozen=True)
class RegimeCensus:
    """
    Predicted censuses of a family member.

    theta is the number of non-branching neighbors of the degree-4 vertices.
    """

    family: str
    n: int
    parameter: int
    regime: str
    degree_census: DegreeCensus
    edge_census: EdgeTypeCensus
    theta: int

    @property
    def predicted_wp(self) -> int:
        return wp_from_census(self.edge_census)

    def to_dict(self) -> Dict:
        return {
            'family': self.family,
            'n': self.n,
            'parameter': self.parameter,
            'regime': self.regime,
            'theta': self.theta,
            'predicted_wp': self.predicted_wp,
            **self.degree_census.as_dict(),
            **self.edge_census.as_dict(),
        }


@dataclass
class _Plan:
    """
    A family member before labeling.

    skeleton_edges join branching vertices 0..branching-1. Each entry of subdivided
    is (edge index, number of degree-2 vertices placed on that skeleton edge). Each
    slot is (anchor, pendent path length) in slot order. extra_cubic lists anchors of
    degree-3 vertices added breadth first after the slots.
    """

    regime: str
    degree_census: DegreeCensus
    core: Dict[Tuple[int, int], int]
    theta: int
    branching: int
    skeleton_edges: List[Tuple[int, int]]
    subdivided: List[Tuple[int, int]]
    slots: List[Tuple[int, int]]
    cubic_slots: int = 0
    extra_cubic: int = 0


class _Assembler:
    """Hands out labels in creation order and records edges."""

    def __init__(self):
        self.size = 0
        self.edges: List[Tuple[int, int]] = []

    def vertex(self) -> int:
        self.size += 1
        return self.size - 1

    def join(self, u: int, v: int) -> None:
        self.edges.append((u, v))

    def pendant_path(self, anchor: int, length: int) -> List[int]:
        path = []
        previous = anchor
        for _ in range(length):
            v = self.vertex()
            self.join(previous, v)
            path.append(v)
            previous = v
        return path

    def build(self, expected_order: int) -> ChemicalTree:
        if self.size != expected_order:
            raise FamilyConstructionError(f"assembled {self.size} vertices, expected {expected_order}")
        return ChemicalTree.from_edges(self.size, self.edges)


def _path_skeleton(count: int) -> List[Tuple[int, int]]:
    return [(i, i + 1) for i in range(count - 1)]


def _free_positions(degrees: List[int], skeleton_edges: List[Tuple[int, int]],
                    anchors: range) -> List[int]:
    """Anchor list with each anchor repeated once per free position, in label order."""
    used = [0] * len(degrees)
    for u, v in skeleton_edges:
        used[u] += 1
        used[v] += 1
    return [a for a in anchors for _ in range(degrees[a] - used[a])]


def _spread(positions: List[int], filled: int, long_length: int = 2,
            surplus: int = 0) -> List[Tuple[int, int]]:
    """
    Slots over `positions`: the first `filled` get pendent paths of length long_length,
    the rest single leaves, and the first slot takes `surplus` extra vertices.
    """
    slots = []
    for index, anchor in enumerate(positions):
        length = long_length if index < filled else 1
        if index == 0:
            length += surplus
        slots.append((anchor, length))
    return slots


def _plan_bt2(n: int, b: int) -> _Plan:
    if b < 1 or 3 * b >= n - 2:
        raise FamilyConstructionError(f"BT2 needs b >= 1 and 3b < n - 2, got n={n}, b={b}")
    n2 = n - 3 * b - 2
    census = DegreeCensus(2 * b + 2, n2, 0, b)
    skeleton = _path_skeleton(b)
    theta = 2 * b + 2
    positions = _free_positions([4] * b, skeleton, range(b))
    if n2 >= theta:
        core = {(4, 4): b - 1, (2, 4): theta, (2, 2): n2 - theta}
        slots = _spread(positions, theta, surplus=n2 - theta)
        regime = 'BT2.1'
    else:
        core = {(4, 4): b - 1, (2, 4): n2}
        slots = _spread(positions, n2)
        regime = 'BT2.2'
    return _Plan(regime, census, core, theta, b, skeleton, [], slots)


def _plan_bt1(n: int, b: int) -> _Plan:
    if not (3 * b >= n - 2 and 2 * b < n - 2):
        raise FamilyConstructionError(f"BT1 needs 3b >= n - 2 and 2b < n - 2, got n={n}, b={b}")
    n4 = n - 2 * b - 2
    n3 = 3 * b - n + 2
    census = DegreeCensus(n - b, 0, n3, n4)
    skeleton = _path_skeleton(n4)
    theta = 2 * n4 + 2
    positions = _free_positions([4] * n4, skeleton, range(n4))
    if 7 * b < 3 * n - 4:
        core = {(4, 4): n4 - 1, (3, 4): n3}
        return _Plan('BT1.1', census, core, theta, n4, skeleton, [],
                     [(a, 1) for a in positions], cubic_slots=n3)
    extra = n3 - theta
    core = {(4, 4): n4 - 1, (3, 4): theta, (3, 3): extra}
    return _Plan('BT1.2', census, core, theta, n4, skeleton, [],
                 [(a, 1) for a in positions], cubic_slots=theta, extra_cubic=extra)


def _plan_bnb(n: int, b: int) -> _Plan:
    if b < 1 or 2 * b > n - 2:
        raise FamilyConstructionError(f"Bnb needs 1 <= b <= (n - 2)/2, got n={n}, b={b}")
    n2 = n - 2 * b - 2
    census = DegreeCensus(b + 2, n2, b, 0)
    skeleton = _path_skeleton(b)
    positions = _free_positions([3] * b, skeleton, range(b))
    if b == 1:
        # no internal path: the degree-2 vertices form one pendent path
        core = {(2, 3): 1, (2, 2): n2 - 1} if n2 else {}
        slots = _spread(positions, 0, surplus=n2)
        return _Plan('Bnb.pendent', census, core, 0, b, skeleton, [], slots)
    if n2 >= b - 1:
        core = {(2, 3): 2 * b - 2, (2, 2): n - 3 * b - 1}
        subdivided = [(i, 1 + (n2 - (b - 1) if i == 0 else 0)) for i in range(b - 1)]
        regime = 'Bnb.1'
    else:
        core = {(2, 3): 2 * n2, (3, 3): b - 1 - n2}
        subdivided = [(i, 1) for i in range(n2)]
        regime = 'Bnb.2'
    return _Plan(regime, census, core, 0, b, skeleton, subdivided, [(a, 1) for a in positions])


def _plan_ct1(n: int, k: int) -> _Plan:
    if k % 3 != 1 or k < 4 or n < k + 1:
        raise FamilyConstructionError(f"CT1 needs k = 1 (mod 3), 4 <= k <= n - 1, got n={n}, k={k}")
    n4 = (k - 1) // 3
    n1 = (2 * k + 4) // 3
    n2 = n - k - 1
    census = DegreeCensus(n1, n2, 0, n4)
    skeleton = _path_skeleton(n4)
    positions = _free_positions([4] * n4, skeleton, range(n4))
    if n1 > n2:
        core = {(4, 4): n4 - 1, (2, 4): n2}
        return _Plan('CT1.1', census, core, n1, n4, skeleton, [], _spread(positions, n2))
    core = {(4, 4): n4 - 1, (2, 4): n1, (2, 2): n2 - n1}
    return _Plan('CT1.2', census, core, n1, n4, skeleton, [], _spread(positions, n1, surplus=n2 - n1))


def _plan_ct2(n: int, k: int) -> _Plan:
    if k % 3 != 0 or k < 6 or n < k + 1:
        raise FamilyConstructionError(f"CT2 needs k = 0 (mod 3), 6 <= k <= n - 1, got n={n}, k={k}")
    n4 = (k - 3) // 3
    n2 = n - k - 1
    census = DegreeCensus(2 * n4 + 3, n2, 1, n4)
    cubic = n4
    skeleton = _path_skeleton(n4) + [(n4 - 1, cubic)]
    degrees = [4] * n4 + [3]
    big = _free_positions(degrees, skeleton, range(n4))
    small = _free_positions(degrees, skeleton, range(n4, n4 + 1))
    theta = 2 * n4 + 1
    base = {(4, 4): n4 - 1, (3, 4): 1}
    if n2 <= theta:
        core = {**base, (2, 4): n2}
        slots = _spread(big, n2) + _spread(small, 0)
        regime = 'CT2.1'
    elif n2 == theta + 1:
        core = {**base, (2, 4): theta, (2, 3): 1}
        slots = _spread(big, theta) + _spread(small, 1)
        regime = 'CT2.2'
    else:
        core = {**base, (2, 4): theta, (2, 3): 2, (2, 2): n2 - theta - 2}
        slots = _spread(big, theta, surplus=n2 - theta - 2) + _spread(small, 2)
        regime = 'CT2.3'
    return _Plan(regime, census, core, theta, n4 + 1, skeleton, [], slots)


def _plan_ct3(n: int, k: int) -> _Plan:
    if k % 3 != 2 or k < 5 or n < k + 1:
        raise FamilyConstructionError(f"CT3 needs k = 2 (mod 3), 5 <= k <= n - 1, got n={n}, k={k}")
    n2 = n - k - 1
    if k == 5:
        census = DegreeCensus(4, n2, 2, 0)
        skeleton = [(0, 1)]
        positions = _free_positions([3, 3], skeleton, range(2))
        if n2 < 4:
            core = {(3, 3): 1, (2, 3): n2}
            slots = _spread(positions, n2)
            regime = 'CT3.short'
        else:
            core = {(3, 3): 1, (2, 3): 4, (2, 2): n2 - 4}
            slots = _spread(positions, 4, surplus=n2 - 4)
            regime = 'CT3.long'
        return _Plan(regime, census, core, 0, 2, skeleton, [], slots)

    n4 = (k - 5) // 3
    census = DegreeCensus(2 * n4 + 4, n2, 2, n4)
    skeleton = _path_skeleton(n4) + [(n4 - 1, n4), (n4 - 1, n4 + 1)]
    degrees = [4] * n4 + [3, 3]
    big = _free_positions(degrees, skeleton, range(n4))
    small = _free_positions(degrees, skeleton, range(n4, n4 + 2))
    theta = 2 * n4
    base = {(4, 4): n4 - 1, (3, 4): 2}
    if 3 * n <= 5 * k - 7:
        core = {**base, (2, 4): n2}
        slots = _spread(big, n2) + _spread(small, 0)
        regime = 'CT3.1'
    elif 3 * n <= 5 * k + 2:
        cubic_paths = n2 - theta
        core = {**base, (2, 4): theta, (2, 3): cubic_paths}
        slots = _spread(big, theta) + _spread(small, cubic_paths)
        regime = 'CT3.2'
    else:
        core = {**base, (2, 4): theta, (2, 3): 4, (2, 2): n2 - theta - 4}
        slots = _spread(big, theta, surplus=n2 - theta - 4) + _spread(small, 4)
        regime = 'CT3.3'
    return _Plan(regime, census, core, theta, n4 + 2, skeleton, [], slots)


_PLANNERS = {
    'BT1': _plan_bt1,
    'BT2': _plan_bt2,
    'Bnb': _plan_bnb,
    'CT1': _plan_ct1,
    'CT2': _plan_ct2,
    'CT3': _plan_ct3,
}


def normalize_family(name: str) -> str:
    for family in FAMILIES:
        if family.lower() == name.lower():
            return family
    raise FamilyConstructionError(f"unknown family {name!r}, expected one of {FAMILIES}")


def _plan(name: str, n: int, parameter: int) -> _Plan:
    return _PLANNERS[normalize_family(name)](n, parameter)


def _assemble(plan: _Plan, n: int) -> ChemicalTree:
    asm = _Assembler()
    skeleton = [asm.vertex() for _ in range(plan.branching)]
    subdivision = dict(plan.subdivided)
    for index, (u, v) in enumerate(plan.skeleton_edges):
        inner = [asm.vertex() for _ in range(subdivision.get(index, 0))]
        chain = [skeleton[u]] + inner + [skeleton[v]]
        for a, c in zip(chain, chain[1:]):
            asm.join(a, c)

    cubic: deque = deque()
    for index, (anchor, length) in enumerate(plan.slots):
        if index < plan.cubic_slots:
            v = asm.vertex()
            asm.join(skeleton[anchor], v)
            cubic.append((v, 2))
        else:
            asm.pendant_path(skeleton[anchor], length)

    # extra degree-3 vertices hang breadth first below the existing ones
    placed = list(cubic)
    queue = deque(placed)
    for _ in range(plan.extra_cubic):
        anchor, free = queue.popleft()
        v = asm.vertex()
        asm.join(anchor, v)
        placed.append((v, 2))
        queue.append((v, 2))
        if free > 1:
            queue.appendleft((anchor, free - 1))
    used: Dict[int, int] = {}
    for u, v in asm.edges:
        used[u] = used.get(u, 0) + 1
        used[v] = used.get(v, 0) + 1
    for v, _ in placed:
        for _ in range(3 - used[v]):
            asm.pendant_path(v, 1)
    return asm.build(n)


def construct_family(name: str, n: int, parameter: int) -> ChemicalTree:
    """
    Build the witness of a family.

    Args:
        name: One of BT1, BT2, Bnb, CT1, CT2, CT3 (case insensitive)
        n: Tree order
        parameter: b for BT1, BT2 and Bnb; k for CT1, CT2 and CT3

    Returns:
        ChemicalTree: The deterministic family member

    Raises:
        FamilyConstructionError: If (n, parameter) is outside the family's range
    """
    plan = _plan(name, n, parameter)
    tree = _assemble(plan, n)
    logger.debug(f"Built {normalize_family(name)}({n}, {parameter}) in regime {plan.regime}")
    return tree


def predicted_census(name: str, n: int, parameter: int) -> RegimeCensus:
    """
    Degree and edge type censuses every member of the family's regime shares.

    Raises:
        FamilyConstructionError: If (n, parameter) is outside the family's range
    """
    plan = _plan(name, n, parameter)
    edges = EdgeTypeCensus({pair: count for pair, count in plan.core.items() if count})
    return RegimeCensus(normalize_family(name), n, parameter, plan.regime, plan.degree_census,
                        edges.with_pendent_edges(plan.degree_census), plan.theta)


def family_for_bound(family: str, n: int, parameter: int) -> Optional[ChemicalTree]:
    """The witness, or None when the family has no member at (n, parameter)."""
    try:
        return construct_family(family, n, parameter)
    except FamilyConstructionError:
        return None
