#!/usr/bin/env python3
"""
Bound Formulas

Closed form extremes of the Wiener polarity index over chemical trees of order n:
the maximum and the minimum for a fixed number b of branching vertices and the
maximum for a fixed number k of segments. Every regime boundary is an integer
comparison.
"""

import logging
from dataclasses import asdict, dataclass
from typing import Dict, Tuple

logger = logging.getLogger(__name__)

UPPER = 'upper'
LOWER = 'lower'

MAX_B = 'max-b'
MIN_B = 'min-b'
MAX_K = 'max-k'
BOUND_KINDS = (MAX_B, MIN_B, MAX_K)


class FormulaInapplicableError(ValueError):
    """Raised when (n, parameter) lies outside the range a bound formula covers."""


@dataclass(frozen=True)
class BoundResult:
    which: str
    n: int
    parameter: int
    value: int
    direction: str
    regime: int
    family: str

    def to_dict(self) -> Dict:
        return asdict(self)


def max_wp_given_b(n: int, b: int) -> BoundResult:
    """
    Largest W_p of a chemical tree of order n with b branching vertices.

    Regimes: n + 10b - 7 for 5b <= n - 4, 3n - 15 for 5b > n - 4 and 7b < 3n - 4,
    9n - 14b - 23 for 7b >= 3n - 4. Valid for n >= 7, b >= 1 and 2b < n - 2.

    Raises:
        FormulaInapplicableError: Outside the covered range
    """
    if n < 7 or b < 1 or 2 * b >= n - 2:
        raise FormulaInapplicableError(f"max W_p for b={b} has no closed form at n={n}")
    if 5 * b <= n - 4:
        value, regime = n + 10 * b - 7, 1
    elif 7 * b < 3 * n - 4:
        value, regime = 3 * n - 15, 2
    else:
        value, regime = 9 * n - 14 * b - 23, 3
    family = 'BT2' if 3 * b < n - 2 else 'BT1'
    return BoundResult(MAX_B, n, b, value, UPPER, regime, family)


def min_wp_given_b(n: int, b: int) -> BoundResult:
    """
    Smallest W_p of a chemical tree of order n with b branching vertices:
    b + n - 5 for n >= 3b + 1, otherwise 4b - 4. Valid for n >= 7 and 1 <= b <= n/2 - 1.

    Raises:
        FormulaInapplicableError: Outside the covered range
    """
    if n < 7 or b < 1 or 2 * b > n - 2:
        raise FormulaInapplicableError(f"min W_p for b={b} has no closed form at n={n}")
    if n >= 3 * b + 1:
        return BoundResult(MIN_B, n, b, b + n - 5, LOWER, 1, 'Bnb')
    return BoundResult(MIN_B, n, b, 4 * b - 4, LOWER, 2, 'Bnb')


def _max_k_case(n: int, k: int) -> Tuple[int, int]:
    """(value, regime) of the eight case maximum; regimes numbered 1..8."""
    residue = k % 3
    if residue == 0:
        if 3 * n <= 5 * k:
            return 3 * n - 15, 1
        if 3 * n == 5 * k + 3:
            return 3 * n - 16, 2
        return (3 * n + 10 * k - 39) // 3, 3
    if residue == 1:
        if 3 * n < 5 * k + 7:
            return 3 * n - 15, 4
        return (3 * n + 10 * k - 31) // 3, 5
    if 3 * n <= 5 * k - 7:
        return 3 * n - 15, 6
    if 5 * k - 4 <= 3 * n <= 5 * k + 2:
        return (6 * n + 5 * k - 52) // 3, 7
    return (3 * n + 10 * k - 47) // 3, 8


def max_wp_given_k(n: int, k: int) -> BoundResult:
    """
    Largest W_p of a chemical tree of order n with k segments, by k mod 3.

    Valid for n >= 6 and 3 <= k <= n - 1. The family is CT2 for k = 0, CT1 for
    k = 1 and CT3 for k = 2 (mod 3).

    Raises:
        FormulaInapplicableError: Outside the covered range
    """
    if n < 6 or k < 3 or k > n - 1:
        raise FormulaInapplicableError(f"max W_p for k={k} has no closed form at n={n}")
    value, regime = _max_k_case(n, k)
    family = ('CT2', 'CT1', 'CT3')[k % 3]
    return BoundResult(MAX_K, n, k, value, UPPER, regime, family)


def bound(which: str, n: int, parameter: int) -> BoundResult:
    """Dispatch on 'max-b', 'min-b' or 'max-k'."""
    if which == MAX_B:
        return max_wp_given_b(n, parameter)
    if which == MIN_B:
        return min_wp_given_b(n, parameter)
    if which == MAX_K:
        return max_wp_given_k(n, parameter)
    raise FormulaInapplicableError(f"unknown bound {which!r}, expected one of {BOUND_KINDS}")


def in_theorem_scope(which: str, n: int, parameter: int) -> bool:
    """
    Whether a bound is claimed exact at (n, parameter).

    The maximum for fixed b holds wherever the formula applies. The minimum for
    fixed b needs at least two branching vertices. The maximum for fixed k needs
    k <= n - 2 and an extremal tree with a degree-4 vertex: k >= 6, 4 and 8 for
    k = 0, 1 and 2 (mod 3).
    """
    if n < 7:
        return False
    if which == MAX_B:
        return 1 <= parameter and 2 * parameter < n - 2
    if which == MIN_B:
        return 2 <= parameter and 2 * parameter <= n - 2
    if which == MAX_K:
        smallest = {0: 6, 1: 4, 2: 8}[parameter % 3]
        return smallest <= parameter <= n - 2
    return False
