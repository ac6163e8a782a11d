#!/usr/bin/env python3
"""
Rewrite Rule Catalog

Each rule is an edge exchange on a chemical tree that keeps the order and either the
number of branching vertices or the number of segments, together with the sign its
W_p difference is known to take. Differences are always Δ = W_p(before) - W_p(after).
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Iterable, List, Optional, Tuple

from src.transforms import RuleMatchers as m
from src.trees.ChemicalTree import ChemicalTree, InvalidTreeError, degree_census, wp_edge

logger = logging.getLogger(__name__)

BRANCHING_COUNT = 'branching-count'
SEGMENT_COUNT = 'segment-count'

NEGATIVE = 'negative'
NON_POSITIVE = 'non-positive'
POSITIVE = 'positive'
NON_NEGATIVE = 'non-negative'

RewriteSite = Tuple[int, ...]


class StaleSiteError(ValueError):
    """Raised when a site no longer satisfies its rule's hypotheses."""


class UnknownRuleError(ValueError):
    """Raised for a rule id that is not in the catalog."""


@dataclass(frozen=True)
class RewriteRule:
    rule_id: str
    label: str
    preserves: str
    hypothesis: str
    sign: str
    variables: Tuple[str, ...]
    matcher: Callable = field(repr=False, compare=False)
    rewrite: Callable = field(repr=False, compare=False)
    closed_form: Optional[Callable] = field(default=None, repr=False, compare=False)

    def to_dict(self) -> dict:
        return {
            'rule_id': self.rule_id,
            'label': self.label,
            'preserves': self.preserves,
            'sign': self.sign,
            'variables': ' '.join(self.variables),
            'closed_form': self.closed_form is not None,
            'hypothesis': self.hypothesis,
        }


def sign_conforms(sign: str, delta: int) -> bool:
    if sign == NEGATIVE:
        return delta < 0
    if sign == NON_POSITIVE:
        return delta <= 0
    if sign == POSITIVE:
        return delta > 0
    if sign == NON_NEGATIVE:
        return delta >= 0
    raise ValueError(f"unknown sign class {sign!r}")


_CATALOG = (
    RewriteRule(
        'R1', 'no adjacent degree-3 vertices', BRANCHING_COUNT,
        'w and z adjacent of degree 3; w1 < w2 the other neighbors of w; u of degree <= 2 '
        'in the branch of z away from w; v a degree-4 neighbor of u',
        NEGATIVE, ('w', 'z', 'w1', 'w2', 'u', 'v'),
        m.match_r1, m.rewrite_r1, m.delta_r1),
    RewriteRule(
        'R2', 'degree-3 vertex has at most one degree-4 neighbor', BRANCHING_COUNT,
        'z of degree 3 with degree-4 neighbors x < y; u of degree <= 2 outside the branch of '
        'the third neighbor of z; v a branching neighbor of u other than z',
        NEGATIVE, ('z', 'x', 'y', 'u', 'v'),
        m.match_r2, m.rewrite_r2, m.delta_r2),
    RewriteRule(
        'R3a', 'degree-2 vertex absorbs a degree-3 neighbor', BRANCHING_COUNT,
        'v of degree 2 with neighbors u and w, w of degree 3 with other neighbors w1 < w2',
        NON_POSITIVE, ('u', 'v', 'w', 'w1', 'w2'),
        m.match_r3a, m.rewrite_r3a, m.delta_r3a),
    RewriteRule(
        'R3b', 'degree-3 vertex moves next to a degree-4 vertex', BRANCHING_COUNT,
        'v of degree 2 with neighbors u and w, w of degree 4; z of degree 3 with neighbors '
        'z1 < z2 off its path to w',
        NON_POSITIVE, ('u', 'v', 'w', 'z', 'z1', 'z2'),
        m.match_r3b, m.rewrite_r3b, m.delta_r3b),
    RewriteRule(
        'R4', 'no pendent path longer than 1 (fixed b)', BRANCHING_COUNT,
        'pendent path u0 ... u_t v with t >= 1 and v branching; w a neighbor of v other than '
        'u_t starting an internal path',
        POSITIVE, ('u0', 'u_prev', 'u_t', 'v', 'w'),
        m.match_pendent_fold, m.rewrite_pendent_fold, m.delta_pendent_fold),
    RewriteRule(
        'R5', 'no internal path longer than 2 (fixed b)', BRANCHING_COUNT,
        'u1 u2 u3 the first vertices of an internal path of length >= 3; uv an edge between '
        'branching vertices',
        POSITIVE, ('u1', 'u2', 'u3', 'u', 'v'),
        m.match_internal_shift, m.rewrite_internal_shift, m.delta_internal_shift),
    RewriteRule(
        'R6', 'degree-4 vertex eliminated', BRANCHING_COUNT,
        'u of degree 4; u1 a non-pendent neighbor of u; u2 another neighbor of u; w1 a leaf '
        'in the branch of u2',
        NON_NEGATIVE, ('u', 'u1', 'u2', 'w1'),
        m.match_r6, m.rewrite_r6, m.delta_r6),
    RewriteRule(
        'R7', 'at most two degree-3 vertices on a path', SEGMENT_COUNT,
        'every internal path has length 1; u and w of degree 3 with exactly one degree-3 '
        'vertex v inside their path; w1 < w2 the neighbors of w off the path',
        NEGATIVE, ('u', 'v', 'w', 'w1', 'w2'),
        m.match_r7, m.rewrite_split, m.delta_r7),
    RewriteRule(
        'R8', 'degree-3 vertices consolidated', SEGMENT_COUNT,
        'at least three degree-3 vertices, no path through three of them, every internal '
        'path of length 1; w, u < v of degree 3 with u and v reached from w through the '
        'same neighbor',
        NON_POSITIVE, ('u', 'v', 'w', 'w1', 'w2'),
        m.match_r8, m.rewrite_split, None),
    RewriteRule(
        'R9', 'degree-3 vertex has at most one branching neighbor', SEGMENT_COUNT,
        'u of degree 3 with branching neighbors v and w; x of degree 4 in the branch of w '
        'with exactly one branching neighbor; y a neighbor of x of degree <= 2 farther from u',
        NEGATIVE, ('u', 'v', 'w', 'x', 'y'),
        m.match_r9, m.rewrite_r9, m.delta_r9),
    RewriteRule(
        'R10', 'no pendent path longer than 1 (fixed k)', SEGMENT_COUNT,
        'pendent path u0 ... u_t v with t >= 1 and v branching; w a neighbor of v other than '
        'u_t starting an internal path',
        POSITIVE, ('u0', 'u_prev', 'u_t', 'v', 'w'),
        m.match_pendent_fold, m.rewrite_pendent_fold, m.delta_pendent_fold),
    RewriteRule(
        'R11', 'minimal tree has a degree-4 vertex', SEGMENT_COUNT,
        'maximum degree 3; longest path v1 ... vr with r >= 7, d(v2) = d(v_{r-1}) = 3, '
        'd(v_{r-2}) = 2; vi (4 <= i <= r-3) of degree 3 with leaf w off the path; '
        'd(v3) <= min(d(v_{i-1}), d(v_{i+1}))',
        POSITIVE, ('v2', 'v3', 'a', 'vi', 'c', 'v_r2', 'v_r1', 'w'),
        m.match_r11, m.rewrite_r11, m.delta_r11),
    RewriteRule(
        'R12', 'no internal path longer than 2 (fixed k)', SEGMENT_COUNT,
        'u1 u2 u3 the first vertices of an internal path of length >= 3; uv an edge between '
        'branching vertices',
        POSITIVE, ('u1', 'u2', 'u3', 'u', 'v'),
        m.match_internal_shift, m.rewrite_internal_shift, m.delta_internal_shift),
    RewriteRule(
        'R13', 'degree-2 vertex moves to a heavier branching edge', SEGMENT_COUNT,
        'z of degree 2 with neighbors x < y of degree >= 2 and 4 < d(x) + d(y) < 8; x\'y\' an '
        'edge between branching vertices with d(x\') + d(y\') > d(x) + d(y)',
        POSITIVE, ('z', 'x', 'y', "x'", "y'"),
        m.match_r13, m.rewrite_r13, m.delta_r13),
)


def rule_catalog() -> List[RewriteRule]:
    return list(_CATALOG)


def get_rule(rule_id: str) -> RewriteRule:
    for rule in _CATALOG:
        if rule.rule_id.lower() == rule_id.lower():
            return rule
    raise UnknownRuleError(f"unknown rule {rule_id!r}")


def select_rules(rule_ids: Optional[Iterable[str]] = None) -> List[RewriteRule]:
    if rule_ids is None:
        return rule_catalog()
    return [get_rule(rule_id) for rule_id in rule_ids]


def find_sites(t: ChemicalTree, r: RewriteRule) -> List[RewriteSite]:
    """
    All bindings of the rule's pattern in the tree.

    Returns:
        List[RewriteSite]: Distinct bindings in lexicographic order
    """
    return sorted(set(r.matcher(t)))


def apply_unchecked(t: ChemicalTree, r: RewriteRule, s: RewriteSite) -> ChemicalTree:
    """Apply a rewrite to a site known to come from find_sites."""
    removed, added = r.rewrite(t, s)
    return t.with_edges_replaced(removed, added)


def apply(t: ChemicalTree, r: RewriteRule, s: RewriteSite) -> ChemicalTree:
    """
    Apply a rule at a site.

    Returns:
        ChemicalTree: A new tree of the same order

    Raises:
        StaleSiteError: If the site is not a current binding of the rule
    """
    site = tuple(s)
    if site not in set(r.matcher(t)):
        raise StaleSiteError(f"site {site} does not match {r.rule_id} on {t}")
    try:
        return apply_unchecked(t, r, site)
    except InvalidTreeError as e:
        raise StaleSiteError(f"{r.rule_id} at {site} does not yield a chemical tree: {e}") from e


def delta_wp(t: ChemicalTree, r: RewriteRule, s: RewriteSite) -> int:
    """W_p(t) - W_p(apply(t, r, s))."""
    return wp_edge(t) - wp_edge(apply(t, r, s))


def closed_form_delta(t: ChemicalTree, r: RewriteRule, s: RewriteSite) -> Optional[int]:
    """
    Δ from the degrees around the site, or None when the rule has no closed form.

    Raises:
        StaleSiteError: If the site is not a current binding of the rule
    """
    if r.closed_form is None:
        return None
    site = tuple(s)
    if site not in set(r.matcher(t)):
        raise StaleSiteError(f"site {site} does not match {r.rule_id} on {t}")
    return r.closed_form(t, site)


def preserved_value(t: ChemicalTree, r: RewriteRule) -> int:
    """The quantity the rule keeps fixed: branching count or segment count."""
    census = degree_census(t)
    return census.branching if r.preserves == BRANCHING_COUNT else census.segment_count
