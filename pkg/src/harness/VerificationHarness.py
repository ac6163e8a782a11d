#!/usr/bin/env python3
"""
Verification Harness

This module runs verification campaigns over the exhaustive enumeration:

- bound campaigns compare each closed form extreme with the enumerated extreme of
  every (n, b) or (n, k) class and check the family witness against both;
- the minimum-for-k campaign tabulates the enumerated minimum of every (n, k) class
  with structure statistics of its minimal trees;
- the rule campaign applies every rule at every site of every tree and checks the
  sign of the W_p difference, its closed form and the preserved quantity;
- the equivalence campaign compares the edge and distance definitions of W_p.

Each order n is an independent cell. With workers > 1 the cells run on a process
pool; rows are always assembled in (n, parameter) order.
"""

import logging
import time
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from datetime import datetime, timezone
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from src.enumeration.ExtremalTable import TreeRecord, tree_records
from src.enumeration.TreeEnumerator import DEFAULT_MAX_ORDER, EnumerationQuery, TreeEnumerator
from src.extremal.BoundFormulas import MAX_B, MAX_K, MIN_B, FormulaInapplicableError, bound, in_theorem_scope
from src.extremal.FamilyBuilder import family_for_bound
from src.harness.VerificationReport import VerificationReport
from src.serialization.EdgeListDocument import compact_edges
from src.transforms.RewriteRules import apply_unchecked, preserved_value, select_rules, sign_conforms
from src.trees.CanonicalForm import canonical_form, format_code
from src.trees.ChemicalTree import InvalidTreeError, wp_distance, wp_edge
from src.trees.PathStructure import pendent_path_lengths, short_internal_if_adjacent

logger = logging.getLogger(__name__)

MIN_K_EMPIRICAL = 'min-k-empirical'
BOUND_CAMPAIGNS = (MAX_B, MIN_B, MAX_K, MIN_K_EMPIRICAL)

BOUND_COLUMNS = ['n', 'param', 'formula', 'regime', 'extremum', 'match', 'scope', 'class_size',
                 'witness_count', 'witness_code', 'family', 'family_wp', 'family_attains',
                 'family_is_witness', 'family_code']
MIN_K_COLUMNS = ['n', 'param', 'extremum', 'scope', 'class_size', 'witness_count', 'witness_code',
                 'pendent_length_1', 'with_degree_4', 'short_internal_if_adjacent',
                 'all_pendent_length_1', 'all_with_degree_4', 'all_short_internal_if_adjacent']
RULE_COLUMNS = ['n', 'rule_id', 'trees', 'trees_with_sites', 'sites', 'sign_violations',
                'closed_form_checked', 'closed_form_mismatches', 'constraint_violations',
                'invalid_results', 'min_delta', 'max_delta']
RULE_SUMMARY_COLUMNS = ['rule_id', 'preserves', 'sign', 'sites', 'sign_violations',
                        'closed_form_checked', 'closed_form_mismatches', 'constraint_violations',
                        'invalid_results', 'min_delta', 'max_delta']
RULE_VIOLATION_COLUMNS = ['n', 'rule_id', 'kind', 'site', 'delta', 'expected', 'tree']
WP_COLUMNS = ['n', 'trees', 'mismatches', 'max_wp']
WP_VIOLATION_COLUMNS = ['n', 'wp_edge', 'wp_distance', 'tree']
BOUND_VIOLATION_COLUMNS = ['n', 'param', 'reason', 'formula', 'extremum', 'family_wp']
MIN_K_VIOLATION_COLUMNS = ['n', 'param', 'reason', 'witness_code']


class CampaignError(ValueError):
    """Raised for a campaign request outside the supported ranges."""


def _bound_parameter(which: str) -> str:
    return 'k' if which in (MAX_K, MIN_K_EMPIRICAL) else 'b'


def _group(records: Iterable[TreeRecord], constraint: str) -> Dict[int, List[TreeRecord]]:
    groups: Dict[int, List[TreeRecord]] = defaultdict(list)
    for record in records:
        groups[record.constraint_value(constraint)].append(record)
    return groups


def _bounds_cell(args: Tuple[str, int, int]) -> Tuple[List[Dict], List[Dict]]:
    """Rows and violations of one order for a bound campaign."""
    which, n, max_order = args
    enumerator = TreeEnumerator(max_order)
    groups = _group(tree_records(n, enumerator), _bound_parameter(which))
    rows, violations = [], []
    for param in sorted(groups):
        records = groups[param]
        if which == MIN_K_EMPIRICAL:
            row, problems = _min_k_row(n, param, records)
        else:
            row, problems = _bound_row(which, n, param, records)
        rows.append(row)
        violations.extend(problems)
    logger.info(f"{which}: n={n} done, {len(rows)} classes, {len(violations)} violations")
    return rows, violations


def _extremal_records(which: str, records: List[TreeRecord]) -> Tuple[int, List[TreeRecord]]:
    pick = min if which in (MIN_B, MIN_K_EMPIRICAL) else max
    extremum = pick(r.wp for r in records)
    return extremum, [r for r in records if r.wp == extremum]


def _bound_row(which: str, n: int, param: int, records: List[TreeRecord]) -> Tuple[Dict, List[Dict]]:
    extremum, witnesses = _extremal_records(which, records)
    codes = sorted((canonical_form(r.tree) for r in witnesses), reverse=True)
    row = {
        'n': n, 'param': param, 'formula': None, 'regime': None, 'extremum': extremum,
        'match': None, 'scope': 'empirical', 'class_size': len(records),
        'witness_count': len(witnesses), 'witness_code': format_code(codes[0]),
        'family': None, 'family_wp': None, 'family_attains': None,
        'family_is_witness': None, 'family_code': None,
    }
    try:
        result = bound(which, n, param)
    except FormulaInapplicableError:
        logger.debug(f"{which}: no closed form at n={n}, param={param}")
        return row, []

    row.update(formula=result.value, regime=result.regime, match=result.value == extremum,
               family=result.family)
    if in_theorem_scope(which, n, param):
        row['scope'] = 'theorem'
    witness = family_for_bound(result.family, n, param)
    if witness is not None:
        family_code = canonical_form(witness)
        row.update(family_wp=wp_edge(witness), family_code=format_code(family_code),
                   family_attains=wp_edge(witness) == extremum,
                   family_is_witness=family_code in set(codes))

    problems = []
    if row['scope'] == 'theorem':
        if not row['match']:
            problems.append('formula differs from enumeration')
        if not row['family_attains']:
            problems.append('family witness misses the extremum')
    for reason in problems:
        logger.warning(f"{which}: n={n}, param={param}: {reason} "
                       f"(formula {row['formula']}, enumerated {extremum}, family {row['family_wp']})")
    return row, [{'n': n, 'param': param, 'reason': reason, 'formula': row['formula'],
                  'extremum': extremum, 'family_wp': row['family_wp']} for reason in problems]


def _min_k_row(n: int, k: int, records: List[TreeRecord]) -> Tuple[Dict, List[Dict]]:
    extremum, witnesses = _extremal_records(MIN_K_EMPIRICAL, records)
    codes = sorted((canonical_form(r.tree) for r in witnesses), reverse=True)
    pendent_ok = with_degree_4 = internal_ok = 0
    for record in witnesses:
        t = record.tree
        has_branching = record.b > 0
        if has_branching and max(pendent_path_lengths(t)) == 1:
            pendent_ok += 1
        if 4 in t.degrees():
            with_degree_4 += 1
        if short_internal_if_adjacent(t):
            internal_ok += 1
    count = len(witnesses)
    scope = 'theorem' if n >= 7 and 7 <= k <= n - 2 else 'empirical'
    row = {
        'n': n, 'param': k, 'extremum': extremum, 'scope': scope, 'class_size': len(records),
        'witness_count': count, 'witness_code': format_code(codes[0]),
        'pendent_length_1': pendent_ok, 'with_degree_4': with_degree_4,
        'short_internal_if_adjacent': internal_ok,
        'all_pendent_length_1': pendent_ok == count, 'all_with_degree_4': with_degree_4 == count,
        'all_short_internal_if_adjacent': internal_ok == count,
    }
    problems = []
    if scope == 'theorem':
        checks = (('a minimal tree has a pendent path longer than 1', row['all_pendent_length_1']),
                  ('a minimal tree has no degree-4 vertex', row['all_with_degree_4']),
                  ('a minimal tree has internal paths of length 1 and longer than 2',
                   row['all_short_internal_if_adjacent']))
        for reason, ok in checks:
            if not ok:
                logger.warning(f"{MIN_K_EMPIRICAL}: n={n}, k={k}: {reason}")
                problems.append({'n': n, 'param': k, 'reason': reason,
                                 'witness_code': format_code(codes[0])})
    return row, problems


def _rules_cell(args: Tuple[int, Optional[Tuple[str, ...]], int]) -> Tuple[List[Dict], List[Dict]]:
    """Per-rule counts and violations of one order for the rule campaign."""
    n, rule_ids, max_order = args
    rules = select_rules(rule_ids)
    stats = {r.rule_id: {'n': n, 'rule_id': r.rule_id, 'trees': 0, 'trees_with_sites': 0, 'sites': 0,
                         'sign_violations': 0, 'closed_form_checked': 0, 'closed_form_mismatches': 0,
                         'constraint_violations': 0, 'invalid_results': 0,
                         'min_delta': None, 'max_delta': None}
             for r in rules}
    violations = []

    def violation(rule_id, kind, site, delta, expected, tree):
        violations.append({'n': n, 'rule_id': rule_id, 'kind': kind, 'site': ' '.join(map(str, site)),
                           'delta': delta, 'expected': expected, 'tree': compact_edges(tree)})

    for record in tree_records(n, TreeEnumerator(max_order)):
        t = record.tree
        for rule in rules:
            cell = stats[rule.rule_id]
            cell['trees'] += 1
            sites = sorted(set(rule.matcher(t)))
            if sites:
                cell['trees_with_sites'] += 1
            before = preserved_value(t, rule)
            for site in sites:
                cell['sites'] += 1
                try:
                    after = apply_unchecked(t, rule, site)
                except InvalidTreeError as e:
                    cell['invalid_results'] += 1
                    violation(rule.rule_id, 'invalid', site, None, str(e), t)
                    continue
                delta = record.wp - wp_edge(after)
                cell['min_delta'] = delta if cell['min_delta'] is None else min(cell['min_delta'], delta)
                cell['max_delta'] = delta if cell['max_delta'] is None else max(cell['max_delta'], delta)
                if not sign_conforms(rule.sign, delta):
                    cell['sign_violations'] += 1
                    violation(rule.rule_id, 'sign', site, delta, rule.sign, t)
                if rule.closed_form is not None:
                    cell['closed_form_checked'] += 1
                    expected = rule.closed_form(t, site)
                    if expected != delta:
                        cell['closed_form_mismatches'] += 1
                        violation(rule.rule_id, 'closed-form', site, delta, expected, t)
                if preserved_value(after, rule) != before or after.order != t.order:
                    cell['constraint_violations'] += 1
                    violation(rule.rule_id, 'constraint', site, delta, rule.preserves, t)
    logger.info(f"rules: n={n} done, {len(violations)} violations")
    return [stats[r.rule_id] for r in rules], violations


def _wp_cell(args: Tuple[int, int]) -> Tuple[List[Dict], List[Dict]]:
    n, max_order = args
    trees = mismatches = 0
    max_wp = 0
    violations = []
    for tree in TreeEnumerator(max_order).enumerate(EnumerationQuery(n)):
        trees += 1
        by_edges, by_distance = wp_edge(tree), wp_distance(tree)
        max_wp = max(max_wp, by_edges)
        if by_edges != by_distance:
            mismatches += 1
            violations.append({'n': n, 'wp_edge': by_edges, 'wp_distance': by_distance,
                               'tree': compact_edges(tree)})
    return [{'n': n, 'trees': trees, 'mismatches': mismatches, 'max_wp': max_wp}], violations


class VerificationHarness:
    """
    Runs verification campaigns and assembles VerificationReports.
    """

    def __init__(self, workers: int = 1, rule_ids: Optional[Sequence[str]] = None,
                 max_order: int = DEFAULT_MAX_ORDER):
        """
        Args:
            workers: Number of worker processes; 1 runs every cell in this process
            rule_ids: Rules swept by verify_rules, all rules when None
            max_order: Enumeration ceiling
        """
        if workers < 1:
            raise CampaignError(f"workers must be at least 1, got {workers}")
        self.workers = workers
        self.rule_ids = tuple(r.rule_id for r in select_rules(rule_ids)) if rule_ids else None
        self.max_order = max_order

    def _check_range(self, n_min: int, n_max: int) -> None:
        if not 1 <= n_min <= n_max:
            raise CampaignError(f"need 1 <= n_min <= n_max, got {n_min}..{n_max}")
        if n_max > self.max_order:
            raise CampaignError(f"n_max={n_max} exceeds the enumeration ceiling {self.max_order}")

    def _run(self, cell: Callable, args: List[Tuple]) -> Tuple[List[Dict], List[Dict]]:
        if self.workers > 1 and len(args) > 1:
            with ProcessPoolExecutor(max_workers=self.workers) as pool:
                results = list(pool.map(cell, args))
        else:
            results = [cell(a) for a in args]
        rows, violations = [], []
        for cell_rows, cell_violations in results:
            rows.extend(cell_rows)
            violations.extend(cell_violations)
        return rows, violations

    def _report(self, kind: str, n_min: int, n_max: int, started: float, **fields):
        report = VerificationReport(campaign_id=f"{kind}-n{n_min}-{n_max}", kind=kind,
                                    n_min=n_min, n_max=n_max, **fields)
        report.timing = {
            'finished_at': datetime.now(timezone.utc).isoformat(timespec='seconds'),
            'elapsed_seconds': round(time.perf_counter() - started, 3),
            'workers': self.workers,
        }
        logger.info(f"Campaign {report.campaign_id}: {len(report.rows)} rows, "
                    f"{report.violation_count} violations in {report.timing['elapsed_seconds']}s")
        return report

    def verify_bounds(self, n_min: int, n_max: int, which: str):
        """
        Compare a bound with the enumeration for every class of orders n_min..n_max.

        Args:
            n_min: Smallest order
            n_max: Largest order
            which: 'max-b', 'min-b', 'max-k' or 'min-k-empirical'

        Returns:
            VerificationReport: One row per realized (n, parameter) class
        """
        if which not in BOUND_CAMPAIGNS:
            raise CampaignError(f"unknown bound campaign {which!r}, expected one of {BOUND_CAMPAIGNS}")
        self._check_range(n_min, n_max)
        started = time.perf_counter()
        rows, violations = self._run(_bounds_cell, [(which, n, self.max_order)
                                                   for n in range(n_min, n_max + 1)])
        empirical = which == MIN_K_EMPIRICAL
        return self._report(which, n_min, n_max, started, rows=rows,
                            columns=MIN_K_COLUMNS if empirical else BOUND_COLUMNS,
                            violations=violations,
                            violation_columns=MIN_K_VIOLATION_COLUMNS if empirical else BOUND_VIOLATION_COLUMNS)

    def verify_rules(self, n_min: int, n_max: int):
        """
        Apply every selected rule at every site of every tree of orders n_min..n_max.

        Returns:
            VerificationReport: Per (n, rule) rows, a per-rule summary and one violation
            row per failed check, carrying the tree
        """
        self._check_range(n_min, n_max)
        started = time.perf_counter()
        rows, violations = self._run(_rules_cell, [(n, self.rule_ids, self.max_order)
                                                  for n in range(n_min, n_max + 1)])
        summary = []
        for rule in select_rules(self.rule_ids):
            cells = [r for r in rows if r['rule_id'] == rule.rule_id]
            deltas_min = [c['min_delta'] for c in cells if c['min_delta'] is not None]
            deltas_max = [c['max_delta'] for c in cells if c['max_delta'] is not None]
            entry = {'rule_id': rule.rule_id, 'preserves': rule.preserves, 'sign': rule.sign}
            for key in ('sites', 'sign_violations', 'closed_form_checked', 'closed_form_mismatches',
                        'constraint_violations', 'invalid_results'):
                entry[key] = sum(c[key] for c in cells)
            entry['min_delta'] = min(deltas_min) if deltas_min else None
            entry['max_delta'] = max(deltas_max) if deltas_max else None
            summary.append(entry)
        return self._report('rules', n_min, n_max, started, rows=rows, columns=RULE_COLUMNS,
                            violations=violations, violation_columns=RULE_VIOLATION_COLUMNS,
                            rule_summary=summary, rule_summary_columns=RULE_SUMMARY_COLUMNS)

    def verify_wp_equivalence(self, n_min: int, n_max: int):
        """
        Check that both W_p definitions agree on every tree of orders n_min..n_max.
        """
        self._check_range(n_min, n_max)
        started = time.perf_counter()
        rows, violations = self._run(_wp_cell, [(n, self.max_order) for n in range(n_min, n_max + 1)])
        return self._report('wp-equiv', n_min, n_max, started, rows=rows, columns=WP_COLUMNS,
                            violations=violations, violation_columns=WP_VIOLATION_COLUMNS)


def verify_bounds(n_min: int, n_max: int, which: str):
    return VerificationHarness().verify_bounds(n_min, n_max, which)


def verify_rules(n_min: int, n_max: int):
    return VerificationHarness().verify_rules(n_min, n_max)


def verify_wp_equivalence(n_min: int, n_max: int):
    return VerificationHarness().verify_wp_equivalence(n_min, n_max)
