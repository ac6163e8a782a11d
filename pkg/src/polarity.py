"""
Flat entry points for every operation of the package, in one import.
"""

from src.enumeration.ExtremalTable import ExtremalTable, extremal_table
from src.enumeration.PruferOracle import naive_chemical_trees
from src.enumeration.TreeEnumerator import EnumerationQuery, TreeEnumerator, enumerate_chemical_trees, realizable_values
from src.extremal.BoundFormulas import BoundResult, max_wp_given_b, max_wp_given_k, min_wp_given_b
from src.extremal.EdgeCensus import EdgeTypeCensus, edge_type_census, wp_from_census
from src.extremal.FamilyBuilder import RegimeCensus, construct_family, predicted_census
from src.harness.VerificationHarness import VerificationHarness, verify_bounds, verify_rules, verify_wp_equivalence
from src.harness.VerificationReport import VerificationReport
from src.serialization.EdgeListDocument import parse_edge_list, serialize_edge_list
from src.transforms.RewriteRules import RewriteRule, apply, closed_form_delta, delta_wp, find_sites, rule_catalog
from src.trees.CanonicalForm import canonical_form
from src.trees.ChemicalTree import ChemicalTree, DegreeCensus, branching_count, degree_census, wp_distance, wp_edge
from src.trees.PathStructure import classify_paths, segments


def summarize_tree(t: ChemicalTree) -> dict:
    """Census, branching and segment counts and both W_p values of a tree."""
    census = degree_census(t)
    return {
        'n': t.order,
        **census.as_dict(),
        'b': census.branching,
        'k': len(segments(t)),
        'wp_edge': wp_edge(t),
        'wp_distance': wp_distance(t),
        **edge_type_census(t).as_dict(),
    }


__all__ = [
    'ChemicalTree', 'DegreeCensus', 'EdgeTypeCensus', 'EnumerationQuery', 'ExtremalTable',
    'BoundResult', 'RegimeCensus', 'RewriteRule', 'TreeEnumerator', 'VerificationHarness',
    'VerificationReport',
    'degree_census', 'wp_edge', 'wp_distance', 'branching_count', 'segments', 'classify_paths',
    'canonical_form', 'enumerate_chemical_trees', 'extremal_table', 'realizable_values',
    'naive_chemical_trees', 'max_wp_given_b', 'min_wp_given_b', 'max_wp_given_k',
    'construct_family', 'predicted_census', 'edge_type_census', 'wp_from_census',
    'rule_catalog', 'find_sites', 'apply', 'delta_wp', 'closed_form_delta',
    'verify_bounds', 'verify_rules', 'verify_wp_equivalence',
    'parse_edge_list', 'serialize_edge_list', 'summarize_tree',
]
