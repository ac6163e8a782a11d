import pytest
from src.enumeration.TreeEnumerator import EnumerationQuery
from src.extremal.FamilyBuilder import construct_family
from src.transforms.RewriteRules import (BRANCHING_COUNT, NEGATIVE, NON_NEGATIVE, NON_POSITIVE, POSITIVE,
                                         SEGMENT_COUNT, StaleSiteError, UnknownRuleError, apply, closed_form_delta,
                                         delta_wp, find_sites, get_rule, preserved_value, rule_catalog,
                                         select_rules, sign_conforms)
from src.trees.ChemicalTree import ChemicalTree, degree_census, wp_edge

# rules whose declared sign is not guaranteed on every matched site
UNPROVEN_SIGN = {'R3a', 'R8'}


@pytest.fixture
def branching_pair_tree():
    """Adjacent degree-3 vertices 0 and 1; an internal path 1-5-6-7 of length 3 to vertex 7."""
    return ChemicalTree.from_edges(10, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (5, 6), (6, 7), (7, 8), (7, 9)])


@pytest.fixture
def pendent_fold_tree():
    """Pendent path 0-1 on degree-3 vertex 2, which is joined to degree-3 vertex 4."""
    return ChemicalTree.from_edges(7, [(0, 1), (1, 2), (2, 3), (2, 4), (4, 5), (4, 6)])


class TestRuleCatalog:
    def test_catalog_size_and_ids(self):
        ids = [r.rule_id for r in rule_catalog()]
        assert len(ids) == 14
        assert ids == ['R1', 'R2', 'R3a', 'R3b', 'R4', 'R5', 'R6',
                       'R7', 'R8', 'R9', 'R10', 'R11', 'R12', 'R13']

    def test_preserved_constraints(self):
        assert get_rule('R5').preserves == BRANCHING_COUNT
        assert get_rule('R13').preserves == SEGMENT_COUNT
        assert all(r.preserves == BRANCHING_COUNT for r in rule_catalog()[:7])
        assert all(r.preserves == SEGMENT_COUNT for r in rule_catalog()[7:])

    def test_signs(self):
        assert get_rule('R1').sign == NEGATIVE
        assert get_rule('R3b').sign == NON_POSITIVE
        assert get_rule('R4').sign == POSITIVE
        assert get_rule('R6').sign == NON_NEGATIVE

    def test_only_r8_lacks_closed_form(self):
        assert [r.rule_id for r in rule_catalog() if r.closed_form is None] == ['R8']

    def test_get_rule_is_case_insensitive(self):
        assert get_rule('r3a').rule_id == 'R3a'
        with pytest.raises(UnknownRuleError):
            get_rule('R14')

    def test_select_rules(self):
        assert [r.rule_id for r in select_rules(['R4', 'R13'])] == ['R4', 'R13']
        assert len(select_rules()) == 14

    def test_to_dict(self):
        row = get_rule('R5').to_dict()
        assert row['rule_id'] == 'R5'
        assert row['preserves'] == 'branching-count'
        assert row['closed_form'] is True
        assert row['variables'] == 'u1 u2 u3 u v'

    def test_sign_conforms(self):
        assert sign_conforms(NEGATIVE, -1) and not sign_conforms(NEGATIVE, 0)
        assert sign_conforms(NON_POSITIVE, 0) and not sign_conforms(NON_POSITIVE, 1)
        assert sign_conforms(POSITIVE, 2) and not sign_conforms(POSITIVE, 0)
        assert sign_conforms(NON_NEGATIVE, 0) and not sign_conforms(NON_NEGATIVE, -1)
        with pytest.raises(ValueError):
            sign_conforms('sideways', 0)


class TestFindSites:
    @pytest.mark.parametrize("rule_id", ['R3a', 'R3b', 'R13'])
    def test_star_has_no_degree_two_sites(self, star4, rule_id):
        assert find_sites(star4, get_rule(rule_id)) == []

    def test_path_has_no_pendent_fold(self, path7):
        assert find_sites(path7, get_rule('R4')) == []

    def test_minimal_family_has_no_long_pendent_path(self):
        assert find_sites(construct_family('Bnb', 10, 3), get_rule('R4')) == []

    def test_sites_sorted_and_distinct(self, branching_pair_tree):
        sites = find_sites(branching_pair_tree, get_rule('R5'))
        assert sites == [(1, 5, 6, 0, 1), (7, 6, 5, 0, 1)]

    def test_pendent_fold_site(self, pendent_fold_tree):
        assert find_sites(pendent_fold_tree, get_rule('R4')) == [(0, 0, 1, 2, 4)]
        assert find_sites(pendent_fold_tree, get_rule('R10')) == [(0, 0, 1, 2, 4)]


class TestApply:
    def test_internal_shift(self, branching_pair_tree):
        rule = get_rule('R5')
        site = (1, 5, 6, 0, 1)
        after = apply(branching_pair_tree, rule, site)
        assert wp_edge(branching_pair_tree) == 9
        assert wp_edge(after) == 8
        assert delta_wp(branching_pair_tree, rule, site) == 1
        assert closed_form_delta(branching_pair_tree, rule, site) == 1
        assert degree_census(after).branching == 3

    def test_pendent_fold(self, pendent_fold_tree):
        rule = get_rule('R4')
        site = (0, 0, 1, 2, 4)
        after = apply(pendent_fold_tree, rule, site)
        assert wp_edge(after) == 4
        assert delta_wp(pendent_fold_tree, rule, site) == 2
        assert closed_form_delta(pendent_fold_tree, rule, site) == 2
        assert preserved_value(after, get_rule('R10')) == preserved_value(pendent_fold_tree, get_rule('R10'))

    def test_original_is_untouched(self, pendent_fold_tree):
        edges = pendent_fold_tree.edges()
        apply(pendent_fold_tree, get_rule('R4'), (0, 0, 1, 2, 4))
        assert pendent_fold_tree.edges() == edges

    def test_stale_site(self, pendent_fold_tree):
        with pytest.raises(StaleSiteError):
            apply(pendent_fold_tree, get_rule('R4'), (3, 3, 2, 4, 5))
        with pytest.raises(StaleSiteError):
            delta_wp(pendent_fold_tree, get_rule('R4'), (3, 3, 2, 4, 5))
        with pytest.raises(StaleSiteError):
            closed_form_delta(pendent_fold_tree, get_rule('R4'), (3, 3, 2, 4, 5))

    def test_closed_form_missing(self, pendent_fold_tree):
        assert closed_form_delta(pendent_fold_tree, get_rule('R8'), (0, 1, 2, 3, 4)) is None


class TestRuleSweep:
    @pytest.fixture(scope="class")
    def trees(self):
        from src.enumeration.TreeEnumerator import TreeEnumerator
        enumerator = TreeEnumerator(max_order=9)
        return [t for n in range(4, 10) for t in enumerator.enumerate(EnumerationQuery(n))]

    @pytest.mark.parametrize("rule", rule_catalog(), ids=lambda r: r.rule_id)
    def test_rewrites_stay_in_class(self, trees, rule):
        for t in trees:
            before = preserved_value(t, rule)
            for site in find_sites(t, rule):
                after = apply(t, rule, site)
                assert after.order == t.order
                assert preserved_value(after, rule) == before

    @pytest.mark.parametrize("rule", [r for r in rule_catalog() if r.closed_form is not None],
                             ids=lambda r: r.rule_id)
    def test_closed_form_agrees(self, trees, rule):
        for t in trees:
            for site in find_sites(t, rule):
                assert closed_form_delta(t, rule, site) == delta_wp(t, rule, site)

    @pytest.mark.parametrize("rule", [r for r in rule_catalog() if r.rule_id not in UNPROVEN_SIGN],
                             ids=lambda r: r.rule_id)
    def test_sign(self, trees, rule):
        for t in trees:
            for site in find_sites(t, rule):
                assert sign_conforms(rule.sign, delta_wp(t, rule, site))

    def test_degree_two_absorption_can_increase(self):
        # u a leaf, w with one leaf and one degree-2 neighbor
        t = ChemicalTree.from_edges(7, [(0, 1), (1, 2), (2, 3), (2, 4), (4, 5), (5, 6)])
        rule = get_rule('R3a')
        deltas = {delta_wp(t, rule, s) for s in find_sites(t, rule)}
        assert max(deltas) > 0
