import pytest
from src.extremal.BoundFormulas import MAX_K, in_theorem_scope, max_wp_given_b, max_wp_given_k, min_wp_given_b
from src.extremal.EdgeCensus import edge_type_census
from src.extremal.FamilyBuilder import (FAMILIES, FamilyConstructionError, construct_family, family_for_bound,
                                        normalize_family, predicted_census)
from src.trees.ChemicalTree import degree_census, wp_distance, wp_edge


def valid_parameters(family, n):
    """Parameters inside a family's validity range at order n."""
    if family == 'BT2':
        return [b for b in range(1, n) if 3 * b < n - 2]
    if family == 'BT1':
        return [b for b in range(1, n) if 3 * b >= n - 2 and 2 * b < n - 2]
    if family == 'Bnb':
        return [b for b in range(1, n) if 2 * b <= n - 2]
    residue, smallest = {'CT1': (1, 4), 'CT2': (0, 6), 'CT3': (2, 5)}[family]
    return [k for k in range(smallest, n) if k % 3 == residue]


GRID = [(family, n, p) for family in FAMILIES for n in range(7, 21) for p in valid_parameters(family, n)]


class TestConstructFamily:
    @pytest.mark.parametrize("family,n,p", GRID)
    def test_census_identity(self, family, n, p):
        tree = construct_family(family, n, p)
        predicted = predicted_census(family, n, p)
        assert tree.order == n
        assert degree_census(tree) == predicted.degree_census
        assert edge_type_census(tree) == predicted.edge_census
        assert wp_edge(tree) == predicted.predicted_wp

    @pytest.mark.parametrize("family,n,p", [g for g in GRID if g[0] in ('BT1', 'BT2')])
    def test_maximal_branching_families_attain_bound(self, family, n, p):
        assert wp_edge(construct_family(family, n, p)) == max_wp_given_b(n, p).value

    @pytest.mark.parametrize("n,b", [(n, b) for family, n, b in GRID if family == 'Bnb' and b >= 2])
    def test_minimal_family_attains_bound(self, n, b):
        assert wp_edge(construct_family('Bnb', n, b)) == min_wp_given_b(n, b).value

    @pytest.mark.parametrize("family,n,k", [g for g in GRID if g[0].startswith('CT') and in_theorem_scope(MAX_K, g[1], g[2])])
    def test_segment_families_attain_bound(self, family, n, k):
        result = max_wp_given_k(n, k)
        assert result.family == family
        assert wp_edge(construct_family(family, n, k)) == result.value

    def test_bnb_with_one_branching_vertex(self):
        tree = construct_family('Bnb', 9, 1)
        assert wp_edge(tree) == wp_distance(tree) == 6
        assert predicted_census('Bnb', 9, 1).regime == 'Bnb.pendent'

    @pytest.mark.parametrize("family,n,p,regime,wp", [
        ('BT2', 12, 1, 'BT2.1', 15),
        ('BT2', 12, 3, 'BT2.2', 21),
        ('BT1', 12, 4, 'BT1.1', 21),
        ('BT1', 13, 5, 'BT1.2', 24),
        ('Bnb', 10, 3, 'Bnb.1', 8),
        ('Bnb', 10, 4, 'Bnb.2', 12),
        ('CT1', 10, 4, 'CT1.2', 13),
        ('CT1', 9, 7, 'CT1.1', 12),
        ('CT2', 11, 6, 'CT2.2', 17),
        ('CT2', 10, 9, 'CT2.1', 15),
        ('CT2', 12, 6, 'CT2.3', 19),
        ('CT3', 9, 5, 'CT3.short', 10),
        ('CT3', 10, 5, 'CT3.long', 12),
        ('CT3', 10, 8, 'CT3.1', 15),
        ('CT3', 13, 8, 'CT3.2', 22),
        ('CT3', 16, 8, 'CT3.3', 27),
    ])
    def test_regimes(self, family, n, p, regime, wp):
        predicted = predicted_census(family, n, p)
        assert predicted.regime == regime
        assert predicted.predicted_wp == wp
        assert wp_edge(construct_family(family, n, p)) == wp

    def test_predicted_census_values(self):
        bt2 = predicted_census('BT2', 12, 1)
        assert bt2.edge_census.as_dict() == {'x12': 4, 'x22': 3, 'x24': 4}
        assert bt2.theta == 4
        ct1 = predicted_census('CT1', 10, 4)
        assert ct1.edge_census.as_dict() == {'x12': 4, 'x22': 1, 'x24': 4}
        assert predicted_census('Bnb', 10, 3).edge_census[2, 3] == 4

    def test_to_dict(self):
        row = predicted_census('CT1', 10, 4).to_dict()
        assert row['family'] == 'CT1'
        assert row['predicted_wp'] == 13
        assert row['n4'] == 1
        assert row['x24'] == 4

    def test_deterministic(self):
        assert construct_family('CT2', 15, 9) == construct_family('CT2', 15, 9)

    @pytest.mark.parametrize("family,n,p", [('BT2', 10, 3), ('BT1', 12, 2), ('Bnb', 9, 4), ('CT1', 10, 5),
                                            ('CT2', 10, 3), ('CT3', 10, 3), ('CT1', 6, 7)])
    def test_outside_range(self, family, n, p):
        with pytest.raises(FamilyConstructionError):
            construct_family(family, n, p)

    def test_family_names(self):
        assert normalize_family('bnb') == 'Bnb'
        assert normalize_family('ct3') == 'CT3'
        with pytest.raises(FamilyConstructionError):
            normalize_family('BT9')

    def test_family_for_bound(self):
        assert family_for_bound('CT2', 10, 3) is None
        assert wp_edge(family_for_bound('BT2', 12, 1)) == 15
