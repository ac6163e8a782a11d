import pytest
from src.extremal.BoundFormulas import (LOWER, MAX_B, MAX_K, MIN_B, UPPER, FormulaInapplicableError, bound,
                                        in_theorem_scope, max_wp_given_b, max_wp_given_k, min_wp_given_b)


class TestMaxGivenBranching:
    @pytest.mark.parametrize("n,b,value,regime,family", [
        (12, 1, 15, 1, 'BT2'),
        (12, 3, 21, 2, 'BT2'),
        (12, 4, 21, 2, 'BT1'),
        (10, 2, 15, 2, 'BT2'),
        (13, 5, 24, 3, 'BT1'),
        (14, 5, 27, 2, 'BT1'),
    ])
    def test_regimes(self, n, b, value, regime, family):
        result = max_wp_given_b(n, b)
        assert (result.value, result.regime, result.family) == (value, regime, family)
        assert result.direction == UPPER
        assert result.which == MAX_B

    def test_regime_boundaries_are_exact(self):
        # 5b = n - 4 stays in the first regime, 7b = 3n - 4 opens the third
        assert max_wp_given_b(14, 2).regime == 1
        assert max_wp_given_b(15, 2).regime == 1
        assert max_wp_given_b(13, 5).regime == 3

    @pytest.mark.parametrize("n,b", [(6, 1), (12, 0), (12, 5), (10, 4)])
    def test_inapplicable(self, n, b):
        with pytest.raises(FormulaInapplicableError):
            max_wp_given_b(n, b)


class TestMinGivenBranching:
    def test_first_regime(self):
        result = min_wp_given_b(10, 3)
        assert (result.value, result.regime, result.family, result.direction) == (8, 1, 'Bnb', LOWER)

    def test_second_regime(self):
        assert min_wp_given_b(10, 4).value == 12
        assert min_wp_given_b(10, 4).regime == 2

    def test_single_branching_vertex(self):
        assert min_wp_given_b(7, 1).value == 3

    @pytest.mark.parametrize("n,b", [(6, 2), (7, 3), (10, 0)])
    def test_inapplicable(self, n, b):
        with pytest.raises(FormulaInapplicableError):
            min_wp_given_b(n, b)


class TestMaxGivenSegments:
    @pytest.mark.parametrize("n,k,value,regime,family", [
        (10, 4, 13, 5, 'CT1'),
        (11, 6, 17, 2, 'CT2'),
        (12, 5, 13, 8, 'CT3'),
        (10, 9, 15, 1, 'CT2'),
        (12, 6, 19, 3, 'CT2'),
        (9, 7, 12, 4, 'CT1'),
        (10, 8, 15, 6, 'CT3'),
        (13, 8, 22, 7, 'CT3'),
    ])
    def test_cases(self, n, k, value, regime, family):
        result = max_wp_given_k(n, k)
        assert (result.value, result.regime, result.family) == (value, regime, family)

    @pytest.mark.parametrize("n,k", [(10, 2), (10, 10), (5, 3), (10, 1)])
    def test_inapplicable(self, n, k):
        with pytest.raises(FormulaInapplicableError):
            max_wp_given_k(n, k)


class TestDispatch:
    def test_bound(self):
        assert bound(MAX_B, 12, 1).value == 15
        assert bound(MIN_B, 10, 3).value == 8
        assert bound(MAX_K, 10, 4).value == 13

    def test_unknown_bound(self):
        with pytest.raises(FormulaInapplicableError):
            bound('median', 10, 3)

    def test_to_dict(self):
        assert bound(MAX_B, 12, 1).to_dict() == {'which': 'max-b', 'n': 12, 'parameter': 1, 'value': 15,
                                                 'direction': 'upper', 'regime': 1, 'family': 'BT2'}

    def test_theorem_scope(self):
        assert in_theorem_scope(MAX_B, 12, 4)
        assert not in_theorem_scope(MAX_B, 12, 5)
        assert not in_theorem_scope(MIN_B, 10, 1)
        assert in_theorem_scope(MIN_B, 10, 4)
        assert in_theorem_scope(MAX_K, 10, 4)
        assert not in_theorem_scope(MAX_K, 12, 5)
        assert not in_theorem_scope(MAX_K, 10, 9)
        assert not in_theorem_scope(MAX_K, 10, 3)
        assert not in_theorem_scope(MAX_B, 6, 1)
