import src.polarity as polarity


class TestPolarity:
    def test_exports_resolve(self):
        for name in polarity.__all__:
            assert getattr(polarity, name) is not None

    def test_summarize_tree(self, twin_branch_tree):
        summary = polarity.summarize_tree(twin_branch_tree)
        assert summary['b'] == 2
        assert summary['k'] == 5
        assert summary['wp_edge'] == summary['wp_distance'] == 5
        assert summary['x23'] == 2
        assert summary['x13'] == 4
