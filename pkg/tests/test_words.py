import pytest
from hypothesis import given, strategies as st

from conftest import W, trees
from treeavoid.errors import ArityMismatch, MalformedWordSet, ParseError
from treeavoid.trees import MAryTree, contains, enumerate_trees
from treeavoid.words import (
    WordSet,
    drop_prefixes,
    is_prefix_free,
    lift_arity,
    parse_wordset,
    tree_to_wordset,
    word_contains,
    wordset_to_tree,
)


def word_sets(m=3, max_len=5, max_size=4):
    letters = "".join(str(i) for i in range(1, m + 1))
    words = st.text(alphabet=letters, max_size=max_len)
    return st.lists(words, max_size=max_size).map(lambda ws: WordSet(m, tuple(drop_prefixes(ws))))


class TestTreeToWordset:
    def test_sample_host(self):
        T = parse_wordset("{21,23,321}").to_tree()
        assert str(T) == "(.((...).(...))(.((...)..).))"
        assert str(tree_to_wordset(T)) == "{21,23,321}"

    def test_sample_with_long_words(self):
        leaf, star = (), ((), (), ())
        right_star = (leaf, leaf, star)
        T = MAryTree(3, (right_star, (leaf, right_star, leaf), leaf))
        assert str(tree_to_wordset(T)) == "{13,223}"

    def test_leaf_and_star(self):
        assert str(tree_to_wordset(MAryTree.leaf(3))) == "{}"
        assert str(tree_to_wordset(MAryTree.star(3))) == "{e}"


class TestWordsetToTree:
    def test_empty(self):
        assert wordset_to_tree(W("{}")) == MAryTree.leaf(3)

    def test_t74(self):
        assert str(W("{12}").to_tree()) == "((.(...).)..)"

    def test_t71(self):
        assert str(W("{1,2}").to_tree()) == "((...)(...).)"

    def test_roundtrip_exhaustive(self):
        for n in range(1, 14, 2):
            for T in enumerate_trees(3, n):
                w = tree_to_wordset(T)
                assert is_prefix_free(w.words)
                assert wordset_to_tree(w) == T
                assert w.leaves == n

    @given(word_sets())
    def test_roundtrip_from_words(self, w):
        assert tree_to_wordset(wordset_to_tree(w)) == w

    @pytest.mark.parametrize("words", [("1", "12"), ("", "1"), ("14",)])
    def test_malformed(self, words):
        with pytest.raises(MalformedWordSet):
            WordSet(3, words)


class TestWordContains:
    def test_long_words_contained(self):
        assert word_contains(W("{3231323,11322,3231223112}"), W("{1323,1223}"))

    def test_long_words_avoided(self):
        assert not word_contains(W("{31323,1223}"), W("{1323,1223}"))

    def test_single_vertex_pattern(self):
        for n in range(1, 8, 2):
            for T in enumerate_trees(3, n):
                assert word_contains(tree_to_wordset(T), W("{}"))

    def test_star_needs_an_internal_vertex(self):
        assert not word_contains(W("{}"), W("{e}"))
        assert word_contains(W("{e}"), W("{e}"))

    def test_arity_mismatch(self):
        with pytest.raises(ArityMismatch):
            word_contains(W("{1}"), W("{1}", 2))

    def test_agrees_with_tree_containment(self):
        patterns = [T for L in (1, 3, 5, 7) for T in enumerate_trees(3, L)]
        for n in range(1, 12, 2):
            for T in enumerate_trees(3, n):
                wT = tree_to_wordset(T)
                for t in patterns:
                    assert word_contains(wT, tree_to_wordset(t)) == (contains(T, t) is not None)

    @given(trees(), trees(max_leaves=6))
    def test_agrees_with_tree_containment_random(self, T, t):
        assert word_contains(tree_to_wordset(T), tree_to_wordset(t)) == (contains(T, t) is not None)


class TestLift:
    def test_examples(self):
        assert lift_arity(W("{12}"), 4) == W("{12}", 4)
        assert lift_arity(W("{}"), 3) == W("{}")
        assert lift_arity(W("{1,2}", 2), 3) == W("{1,2}")

    def test_cannot_lower(self):
        with pytest.raises(ValueError):
            lift_arity(W("{1}"), 2)

    @given(word_sets(), word_sets(max_len=3, max_size=2), st.integers(3, 6))
    def test_preserves_verdicts(self, T, t, M):
        assert word_contains(T, t) == word_contains(lift_arity(T, M), lift_arity(t, M))

    def test_lifted_tree_has_more_leaves(self):
        w = W("{12}")
        assert w.leaves == 7
        assert lift_arity(w, 4).leaves == 10


class TestLiteral:
    def test_examples(self):
        assert W("{21,23,321}").words == ("21", "23", "321")
        assert W("{}").words == ()
        assert W("{e}").words == ("",)
        assert W(" { 3 , 12 } ").words == ("12", "3")

    def test_prefix_violation_offset(self):
        with pytest.raises(MalformedWordSet) as exc:
            parse_wordset("{1,12}")
        assert exc.value.offset == 3

    @pytest.mark.parametrize("bad", ["1,2", "{1,2", "{1,,2}", "{a}", "{14}", "{1,1}", "{e,1}"])
    def test_errors(self, bad):
        with pytest.raises(ParseError):
            parse_wordset(bad)

    def test_text_is_sorted(self):
        assert str(W("{321,23,21}")) == "{21,23,321}"
