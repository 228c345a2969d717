import itertools

import pytest
from hypothesis import given, strategies as st

from thompsonf.trees import (
    CARET, LABELS, LEAF, X0, X0I, X1, X1I, X2, X2I, XB1, XB1I, apply_generator, apply_word,
    catalan, count_forests, enumerate_forests, enumerate_marked_forests, enumerate_trees,
    height, inverse_label, leaves, marked_forest, parse_marked_forest, parse_tree, tree_str,
)


def test_catalan_small_values():
    assert [catalan(n) for n in range(8)] == [1, 1, 2, 5, 14, 42, 132, 429]
    assert catalan(10) == 16796
    with pytest.raises(ValueError):
        catalan(-1)


@pytest.mark.parametrize("n", range(1, 12))
def test_tree_count_is_catalan(n):
    ts = enumerate_trees(n)
    assert len(ts) == len(set(ts)) == catalan(n - 1)
    assert all(leaves(t) == n for t in ts)


def test_height_bound():
    assert enumerate_trees(1) == (LEAF,)
    assert len(enumerate_trees(3)) == 2
    assert enumerate_trees(4, 2) == (((LEAF, LEAF), (LEAF, LEAF)),)
    # n=5 needs height at least 3
    assert enumerate_trees(5, 2) == ()
    for n in range(1, 9):
        for k in range(0, 6):
            want = [t for t in enumerate_trees(n) if height(t) <= k]
            assert list(enumerate_trees(n, k)) == want


@pytest.mark.parametrize("n", range(1, 11))
def test_forest_count_is_catalan(n):
    fs = list(enumerate_forests(n))
    assert len(fs) == len(set(fs)) == catalan(n) == count_forests(n)


def test_capped_forest_count_matches_enumeration():
    for n in range(1, 9):
        for k in range(0, 4):
            assert count_forests(n, k) == sum(1 for _ in enumerate_forests(n, k))


def test_tree_text_round_trip():
    for n in range(1, 7):
        for t in enumerate_trees(n):
            assert parse_tree(tree_str(t)) == t
    assert tree_str(CARET) == "(. .)"
    for bad in ["", "(", "(. .", "(. . .)", "x", ". ."]:
        with pytest.raises(ValueError):
            parse_tree(bad)


def test_marked_forest_text_round_trip():
    for f in enumerate_marked_forests(5):
        assert parse_marked_forest(str(f)) == f
    assert str(marked_forest([LEAF, CARET], 1)) == "[. *(. .)]"
    with pytest.raises(ValueError):
        parse_marked_forest("[. .]")
    with pytest.raises(ValueError):
        marked_forest([LEAF], 1)


def test_documented_actions():
    two = marked_forest([LEAF, LEAF], 0)
    assert apply_generator(two, X0I) == marked_forest([LEAF, LEAF], 1)
    assert apply_generator(two, X0) is None
    assert apply_generator(marked_forest([CARET], 0), X1) == two
    assert apply_generator(marked_forest([CARET], 0), XB1) == marked_forest([LEAF, LEAF], 1)
    assert apply_generator(marked_forest([LEAF], 0), X1) is None
    assert apply_generator(marked_forest([LEAF], 0), XB1) is None


def test_height_cap_only_limits_joins():
    f = marked_forest([CARET, LEAF], 0)
    assert apply_generator(f, X1I, height_cap=1) is None
    assert apply_generator(f, X1I, height_cap=2) == marked_forest([(CARET, LEAF)], 0)
    g = marked_forest([(CARET, CARET)], 0)
    assert apply_generator(g, X1, height_cap=1) is not None
    assert apply_generator(f, X0I, height_cap=0) is not None


@pytest.mark.parametrize("label", LABELS)
def test_actions_are_partial_bijections(label):
    inv = inverse_label(label)
    for n in range(1, 7):
        for f in enumerate_marked_forests(n):
            g = apply_generator(f, label)
            if g is not None:
                assert g.leaf_count() == n
                assert apply_generator(g, inv) == f


def test_bar_and_x2_are_composites():
    for n in range(1, 7):
        for f in enumerate_marked_forests(n):
            assert apply_generator(f, XB1) == apply_word(f, [X1, X0I])
            assert apply_generator(f, XB1I) == apply_word(f, [X0, X1I])
            assert apply_generator(f, X2) == apply_word(f, [X0I, X1, X0])
            assert apply_generator(f, X2I) == apply_word(f, [X0I, X1I, X0])


def test_x2_needs_a_caret_to_the_right():
    f = marked_forest([LEAF, CARET], 0)
    assert apply_generator(f, X2) == marked_forest([LEAF, LEAF, LEAF], 0)
    assert apply_generator(marked_forest([CARET, LEAF], 0), X2) is None


def test_unknown_label():
    with pytest.raises(ValueError):
        apply_generator(marked_forest([LEAF], 0), "x7")


@given(st.integers(1, 7), st.data())
def test_inverse_word_undoes_word(n, data):
    forests = list(enumerate_marked_forests(n))
    f = data.draw(st.sampled_from(forests))
    word = data.draw(st.lists(st.sampled_from(LABELS), max_size=10))
    g = apply_word(f, word)
    if g is not None:
        assert apply_word(g, [inverse_label(a) for a in reversed(word)]) == f
