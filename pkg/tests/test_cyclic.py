import random

import pytest
from hypothesis import given, strategies as st

from thompsonf.cyclic import (
    BalanceError, decide_trivial, max_weight_positions, transform_T, weights,
)
from thompsonf.element import IDENTITY, nf_from_word
from thompsonf.words import Letter, format_word, parse_word

EXAMPLE = "x0^-2 x1 x0^2 x1^-1 x0^-1 x1^-1 x0 x1"


def test_weights():
    assert weights("x0 x0^-1") == [0, 1]
    assert weights("x1 x1^-1") == [0, 0]
    assert weights(EXAMPLE) == [0, -1, -2, -2, -1, 0, 0, -1, -1, 0]
    with pytest.raises(BalanceError):
        weights("x0 x1")
    with pytest.raises(ValueError):
        weights("x2 x2^-1")


def test_example_renames_second_and_fourth_x1_letters():
    w = parse_word(EXAMPLE)
    x1_positions = [i for i, a in enumerate(w) if a.index == 1]
    assert max_weight_positions(w) == [x1_positions[1], x1_positions[3]] == [5, 9]
    assert transform_T(w) == parse_word("x0^-2 x1 x0^2 x0^-1 x0^-1 x1^-1 x0 x0")


def test_example_trace():
    v = decide_trivial(EXAMPLE)
    assert v.trivial and v.iterations == 2
    assert [s.renamed for s in v.trace] == [[5, 9], [2, 7], []]
    d = v.as_dict()
    assert d["trace"][0]["sums"] == {"x0": 0, "x1": 0}


def test_small_cases():
    assert transform_T("x1 x1^-1") == parse_word("x0 x0^-1")
    assert decide_trivial("x0 x0^-1").trivial
    assert decide_trivial("").trivial
    v = decide_trivial("x0 x1")
    assert not v.trivial and v.iterations == 0
    with pytest.raises(ValueError):
        transform_T("x0 x0^-1")


def test_free_reduction_flag_keeps_verdict():
    for s in range(300):
        rng = random.Random(s)
        half = [Letter(rng.randint(0, 1), rng.choice((1, -1))) for _ in range(rng.randint(1, 6))]
        w = tuple(half) + tuple(Letter(a.index, -a.sign) for a in reversed(half))
        assert decide_trivial(w).trivial
        assert decide_trivial(w, reduce_between=True).trivial


letter01 = st.builds(Letter, st.integers(0, 1), st.sampled_from((1, -1)))


@given(st.lists(letter01, max_size=16))
def test_agrees_with_normal_form(w):
    assert decide_trivial(w).trivial == (nf_from_word(w) == IDENTITY)


@given(st.lists(letter01, min_size=1, max_size=16))
def test_transform_preserves_length_and_is_rotation_invariant(w):
    w = tuple(w)
    if sum(a.sign for a in w if a.index == 0) != 0 or not any(a.index == 1 for a in w):
        return
    t = transform_T(w)
    assert len(t) == len(w)
    for r in range(len(w)):
        rot = w[r:] + w[:r]
        assert transform_T(rot) == t[r:] + t[:r]
