import random

import pytest

from oracles import pl_trivial
from thompsonf.element import nf_from_word
from thompsonf.presentation import (
    ALPHA, BETA, FLIP, RELATORS, conjugates_commute, commutes, flip, is_identity,
    random_alternating_word, substitute,
)
from thompsonf.words import format_word, inverse_word, parse_word


def test_relators_are_trivial():
    for r in RELATORS:
        assert is_identity(r)
        assert pl_trivial(r)


def test_first_relator_text():
    assert is_identity(parse_word("x0^-2 x1 x0^2 x1^-1 x0^-1 x1^-1 x0 x1"))


def test_flip_preserves_relators():
    for r in RELATORS:
        assert is_identity(flip(r))


def test_flip_is_an_involution():
    rng = random.Random(3)
    for _ in range(100):
        w = tuple(parse_word(rng.choice(["x0", "x1", "x0^-1", "x1^-1"]))[0] for _ in range(8))
        assert nf_from_word(flip(flip(w))) == nf_from_word(w)


def test_substitute_inverts_letters():
    w = parse_word("x0 x1^-1")
    assert substitute(w, FLIP) == parse_word("x0^-1") + inverse_word(parse_word("x1 x0^-1"))


@pytest.mark.parametrize("m", range(1, 4))
@pytest.mark.parametrize("n", range(1, 4))
def test_alpha_beta_conjugates_commute(m, n):
    assert conjugates_commute(m, n)


def test_alpha_beta_do_not_commute():
    assert not commutes(ALPHA, BETA)


def test_alternating_words_are_rarely_trivial():
    rng = random.Random(11)
    hits = sum(is_identity(random_alternating_word(rng, rng.randint(1, 6))) for _ in range(300))
    assert hits == 0


def test_alternating_word_shape():
    w = random_alternating_word(random.Random(0), 4)
    assert [a.index % 2 for a in w] == [0, 1] * 4
