"""The two-generator presentation of F and a few checks built on it."""

from __future__ import annotations

import random
from typing import Mapping, Sequence

from .element import IDENTITY, nf_from_word
from .words import (
    Letter, Word, commutator, conjugate, inverse_word, parse_word, power, to_two_generator,
)

X0W = parse_word("x0")
X1W = parse_word("x1")


def _relator(k: int) -> Word:
    """``x1^(x0^k)`` times the inverse of ``x1^(x0^(k-1) x1)``."""
    lhs = conjugate(X1W, power(X0W, k))
    rhs = conjugate(X1W, power(X0W, k - 1) + X1W)
    return lhs + inverse_word(rhs)


RELATORS = (_relator(2), _relator(3))

# alpha = x1^-1, beta = (x1 x0^-1)^-1 = x0 x1^-1
ALPHA = parse_word("x1^-1")
BETA = parse_word("x0 x1^-1")


def substitute(word: Sequence[Letter], images: Mapping[int, Word]) -> Word:
    """Apply the endomorphism sending ``x_i`` to ``images[i]``."""
    out: list = []
    for a in word:
        img = images[a.index]
        out.extend(img if a.sign > 0 else inverse_word(img))
    return tuple(out)


# x0 -> x0^-1, x1 -> x1 x0^-1
FLIP = {0: parse_word("x0^-1"), 1: parse_word("x1 x0^-1")}


def flip(word: Sequence[Letter]) -> Word:
    return substitute(to_two_generator(word), FLIP)


def commutes(a: Sequence[Letter], b: Sequence[Letter]) -> bool:
    return nf_from_word(commutator(a, b)) == IDENTITY


def conjugates_commute(m: int, n: int) -> bool:
    """``alpha^(beta^m)`` commutes with ``beta^(alpha^n)``."""
    return commutes(conjugate(ALPHA, power(BETA, m)), conjugate(BETA, power(ALPHA, n)))


def random_alternating_word(rng: random.Random, k: int, max_index: int = 6) -> Word:
    """``x_i^{+-1} x_j^{+-1}`` blocks, all ``i`` even and all ``j`` odd."""
    evens = list(range(0, max_index + 1, 2))
    odds = list(range(1, max_index + 1, 2))
    w = []
    for _ in range(k):
        w.append(Letter(rng.choice(evens), rng.choice((1, -1))))
        w.append(Letter(rng.choice(odds), rng.choice((1, -1))))
    return tuple(w)


def is_identity(word) -> bool:
    return nf_from_word(word) == IDENTITY
