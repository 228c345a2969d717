"""Group words over the generators x0, x1, x2, ... of Thompson's group F.

A word is a tuple of :class:`Letter`.  The text format is a whitespace
separated list of tokens ``x<i>`` or ``x<i>^<e>`` (``e`` a non-zero integer,
expanded into ``|e|`` letters), e.g. ``"x0^-2 x1 x0^2"``.
"""

from __future__ import annotations

import re
from collections import Counter
from typing import Iterable, NamedTuple, Sequence


class Letter(NamedTuple):
    index: int
    sign: int = 1

    def inverse(self) -> "Letter":
        return Letter(self.index, -self.sign)

    def __str__(self) -> str:
        return f"x{self.index}" if self.sign == 1 else f"x{self.index}^-1"


Word = tuple  # tuple[Letter, ...]

_TOKEN = re.compile(r"^x(\d+)(?:\^(-?\d+))?$")


class WordSyntaxError(ValueError):
    pass


def letter(index: int, sign: int = 1) -> Letter:
    if index < 0:
        raise ValueError(f"generator index must be >= 0, got {index}")
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    return Letter(index, sign)


def parse_word(text: str) -> Word:
    """Parse ``"x0^-1 x1 x0"`` into a word.  ``"1"`` or ``""`` is the empty word."""
    letters: list[Letter] = []
    for tok in text.replace("*", " ").split():
        if tok in ("1", "e"):
            continue
        m = _TOKEN.match(tok)
        if m is None:
            raise WordSyntaxError(f"bad token {tok!r} in {text!r}")
        idx = int(m.group(1))
        exp = int(m.group(2)) if m.group(2) is not None else 1
        if exp == 0:
            raise WordSyntaxError(f"zero exponent in token {tok!r}")
        sign = 1 if exp > 0 else -1
        letters.extend([Letter(idx, sign)] * abs(exp))
    return tuple(letters)


def format_word(word: Iterable[Letter]) -> str:
    s = " ".join(str(a) for a in word)
    return s if s else "1"


def inverse_word(word: Sequence[Letter]) -> Word:
    return tuple(a.inverse() for a in reversed(word))


def power(word: Sequence[Letter], n: int) -> Word:
    if n >= 0:
        return tuple(word) * n
    return inverse_word(word) * (-n)


def conjugate(a: Sequence[Letter], b: Sequence[Letter]) -> Word:
    """``a^b = b^-1 a b``."""
    return inverse_word(b) + tuple(a) + tuple(b)


def commutator(a: Sequence[Letter], b: Sequence[Letter]) -> Word:
    """``[a, b] = a^-1 b^-1 a b``."""
    return inverse_word(a) + inverse_word(b) + tuple(a) + tuple(b)


def free_reduce(word: Sequence[Letter]) -> Word:
    out: list[Letter] = []
    for a in word:
        if out and out[-1].index == a.index and out[-1].sign == -a.sign:
            out.pop()
        else:
            out.append(a)
    return tuple(out)


def exponent_sums(word: Iterable[Letter]) -> Counter:
    """Signed letter count per generator index (missing indices count 0)."""
    sums: Counter = Counter()
    for a in word:
        sums[a.index] += a.sign
    return sums


def expand_generator(n: int) -> Word:
    """The two-generator word ``x0^-(n-1) x1 x0^(n-1)`` for ``x_n`` (n >= 2)."""
    if n <= 1:
        return (Letter(n, 1),)
    return power((Letter(0),), -(n - 1)) + (Letter(1),) + power((Letter(0),), n - 1)


def to_two_generator(word: Sequence[Letter]) -> Word:
    """Rewrite every ``x_n^{+-1}`` (n >= 2) over the alphabet {x0, x1}."""
    out: list[Letter] = []
    for a in word:
        w = expand_generator(a.index)
        out.extend(w if a.sign == 1 else inverse_word(w))
    return tuple(out)


X0 = (Letter(0),)
X1 = (Letter(1),)
XBAR1 = (Letter(1), Letter(0, -1))
