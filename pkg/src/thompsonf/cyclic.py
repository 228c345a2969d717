"""Word problem in F over {x0, x1} without leaving the two-letter alphabet.

The word is written on a circle.  Vertices get weights: crossing ``x0`` adds
one, ``x0^-1`` subtracts one, ``x1^{+-1}`` keeps the weight.  The
``x1^{+-1}`` edges of maximal weight are renamed to ``x0^{+-1}``; the word is
trivial iff the exponent sums stay zero until no ``x1`` letter is left.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .words import Letter, exponent_sums, format_word, free_reduce, parse_word


class BalanceError(ValueError):
    """The x0 exponent sum is non-zero, so weights do not close up."""


class IterationCapExceeded(RuntimeError):
    pass


def _check_alphabet(word) -> tuple:
    if isinstance(word, str):
        word = parse_word(word)
    word = tuple(word)
    for a in word:
        if a.index not in (0, 1):
            raise ValueError(f"cyclic algorithm works over x0, x1 only; got {a}")
    return word


def weights(word) -> list:
    """Weight of the vertex before each letter, base vertex weight 0."""
    word = _check_alphabet(word)
    w = [0]
    for a in word:
        w.append(w[-1] + (a.sign if a.index == 0 else 0))
    if w[-1] != 0:
        raise BalanceError(f"x0 exponent sum is {w[-1]}, weights are inconsistent")
    return w[:-1]


def max_weight_positions(word) -> list:
    word = _check_alphabet(word)
    w = weights(word)
    x1_pos = [i for i, a in enumerate(word) if a.index == 1]
    if not x1_pos:
        return []
    top = max(w[i] for i in x1_pos)
    return [i for i in x1_pos if w[i] == top]


def transform_T(word) -> tuple:
    """Rename every maximal-weight ``x1^{+-1}`` letter to ``x0^{+-1}``."""
    word = _check_alphabet(word)
    hit = set(max_weight_positions(word))
    if not hit:
        raise ValueError("transform_T needs at least one x1 letter")
    return tuple(Letter(0, a.sign) if i in hit else a for i, a in enumerate(word))


@dataclass
class TraceStep:
    word: str
    renamed: list
    sums: dict

    def as_dict(self) -> dict:
        return {"word": self.word, "renamedPositions": self.renamed, "sums": self.sums}


@dataclass
class CyclicVerdict:
    trivial: bool
    iterations: int
    trace: list = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "trivial": self.trivial,
            "iterations": self.iterations,
            "trace": [s.as_dict() for s in self.trace],
        }


def decide_trivial(word, reduce_between: bool = False) -> CyclicVerdict:
    """Iterate ``transform_T`` until no x1 letter is left or a sum breaks."""
    word = _check_alphabet(word)
    trace: list = []
    cap = len(word) + 1
    iterations = 0
    while True:
        s = exponent_sums(word)
        sums = {"x0": s[0], "x1": s[1]}
        if s[0] != 0 or s[1] != 0:
            trace.append(TraceStep(format_word(word), [], sums))
            return CyclicVerdict(False, iterations, trace)
        hit = max_weight_positions(word)
        trace.append(TraceStep(format_word(word), hit, sums))
        if not hit:
            return CyclicVerdict(True, iterations, trace)
        if iterations >= cap:
            raise IterationCapExceeded(f"no termination after {cap} rounds on {format_word(word)}")
        word = transform_T(word)
        if reduce_between:
            word = free_reduce(word)
        iterations += 1
