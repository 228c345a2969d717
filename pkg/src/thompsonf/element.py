"""Elements of Thompson's group F as normal forms and as tree pairs.

An element is stored as its normal form ``x_{i1}...x_{is} x_{jt}^-1...x_{j1}^-1``
(both index sequences non-decreasing, reduced).  Two independent routes reach
it:

* :func:`nf_from_word` rewrites letter by letter with the relations
  ``x_j x_i = x_i x_{j+1}`` (i < j) and cancels reducible pairs;
* :func:`multiply` composes tree pairs (common refinement, then reduction).

Positive elements correspond to infinite forests: appending ``x_i`` on the
right splits leaf ``i``.  The exponent of ``x_k`` in the normal form is the
length of the run of left edges above leaf ``k``.  A tree pair is obtained by
rolling each forest up along a right vine with one trailing leaf.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from typing import Iterable, Sequence

from .trees import LEAF, Tree, leaves
from .words import Letter, Word, format_word, parse_word


class NormalFormError(ValueError):
    pass


def _reducible_index(pos: Sequence[int], neg: Sequence[int]):
    ps, ns = set(pos), set(neg)
    for i in sorted(ps & ns):
        if i + 1 not in ps and i + 1 not in ns:
            return i
    return None


@dataclass(frozen=True, order=True)
class NormalForm:
    pos: tuple = ()
    neg: tuple = ()

    def __post_init__(self):
        for seq in (self.pos, self.neg):
            if any(i < 0 for i in seq):
                raise NormalFormError(f"negative index in {seq}")
            if any(a > b for a, b in zip(seq, seq[1:])):
                raise NormalFormError(f"indices not non-decreasing: {seq}")
        bad = _reducible_index(self.pos, self.neg)
        if bad is not None:
            raise NormalFormError(f"not reduced at index {bad}: {self.pos} / {self.neg}")

    def word(self) -> Word:
        return tuple(Letter(i, 1) for i in self.pos) + tuple(Letter(j, -1) for j in reversed(self.neg))

    def __str__(self) -> str:
        return format_word(self.word())

    def __repr__(self) -> str:
        return f"NormalForm({self})"

    def __mul__(self, other: "NormalForm") -> "NormalForm":
        return multiply(self, other)

    def inverse(self) -> "NormalForm":
        return NormalForm(self.neg, self.pos)

    def is_identity(self) -> bool:
        return not self.pos and not self.neg

    def length(self) -> int:
        return len(self.pos) + len(self.neg)

    def max_index(self) -> int:
        return max(self.pos + self.neg, default=-1)


IDENTITY = NormalForm()


def _reduce(pos: list, neg: list) -> None:
    """Cancel ``x_i ... x_i^-1`` pairs with no ``x_{i+1}^{+-1}`` (in place)."""
    while True:
        i = _reducible_index(pos, neg)
        if i is None:
            return
        # last occurrence of i; everything after it is >= i+2
        del pos[bisect_right(pos, i) - 1]
        del neg[bisect_right(neg, i) - 1]
        for seq in (pos, neg):
            for k in range(len(seq)):
                if seq[k] > i:
                    seq[k] -= 1


def _push_positive(seq: list, c: int) -> None:
    """``seq <- nf(seq . x_c)`` for a sorted positive sequence."""
    k = bisect_right(seq, c)
    for j in range(k, len(seq)):
        seq[j] += 1
    seq.insert(k, c)


def _prepend_positive(c: int, seq: list) -> None:
    """``seq <- nf(x_c . seq)`` for a sorted positive sequence."""
    k = 0
    while k < len(seq) and seq[k] < c:
        c += 1
        k += 1
    seq.insert(k, c)


def _right_mul_letter(pos: list, neg: list, a: Letter) -> None:
    if a.sign == 1:
        c = a.index
        for k, n in enumerate(neg):
            if n < c:
                c += 1
            elif n == c:
                del neg[k]
                break
            else:
                for j in range(k, len(neg)):
                    neg[j] += 1
                _push_positive(pos, c)
                break
        else:
            _push_positive(pos, c)
    else:
        _prepend_positive(a.index, neg)
    _reduce(pos, neg)


def nf_from_word(word) -> NormalForm:
    """Normal form of a word (a tuple of letters or its text form)."""
    if isinstance(word, str):
        word = parse_word(word)
    pos: list = []
    neg: list = []
    for a in word:
        _right_mul_letter(pos, neg, a)
    return NormalForm(tuple(pos), tuple(neg))


def positive_nf(indices: Iterable[int]) -> tuple:
    """Sorted normal form of the positive word ``x_{i1} x_{i2} ...``."""
    seq: list = []
    for i in indices:
        _push_positive(seq, i)
    return tuple(seq)


def generator_as_element(n: int) -> NormalForm:
    if n < 0:
        raise ValueError("generator index must be >= 0")
    return NormalForm((n,), ())


def is_positive(a: NormalForm) -> bool:
    return not a.neg


def invert(a: NormalForm) -> NormalForm:
    return a.inverse()


# ---------------------------------------------------------------- forests

def forest_from_positive(pos: Sequence[int]) -> list:
    """Forest (list of trees, trailing trivial trees dropped) of a positive normal form."""
    forest: list = []
    for i in pos:
        k = 0
        for t_idx, t in enumerate(forest):
            n = leaves(t)
            if i < k + n:
                forest[t_idx] = _split_leaf(t, i - k)
                break
            k += n
        else:
            forest.extend([LEAF] * (i - k))
            forest.append((LEAF, LEAF))
    return forest


def _split_leaf(t: Tree, i: int) -> Tree:
    if not t:
        return (LEAF, LEAF)
    nl = leaves(t[0])
    if i < nl:
        return (_split_leaf(t[0], i), t[1])
    return (t[0], _split_leaf(t[1], i - nl))


def leaf_exponents(t: Tree) -> list:
    """Per leaf, the number of consecutive left edges directly above it."""
    out: list = []

    def walk(node: Tree, run: int) -> None:
        if not node:
            out.append(run)
            return
        walk(node[0], run + 1)
        walk(node[1], 0)

    walk(t, 0)
    return out


def positive_from_forest(forest: Iterable[Tree]) -> tuple:
    exps: list = []
    for t in forest:
        exps.extend(leaf_exponents(t))
    return tuple(k for k, e in enumerate(exps) for _ in range(e))


def vine(forest: Sequence[Tree], total_leaves: int) -> Tree:
    """Roll a forest, padded with trivial trees to ``total_leaves`` leaves, onto a right vine."""
    trees = list(forest)
    have = sum(leaves(t) for t in trees)
    if have > total_leaves:
        raise ValueError("forest larger than requested leaf count")
    trees.extend([LEAF] * (total_leaves - have))
    t: Tree = LEAF
    for s in reversed(trees):
        t = (s, t)
    return t


def unvine(t: Tree) -> list:
    """Trees hanging off the right spine (the trailing leaf is dropped)."""
    out = []
    while t:
        out.append(t[0])
        t = t[1]
    return out


# ---------------------------------------------------------------- tree pairs

@dataclass(frozen=True)
class TreePair:
    """``domain`` carries the positive part, ``range`` the negative part.

    Leaf ``k`` of one tree is matched with leaf ``k`` of the other.
    """

    domain: Tree
    range: Tree

    def __post_init__(self):
        if leaves(self.domain) != leaves(self.range):
            raise ValueError("tree pair with unequal leaf counts")


def to_tree_pair(a: NormalForm) -> TreePair:
    fp = forest_from_positive(a.pos)
    fn = forest_from_positive(a.neg)
    n = max(sum(leaves(t) for t in fp), sum(leaves(t) for t in fn))
    return TreePair(vine(fp, n), vine(fn, n))


def from_tree_pair(p: TreePair) -> NormalForm:
    p = reduce_pair(p)
    # a reduced pair reads off an already reduced normal form; the
    # constructor re-checks
    return NormalForm(positive_from_forest(unvine(p.domain)), positive_from_forest(unvine(p.range)))


def _exposed_carets(t: Tree) -> set:
    """Leaf indices ``k`` such that leaves k, k+1 hang from one caret."""
    out = set()
    k = 0

    def walk(node: Tree) -> None:
        nonlocal k
        if not node:
            k += 1
            return
        if not node[0] and not node[1]:
            out.add(k)
            k += 2
            return
        walk(node[0])
        walk(node[1])

    walk(t)
    return out


def _remove_caret(t: Tree, k: int) -> Tree:
    if not t:
        raise ValueError("no caret at that position")
    if not t[0] and not t[1] and k == 0:
        return LEAF
    nl = leaves(t[0])
    if k < nl:
        return (_remove_caret(t[0], k), t[1])
    return (t[0], _remove_caret(t[1], k - nl))


def reduce_pair(p: TreePair) -> TreePair:
    d, r = p.domain, p.range
    while True:
        common = _exposed_carets(d) & _exposed_carets(r)
        if not common:
            return TreePair(d, r)
        k = max(common)
        d, r = _remove_caret(d, k), _remove_caret(r, k)


def tree_union(a: Tree, b: Tree) -> Tree:
    if not a:
        return b
    if not b:
        return a
    return (tree_union(a[0], b[0]), tree_union(a[1], b[1]))


def _expansions(t: Tree, target: Tree, out: list) -> None:
    """Subtrees of ``target`` hanging under each leaf of ``t`` (t is a subtree of target)."""
    if not t:
        out.append(target)
        return
    _expansions(t[0], target[0], out)
    _expansions(t[1], target[1], out)


def _hang(t: Tree, subs: list, pos: list) -> Tree:
    if not t:
        s = subs[pos[0]]
        pos[0] += 1
        return s
    return (_hang(t[0], subs, pos), _hang(t[1], subs, pos))


def hang(t: Tree, subs: list) -> Tree:
    """Attach ``subs[k]`` under leaf ``k`` of ``t``."""
    return _hang(t, subs, [0])


def compose_pairs(p: TreePair, q: TreePair) -> TreePair:
    """Tree pair of the product ``p q``."""
    u = tree_union(p.range, q.domain)
    a_subs: list = []
    _expansions(p.range, u, a_subs)
    b_subs: list = []
    _expansions(q.domain, u, b_subs)
    return reduce_pair(TreePair(hang(p.domain, a_subs), hang(q.range, b_subs)))


def multiply(a: NormalForm, b: NormalForm) -> NormalForm:
    if a.is_identity():
        return b
    if b.is_identity():
        return a
    return from_tree_pair(compose_pairs(to_tree_pair(a), to_tree_pair(b)))


def product(elements: Iterable[NormalForm]) -> NormalForm:
    out = IDENTITY
    for e in elements:
        out = multiply(out, e)
    return out


def common_right_translate(gs: Sequence[NormalForm]) -> NormalForm:
    """A positive ``g`` with every ``gi * g`` positive.

    ``g`` is the common refinement (tree-wise union) of the forests of the
    negative parts, i.e. their least common right multiple in M.
    """
    if not gs:
        raise ValueError("need at least one element")
    union: list = []
    for a in gs:
        f = forest_from_positive(a.neg)
        for i, t in enumerate(f):
            if i < len(union):
                union[i] = tree_union(union[i], t)
            else:
                union.append(t)
    g = NormalForm(positive_from_forest(union), ())
    for a in gs:
        if not is_positive(multiply(a, g)):
            raise AssertionError(f"common_right_translate post-check failed for {a}")
    return g


def check_relation(lhs, rhs) -> bool:
    return nf_from_word(lhs) == nf_from_word(rhs)


def parse_nf(text: str) -> NormalForm:
    return nf_from_word(parse_word(text))
