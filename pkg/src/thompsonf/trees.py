"""Rooted binary trees, forests and marked forests.

Trees are nested tuples: the trivial tree (a dot) is ``()`` and a caret over
``left`` and ``right`` is ``(left, right)``.  They are hashable, immutable and
compare structurally, which is all the graph code needs.  The canonical text
form is ``.`` for a leaf and ``(L R)`` for a caret.

Marked forests carry the partial left actions of the generators used by the
Belk-Brown automata: ``x0^{+-1}`` moves the marker, ``x1``/``xb1`` split the
marked tree, ``x1^-1``/``xb1^-1`` join it with a neighbour, and ``x2^{+-1}``
is the composite ``x0^-1, x1^{+-1}, x0``.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Iterator, NamedTuple, Optional

Tree = tuple
LEAF: Tree = ()
CARET: Tree = (LEAF, LEAF)


def caret(left: Tree, right: Tree) -> Tree:
    return (left, right)


def is_leaf(t: Tree) -> bool:
    return not t


@lru_cache(maxsize=None)
def leaves(t: Tree) -> int:
    return 1 if not t else leaves(t[0]) + leaves(t[1])


@lru_cache(maxsize=None)
def height(t: Tree) -> int:
    return 0 if not t else max(height(t[0]), height(t[1])) + 1


def carets(t: Tree) -> int:
    return leaves(t) - 1


def tree_str(t: Tree) -> str:
    if not t:
        return "."
    return f"({tree_str(t[0])} {tree_str(t[1])})"


def parse_tree(text: str) -> Tree:
    toks = text.replace("(", " ( ").replace(")", " ) ").split()
    pos = 0

    def walk() -> Tree:
        nonlocal pos
        if pos >= len(toks):
            raise ValueError(f"truncated tree {text!r}")
        tok = toks[pos]
        pos += 1
        if tok == ".":
            return LEAF
        if tok != "(":
            raise ValueError(f"unexpected token {tok!r} in {text!r}")
        left = walk()
        right = walk()
        if pos >= len(toks) or toks[pos] != ")":
            raise ValueError(f"expected ')' in {text!r}")
        pos += 1
        return (left, right)

    t = walk()
    if pos != len(toks):
        raise ValueError(f"trailing input in {text!r}")
    return t


def catalan(n: int) -> int:
    if n < 0:
        raise ValueError("n must be >= 0")
    return comb(2 * n, n) // (n + 1)


@lru_cache(maxsize=None)
def _trees(n: int, k: Optional[int]) -> tuple:
    if n < 1 or (k is not None and k < 0):
        return ()
    if n == 1:
        return (LEAF,)
    if k == 0:
        return ()
    sub = None if k is None else k - 1
    out = []
    for a in range(1, n):
        for left in _trees(a, sub):
            for right in _trees(n - a, sub):
                out.append((left, right))
    return tuple(out)


def enumerate_trees(n: int, max_height: Optional[int] = None) -> tuple:
    """All trees with ``n`` leaves and height <= ``max_height`` (None: unbounded)."""
    if n < 1:
        raise ValueError("a tree has at least one leaf")
    return _trees(n, max_height)


def enumerate_forests(n: int, max_height: Optional[int] = None) -> Iterator[tuple]:
    """All forests (non-empty tree sequences) with ``n`` leaves in total."""
    if n == 0:
        return
    for first in range(1, n + 1):
        heads = _trees(first, max_height)
        if not heads:
            continue
        if first == n:
            for t in heads:
                yield (t,)
            continue
        rests = list(enumerate_forests(n - first, max_height))
        for t in heads:
            for rest in rests:
                yield (t,) + rest


def count_forests(n: int, max_height: Optional[int] = None) -> int:
    """Number of forests with ``n`` leaves, by a convolution over first-tree sizes."""
    counts = [1] + [0] * n
    for total in range(1, n + 1):
        counts[total] = sum(
            len(_trees(first, max_height)) * counts[total - first]
            for first in range(1, total + 1)
        )
    return counts[n]


class MarkedForest(NamedTuple):
    trees: tuple
    mark: int

    @property
    def marked(self) -> Tree:
        return self.trees[self.mark]

    def leaf_count(self) -> int:
        return sum(leaves(t) for t in self.trees)

    def __str__(self) -> str:
        parts = [tree_str(t) for t in self.trees]
        parts[self.mark] = "*" + parts[self.mark]
        return "[" + " ".join(parts) + "]"


def marked_forest(trees, mark: int) -> MarkedForest:
    trees = tuple(trees)
    if not trees:
        raise ValueError("a forest has at least one tree")
    if not 0 <= mark < len(trees):
        raise ValueError(f"mark {mark} out of range for {len(trees)} trees")
    return MarkedForest(trees, mark)


def parse_marked_forest(text: str) -> MarkedForest:
    """Inverse of ``str(MarkedForest)``: ``"[. *(. .) .]"``."""
    body = text.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise ValueError(f"marked forest must be bracketed: {text!r}")
    body = body[1:-1]
    trees, mark, depth, start = [], None, 0, 0
    chunks = []
    for i, ch in enumerate(body + " "):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == " " and depth == 0:
            chunk = body[start:i].strip()
            if chunk:
                chunks.append(chunk)
            start = i + 1
    for j, chunk in enumerate(chunks):
        if chunk.startswith("*"):
            if mark is not None:
                raise ValueError(f"two marks in {text!r}")
            mark = j
            chunk = chunk[1:]
        trees.append(parse_tree(chunk))
    if mark is None:
        raise ValueError(f"no mark in {text!r}")
    return marked_forest(trees, mark)


def enumerate_marked_forests(n: int, max_height: Optional[int] = None) -> Iterator[MarkedForest]:
    for f in enumerate_forests(n, max_height):
        for i in range(len(f)):
            yield MarkedForest(f, i)


# Action labels.  ``xb1`` is x1-bar = x1 x0^-1.
X0, X0I, X1, X1I, XB1, XB1I, X2, X2I = (
    "x0", "x0^-1", "x1", "x1^-1", "xb1", "xb1^-1", "x2", "x2^-1",
)
LABELS = (X0, X0I, X1, X1I, XB1, XB1I, X2, X2I)
_INVERSE = {X0: X0I, X0I: X0, X1: X1I, X1I: X1, XB1: XB1I, XB1I: XB1, X2: X2I, X2I: X2}


def inverse_label(label: str) -> str:
    return _INVERSE[label]


def _fits(t: Tree, cap: Optional[int]) -> bool:
    return cap is None or height(t) < cap


def apply_generator(f: MarkedForest, label: str, height_cap: Optional[int] = None) -> Optional[MarkedForest]:
    """Partial left action of ``label`` on ``f``; ``None`` when not accepted.

    ``height_cap`` bounds caret-adding moves only: both trees being joined
    must have height < cap.
    """
    trees, i = f.trees, f.mark
    if label == X0:
        return MarkedForest(trees, i - 1) if i > 0 else None
    if label == X0I:
        return MarkedForest(trees, i + 1) if i + 1 < len(trees) else None
    if label == X1 or label == XB1:
        t = trees[i]
        if not t:
            return None
        new = trees[:i] + (t[0], t[1]) + trees[i + 1:]
        return MarkedForest(new, i if label == X1 else i + 1)
    if label == X1I:
        if i + 1 >= len(trees):
            return None
        t, r = trees[i], trees[i + 1]
        if not (_fits(t, height_cap) and _fits(r, height_cap)):
            return None
        return MarkedForest(trees[:i] + ((t, r),) + trees[i + 2:], i)
    if label == XB1I:
        if i == 0:
            return None
        l, t = trees[i - 1], trees[i]
        if not (_fits(l, height_cap) and _fits(t, height_cap)):
            return None
        return MarkedForest(trees[:i - 1] + ((l, t),) + trees[i + 1:], i - 1)
    if label == X2 or label == X2I:
        mid = X1 if label == X2 else X1I
        g = apply_generator(f, X0I, height_cap)
        if g is not None:
            g = apply_generator(g, mid, height_cap)
        if g is not None:
            g = apply_generator(g, X0, height_cap)
        return g
    raise ValueError(f"unknown label {label!r}")


def apply_word(f: MarkedForest, labels, height_cap: Optional[int] = None) -> Optional[MarkedForest]:
    """Apply labels in sequence (the path reading the word left to right)."""
    for lab in labels:
        if f is None:
            return None
        f = apply_generator(f, lab, height_cap)
    return f
