"""Triples of trees, the graphs Gamma_n and the scattered-tree model.

A marked forest ``T_-k .. T_-1, *T_0, T_1 .. T_m`` is completed to a triple by
adding a dot at each end and rolling the side trees up towards ``T_0``.  The
graph Gamma_n has all triples with ``n`` leaves as vertices; its edges are
the left actions of x0, x1 and x1-bar described below.  The scattered graph
cuts every tree with ``n`` carets into marked forests (one per tree vertex)
and glues equal forests together.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from math import factorial
from typing import Iterable, NamedTuple, Optional

from .trees import (
    LEAF, X0, X0I, X1, X1I, XB1, XB1I, MarkedForest, Tree, catalan, enumerate_trees,
    inverse_label, leaves, tree_str,
)


class TreeTriple(NamedTuple):
    left: Tree
    middle: Tree
    right: Tree

    def leaf_count(self) -> int:
        return leaves(self.left) + leaves(self.middle) + leaves(self.right)

    def key(self) -> str:
        return f"{tree_str(self.left)} | {tree_str(self.middle)} | {tree_str(self.right)}"


def marked_to_triple(f: MarkedForest) -> TreeTriple:
    left: Tree = LEAF
    for t in f.trees[:f.mark]:
        left = (left, t)
    right: Tree = LEAF
    for t in reversed(f.trees[f.mark + 1:]):
        right = (t, right)
    return TreeTriple(left, f.marked, right)


def triple_to_marked(t: TreeTriple) -> MarkedForest:
    lefts = []
    node = t.left
    while node:
        lefts.append(node[1])
        node = node[0]
    rights = []
    node = t.right
    while node:
        rights.append(node[0])
        node = node[1]
    trees = tuple(reversed(lefts)) + (t.middle,) + tuple(rights)
    return MarkedForest(trees, len(lefts))


def triple_count(n: int) -> int:
    """Number of triples with ``n`` leaves, ``c_{n-1} - c_{n-2}``."""
    if n < 3:
        raise ValueError("a triple has at least 3 leaves")
    return catalan(n - 1) - catalan(n - 2)


def triple_count_closed(n: int) -> int:
    """The factorial form ``3 (2n-4)! / (n! (n-3)!)``."""
    if n < 3:
        raise ValueError("a triple has at least 3 leaves")
    num = 3 * factorial(2 * n - 4)
    den = factorial(n) * factorial(n - 3)
    if num % den:
        raise ArithmeticError("closed form is not integral")
    return num // den


def enumerate_triples(n: int) -> list:
    out = []
    for a in range(1, n - 1):
        for b in range(1, n - a):
            c = n - a - b
            for l in enumerate_trees(a):
                for m in enumerate_trees(b):
                    for r in enumerate_trees(c):
                        out.append(TreeTriple(l, m, r))
    return out


def triple_action(t: TreeTriple, label: str) -> Optional[TreeTriple]:
    """Left action of a generator on a triple (None when not applicable)."""
    l, m, r = t
    if label == X0:
        return TreeTriple(l[0], l[1], (m, r)) if l else None
    if label == X0I:
        return TreeTriple((l, m), r[0], r[1]) if r else None
    if label == X1:
        return TreeTriple(l, m[0], (m[1], r)) if m else None
    if label == X1I:
        return TreeTriple(l, (m, r[0]), r[1]) if r else None
    if label == XB1:
        return TreeTriple((l, m[0]), m[1], r) if m else None
    if label == XB1I:
        return TreeTriple(l[0], (l[1], m), r) if l else None
    raise ValueError(f"label {label!r} does not act on triples")


@dataclass
class LabelledGraph:
    """Directed labelled graph closed under edge inversion (a Serre graph).

    ``edges`` holds both orientations: ``(u, a, v)`` together with
    ``(v, a^-1, u)``.
    """

    vertices: set = field(default_factory=set)
    edges: set = field(default_factory=set)
    multiplicity: Optional[Counter] = None

    def add_edge(self, u, label: str, v) -> None:
        self.vertices.add(u)
        self.vertices.add(v)
        self.edges.add((u, label, v))
        self.edges.add((v, inverse_label(label), u))

    def geometric_edges(self) -> set:
        return {e for e in self.edges if not e[1].endswith("^-1")}

    def degree(self, v) -> int:
        return sum(1 for e in self.edges if e[0] == v)

    def degrees(self) -> Counter:
        d: Counter = Counter({v: 0 for v in self.vertices})
        for u, _, _ in self.edges:
            d[u] += 1
        return d

    def restrict_labels(self, labels: Iterable[str]) -> "LabelledGraph":
        keep = set(labels) | {inverse_label(a) for a in labels}
        return LabelledGraph(set(self.vertices), {e for e in self.edges if e[1] in keep})

    def relabel(self, mapping) -> "LabelledGraph":
        return LabelledGraph(
            {mapping(v) for v in self.vertices},
            {(mapping(u), a, mapping(v)) for u, a, v in self.edges},
        )

    def check_serre(self) -> bool:
        for u, a, v in self.edges:
            if (v, inverse_label(a), u) not in self.edges:
                return False
            if a == inverse_label(a):
                return False
            if u not in self.vertices or v not in self.vertices:
                return False
        return True

    def to_json(self) -> str:
        return json.dumps(
            {
                "vertices": sorted(str(v) for v in self.vertices),
                "edges": sorted([str(u), a, str(v)] for u, a, v in self.edges),
            },
            indent=1,
        )


def gamma_n(n: int, labels=(X0, X1, XB1)) -> LabelledGraph:
    g = LabelledGraph()
    for t in enumerate_triples(n):
        g.vertices.add(t.key())
        for a in labels:
            s = triple_action(t, a)
            if s is not None:
                g.add_edge(t.key(), a, s.key())
    return g


def _node_forests(t: Tree):
    """Yield ``(address, marked forest)`` for every vertex of ``t``.

    The forest is what is left after deleting the carets on the path from
    the root down to the vertex; the subtree at the vertex is marked.
    """
    stack = [((), t, (), ())]
    while stack:
        addr, node, lefts, rights = stack.pop()
        yield addr, node, MarkedForest(lefts + (node,) + rights, len(lefts))
        if node:
            stack.append((addr + (0,), node[0], lefts, (node[1],) + rights))
            stack.append((addr + (1,), node[1], lefts + (node[0],), rights))


def scattered_graph(n: int) -> LabelledGraph:
    """Quotient of all trees with ``n`` carets by equality of marked forests.

    Left caret segments carry ``x1``, right ones ``xb1``, oriented downwards.
    ``multiplicity`` counts how many tree vertices map to each class.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    g = LabelledGraph(multiplicity=Counter())
    for t in enumerate_trees(n + 1):
        keys = {}
        for addr, _node, f in _node_forests(t):
            keys[addr] = str(f)
            g.vertices.add(keys[addr])
            g.multiplicity[keys[addr]] += 1
        for addr, key in keys.items():
            if addr + (0,) in keys:
                g.add_edge(key, X1, keys[addr + (0,)])
                g.add_edge(key, XB1, keys[addr + (1,)])
    return g


def scattered_vertex_multiplicity(f: MarkedForest) -> int:
    """Expected number of copies: ``(s+t)! / (s! t!)`` for s trees left, t right."""
    s, t = f.mark, len(f.trees) - f.mark - 1
    return factorial(s + t) // (factorial(s) * factorial(t))


def scattered_to_gamma_key(key: str) -> str:
    from .trees import parse_marked_forest

    return marked_to_triple(parse_marked_forest(key)).key()
