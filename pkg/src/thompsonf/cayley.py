"""Finite subgraphs of Cayley graphs of F and their boundary statistics.

Conventions (``A`` a multiset of ``m`` generators, each given as a word):

* right Cayley graph: the edge labelled ``a`` leaves ``g`` towards ``g a``;
* left Cayley graph: the edge labelled ``a`` leaves ``g`` towards ``a^-1 g``
  (reading ``a`` cancels it on the left).

Every vertex has ``2m`` outgoing directed edges in the full graph.  All
statistics are exact ``Fraction`` values and every snapshot checks
``density + cheeger == 2m`` and the boundary sandwich inequalities when it
is built.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence

from .element import IDENTITY, NormalForm, multiply, nf_from_word, parse_nf
from .words import parse_word


class ConsistencyError(AssertionError):
    """An identity that must hold exactly on every snapshot failed."""


# Counts every snapshot whose invariants were checked, and every failure.
AUDIT = {"snapshots": 0, "failures": 0}


@dataclass(frozen=True)
class GeneratingSet:
    side: str
    gens: tuple

    def __post_init__(self):
        if self.side not in ("left", "right"):
            raise ValueError("side must be 'left' or 'right'")
        if not self.gens:
            raise ValueError("need at least one generator")

    @classmethod
    def of(cls, side: str, *words) -> "GeneratingSet":
        return cls(side, tuple(parse_word(w) if isinstance(w, str) else tuple(w) for w in words))

    @property
    def m(self) -> int:
        return len(self.gens)

    def labels(self) -> list:
        """``(name, element)`` for each of the 2m directed labels."""
        out = []
        for j, w in enumerate(self.gens):
            g = nf_from_word(w)
            name = f"a{j}"
            out.append((name, g))
            out.append((name + "^-1", g.inverse()))
        return out

    def step(self, g: NormalForm, a: NormalForm) -> NormalForm:
        if self.side == "right":
            return multiply(g, a)
        return multiply(a.inverse(), g)


@dataclass
class SubgraphSnapshot:
    vertices: list
    edges: list
    m: int
    internal_edges: int
    boundary: set
    cheeger_boundary: int
    outer_boundary: Optional[int] = None
    labels: list = field(default_factory=list)

    @property
    def size(self) -> int:
        return len(self.vertices)

    @property
    def density(self) -> Fraction:
        return Fraction(self.internal_edges, len(self.vertices))

    @property
    def cheeger(self) -> Fraction:
        return Fraction(self.cheeger_boundary, len(self.vertices))

    def stats(self) -> dict:
        return {
            "size": self.size,
            "m": self.m,
            "internalDirectedEdges": self.internal_edges,
            "innerBoundary": len(self.boundary),
            "outerBoundary": self.outer_boundary,
            "cheegerBoundary": self.cheeger_boundary,
            "density": str(self.density),
            "cheeger": str(self.cheeger),
        }

    def check(self) -> None:
        AUDIT["snapshots"] += 1
        problems = []
        two_m = 2 * self.m
        if self.density + self.cheeger != two_m:
            problems.append("density + cheeger != 2m")
        nb, ns = len(self.boundary), self.cheeger_boundary
        if not (nb <= ns <= two_m * nb):
            problems.append("|dY| <= |d*Y| <= 2m|dY| fails")
        if self.outer_boundary is not None:
            no = self.outer_boundary
            if not (no <= ns <= two_m * no):
                problems.append("|doY| <= |d*Y| <= 2m|doY| fails")
        if problems:
            AUDIT["failures"] += 1
            raise ConsistencyError("; ".join(problems))

    def to_json(self) -> str:
        return json.dumps(
            {
                "m": self.m,
                "labels": self.labels,
                "vertices": [str(v) for v in self.vertices],
                "edges": [[str(u), a, str(v)] for u, a, v in self.edges],
                "boundary": sorted(str(v) for v in self.boundary),
                "stats": self.stats(),
            },
            indent=1,
        )


def snapshot_from_step(
    vertices: Iterable,
    labels: Sequence[str],
    step: Callable,
    m: Optional[int] = None,
    keep_edges: bool = True,
) -> SubgraphSnapshot:
    """Snapshot of ``vertices`` where ``step(v, label)`` returns the neighbour
    or ``None`` for an edge that leaves the set.

    Used for action-defined automata whose outside vertices are not
    identified, so the outer boundary is left unset.
    """
    verts = list(vertices)
    members = set(verts)
    if len(members) != len(verts):
        raise ValueError("duplicate vertices")
    if m is None:
        if len(labels) % 2:
            raise ValueError("labels must come in inverse pairs")
        m = len(labels) // 2
    edges: list = []
    internal = 0
    boundary = set()
    for v in verts:
        deg = 0
        for a in labels:
            w = step(v, a)
            if w is None:
                continue
            if w not in members:
                raise ConsistencyError(f"step left the vertex set: {v} --{a}--> {w}")
            deg += 1
            if keep_edges:
                edges.append((v, a, w))
        internal += deg
        if deg < 2 * m:
            boundary.add(v)
    snap = SubgraphSnapshot(verts, edges, m, internal, boundary, 2 * m * len(verts) - internal,
                            None, list(labels))
    snap.check()
    return snap


def build_subgraph(Y: Iterable[NormalForm], A: GeneratingSet) -> SubgraphSnapshot:
    verts = sorted(set(Y))
    if not verts:
        raise ValueError("Y must be non-empty")
    members = set(verts)
    labels = A.labels()
    edges = []
    boundary = set()
    outer = set()
    for v in verts:
        deg = 0
        for name, a in labels:
            w = A.step(v, a)
            if w in members:
                deg += 1
                edges.append((v, name, w))
            else:
                outer.add(w)
        if deg < 2 * A.m:
            boundary.add(v)
    internal = len(edges)
    snap = SubgraphSnapshot(verts, edges, A.m, internal, boundary,
                            2 * A.m * len(verts) - internal, len(outer), [n for n, _ in labels])
    snap.check()
    return snap


def neighbours(g: NormalForm, A: GeneratingSet) -> list:
    return [A.step(g, a) for _, a in A.labels()]


def ball(center: NormalForm, r: int, A: GeneratingSet) -> set:
    """All vertices at distance <= r from ``center``."""
    return set(ball_distances(center, r, A))


def ball_distances(center: NormalForm, r: int, A: GeneratingSet) -> dict:
    if r < 0:
        raise ValueError("radius must be >= 0")
    labels = [a for _, a in A.labels()]
    dist = {center: 0}
    queue = deque([center])
    while queue:
        g = queue.popleft()
        if dist[g] == r:
            continue
        for a in labels:
            h = A.step(g, a)
            if h not in dist:
                dist[h] = dist[g] + 1
                queue.append(h)
    return dist


def doubling_check(Y: Iterable[NormalForm], A: Sequence, c, variant: str = "plain"):
    """Compare ``|A Y|`` with ``c |Y|``; returns ``(|AY| < c|Y|, |AY|)``.

    ``variant="with-inverses-and-identity"`` uses ``(A^{+-1} u {1}) Y``.
    """
    Y = set(Y)
    if not Y:
        raise ValueError("Y must be non-empty")
    elems = [w if isinstance(w, NormalForm) else nf_from_word(w) for w in A]
    if variant == "with-inverses-and-identity":
        elems = elems + [e.inverse() for e in elems] + [IDENTITY]
    elif variant != "plain":
        raise ValueError(f"unknown variant {variant!r}")
    prod = {multiply(a, y) for a in elems for y in Y}
    return len(prod) < Fraction(c) * len(Y), len(prod)


# ------------------------------------------------------------------ flows

def verify_flow(snapshot, f: dict, C, eps, vertex_scope: str = "all") -> bool:
    """Check antisymmetry, ``|f(e)| <= C`` and inflow >= eps on the scope.

    ``f`` maps directed edges ``(u, label, v)`` to numbers and must cover
    every edge of the snapshot.  ``vertex_scope`` is ``"all"``,
    ``"interior"`` (non-boundary vertices) or an explicit collection.
    """
    edges = list(snapshot.edges)
    edge_set = set(edges)
    for e in edges:
        if e not in f:
            return False
    for (u, a, v), val in f.items():
        if (u, a, v) not in edge_set:
            return False
        inv = (v, _inv(a), u)
        if inv in edge_set and f.get(inv) != -val:
            return False
        if abs(val) > C:
            return False
    if vertex_scope == "all":
        scope = set(snapshot.vertices)
    elif vertex_scope == "interior":
        scope = set(snapshot.vertices) - set(snapshot.boundary)
    else:
        scope = set(vertex_scope)
    inflow = {v: 0 for v in scope}
    for (u, a, v), val in f.items():
        if v in inflow:
            inflow[v] += val
    return all(inflow[v] >= eps for v in scope)


def _inv(label: str) -> str:
    return label[:-3] if label.endswith("^-1") else label + "^-1"


@dataclass
class EvacGraph:
    """Plain directed graph with a designated boundary, for flow experiments."""

    vertices: list
    edges: list
    boundary: set


def parse_snapshot_json(text: str):
    """Load a snapshot exported by :meth:`SubgraphSnapshot.to_json`.

    Vertex names stay strings.  An explicit ``boundary`` list wins over the
    degree rule; without it, vertices of out-degree < 2m are boundary.
    """
    data = json.loads(text)
    verts = [str(v) for v in data["vertices"]]
    edges = [(str(u), str(a), str(v)) for u, a, v in data.get("edges", [])]
    if "boundary" in data and data["boundary"] is not None:
        boundary = {str(v) for v in data["boundary"]}
    else:
        m = int(data["m"])
        deg = {v: 0 for v in verts}
        for u, _, _ in edges:
            deg[u] += 1
        boundary = {v for v in verts if deg[v] < 2 * m}
    vs = set(verts)
    for u, _, v in edges:
        if u not in vs or v not in vs:
            raise ValueError(f"edge ({u}, {v}) leaves the vertex set")
    return EvacGraph(verts, edges, boundary)


def snapshot_of_elements(words: Iterable[str], A: GeneratingSet) -> SubgraphSnapshot:
    return build_subgraph([parse_nf(w) for w in words], A)

