"""Evacuation schemes on finite subgraphs via integral max-flow.

Every vertex supplies one unit, each directed edge carries at most ``C``
units, and boundary vertices absorb for free.  A scheme exists iff the
maximum flow saturates all supplies; the witness paths come from a flow
decomposition after cancelling flow on mutually inverse edges.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Optional


class Dinic:
    """Dinic max-flow on integer capacities."""

    def __init__(self, n: int):
        self.n = n
        self.graph: list = [[] for _ in range(n)]
        self.to: list = []
        self.cap: list = []

    def add_edge(self, u: int, v: int, c: int) -> int:
        self.graph[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(c)
        self.graph[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(0)
        return len(self.to) - 2

    def _bfs(self, s: int, t: int) -> bool:
        self.level = [-1] * self.n
        self.level[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            for e in self.graph[u]:
                if self.cap[e] > 0 and self.level[self.to[e]] < 0:
                    self.level[self.to[e]] = self.level[u] + 1
                    q.append(self.to[e])
        return self.level[t] >= 0

    def _dfs(self, s: int, t: int, pushed: int) -> int:
        # iterative augmenting-path search in the level graph
        path: list = []
        u = s
        while True:
            if u == t:
                f = min(self.cap[e] for e in path)
                f = min(f, pushed)
                for e in path:
                    self.cap[e] -= f
                    self.cap[e ^ 1] += f
                return f
            adv = False
            while self.it[u] < len(self.graph[u]):
                e = self.graph[u][self.it[u]]
                v = self.to[e]
                if self.cap[e] > 0 and self.level[v] == self.level[u] + 1:
                    path.append(e)
                    u = v
                    adv = True
                    break
                self.it[u] += 1
            if not adv:
                if not path:
                    return 0
                self.level[u] = -1
                e = path.pop()
                u = self.to[e ^ 1]
                self.it[u] += 1

    def max_flow(self, s: int, t: int) -> int:
        flow = 0
        inf = sum(self.cap) + 1
        while self._bfs(s, t):
            self.it = [0] * self.n
            while True:
                f = self._dfs(s, t, inf)
                if f == 0:
                    break
                flow += f
        return flow

    def flow_on(self, e: int) -> int:
        return self.cap[e ^ 1]


@dataclass
class EvacScheme:
    capacity: int
    paths: dict = field(default_factory=dict)

    def usage(self) -> Counter:
        c: Counter = Counter()
        for p in self.paths.values():
            c.update(p)
        return c

    def is_valid(self, graph) -> bool:
        edges = Counter(graph.edges)
        boundary = set(graph.boundary)
        if set(self.paths) != set(graph.vertices):
            return False
        for v, p in self.paths.items():
            at = v
            for u, a, w in p:
                if u != at or (u, a, w) not in edges:
                    return False
                at = w
            if at not in boundary:
                return False
        return all(n <= self.capacity for n in self.usage().values())

    def uses_inverse_pair(self) -> bool:
        used = set(self.usage())
        return any((w, _inv(a), u) in used for u, a, w in used)


def _inv(label: str) -> str:
    return label[:-3] if label.endswith("^-1") else label + "^-1"


def evac_exists(graph, C: int):
    """Decide whether an evacuation scheme with constant ``C`` exists.

    Returns ``(True, scheme)`` or ``(False, None)``.  ``graph`` needs
    ``vertices``, ``edges`` (directed ``(u, label, v)``) and ``boundary``.
    """
    if C < 1:
        raise ValueError("C must be a positive integer")
    verts = list(graph.vertices)
    if not verts:
        raise ValueError("empty graph")
    idx = {v: i for i, v in enumerate(verts)}
    boundary = set(graph.boundary)
    n = len(verts)
    src, snk = n, n + 1
    net = Dinic(n + 2)
    for v in verts:
        net.add_edge(src, idx[v], 1)
        if v in boundary:
            net.add_edge(idx[v], snk, n)
    edges = list(graph.edges)
    eid = [net.add_edge(idx[u], idx[w], C) for u, _, w in edges]
    if net.max_flow(src, snk) < n:
        return False, None

    flow = {e: net.flow_on(k) for e, k in zip(edges, eid)}
    # cancel flow running both ways along an edge and its inverse
    pos = {e: i for i, e in enumerate(edges)}
    for (u, a, w), f in list(flow.items()):
        inv = (w, _inv(a), u)
        if f and inv in pos and flow.get(inv):
            d = min(f, flow[inv])
            flow[(u, a, w)] -= d
            flow[inv] -= d
    return True, _decompose(verts, edges, flow, boundary, C)


def _decompose(verts, edges, flow, boundary, C) -> EvacScheme:
    out_edges: dict = {v: [] for v in verts}
    for e in edges:
        if flow[e] > 0:
            out_edges[e[0]].append(e)
    rem = dict(flow)
    # remaining absorption at each boundary vertex
    absorb = Counter({v: 1 for v in boundary})
    for (u, _, w), f in flow.items():
        if w in boundary:
            absorb[w] += f
        if u in boundary:
            absorb[u] -= f
    scheme = EvacScheme(C)
    for v in verts:
        path: list = []
        seen = {v: 0}
        at = v
        while not (at in boundary and absorb[at] > 0):
            e = next(e for e in out_edges[at] if rem[e] > 0)
            rem[e] -= 1
            path.append(e)
            at = e[2]
            if at in seen:
                # drop the cycle; its units are no longer routed
                cut = seen[at]
                for x in path[cut:]:
                    seen.pop(x[2], None)
                path = path[:cut]
                seen[at] = cut
            else:
                seen[at] = len(path)
        absorb[at] -= 1
        scheme.paths[v] = path
    return scheme
