"""Independent reference implementations used only by the tests.

* ``PLMap``: F as piecewise-linear homeomorphisms of [0, 1] with dyadic
  breakpoints, so a word is trivial iff its map is the identity.  Shares no
  code with the normal-form machinery.
* ``brute_evac``: exhaustive search over families of simple paths.
"""

from __future__ import annotations

import random
from bisect import bisect_right
from fractions import Fraction as Fr
from functools import lru_cache


class PLMap:
    __slots__ = ("xs", "ys")

    def __init__(self, pts):
        pts = sorted(pts)
        xs, ys = [pts[0][0]], [pts[0][1]]
        for x, y in pts[1:]:
            if x == xs[-1]:
                continue
            xs.append(x)
            ys.append(y)
        # drop collinear interior points
        i = 1
        while i < len(xs) - 1:
            s1 = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - 1])
            s2 = (ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i])
            if s1 == s2:
                del xs[i], ys[i]
            else:
                i += 1
        self.xs, self.ys = tuple(xs), tuple(ys)

    def __call__(self, t):
        return _interp(self.xs, self.ys, t)

    def inv(self, t):
        return _interp(self.ys, self.xs, t)

    def then(self, g: "PLMap") -> "PLMap":
        """Apply self first, then g."""
        xs = set(self.xs) | {self.inv(y) for y in g.xs}
        return PLMap([(x, g(self(x))) for x in xs])

    def inverse(self) -> "PLMap":
        return PLMap(list(zip(self.ys, self.xs)))

    def is_identity(self) -> bool:
        return self.xs == (0, 1) and self.ys == (0, 1)

    def __eq__(self, other):
        return self.xs == other.xs and self.ys == other.ys

    def __hash__(self):
        return hash((self.xs, self.ys))


def _interp(xs, ys, t):
    if t <= xs[0]:
        return ys[0]
    if t >= xs[-1]:
        return ys[-1]
    j = bisect_right(xs, t) - 1
    if xs[j] == t:
        return ys[j]
    return ys[j] + (ys[j + 1] - ys[j]) * (t - xs[j]) / (xs[j + 1] - xs[j])


@lru_cache(maxsize=None)
def generator_map(n: int) -> PLMap:
    """x_n: identity on [0, 1 - 2^-n], a scaled copy of x_0 after that."""
    a = 1 - Fr(1, 2 ** n)
    w = 1 - a
    base = [(Fr(0), Fr(0)), (Fr(1, 2), Fr(1, 4)), (Fr(3, 4), Fr(1, 2)), (Fr(1), Fr(1))]
    pts = [(Fr(0), Fr(0))] + [(a + w * x, a + w * y) for x, y in base]
    return PLMap(pts)


def word_map(word) -> PLMap:
    """Compose so that the word ``u v`` means ``v`` applied after ``u`` on the
    right: t . (u v) = (t . u) . v.  The product ``x_j x_i`` maps to ``x_i``
    applied first, which is the convention in which ``x_1 x_0 = x_0 x_2``.
    """
    f = PLMap([(Fr(0), Fr(0)), (Fr(1), Fr(1))])
    for a in reversed(tuple(word)):
        g = generator_map(a.index)
        f = f.then(g if a.sign > 0 else g.inverse())
    return f


def pl_trivial(word) -> bool:
    return word_map(word).is_identity()


# ------------------------------------------------------------ evacuation

def _simple_paths(v, out, boundary, limit=20000):
    paths = []
    stack = [(v, [], {v})]
    while stack:
        at, path, seen = stack.pop()
        if at in boundary:
            paths.append(tuple(path))
            if not path:
                # the empty path dominates every other choice for a boundary vertex
                return [()]
            continue
        for e in out.get(at, ()):
            w = e[2]
            if w not in seen:
                stack.append((w, path + [e], seen | {w}))
        if len(paths) > limit:
            raise RuntimeError("too many paths for the brute-force oracle")
    return sorted(paths, key=len)


def brute_evac(vertices, edges, boundary, C: int) -> bool:
    """Is there a family of paths (one per vertex, ending on the boundary)
    using every directed edge at most ``C`` times?

    Simple paths that stop at the first boundary vertex suffice: cutting a
    loop or a tail never increases edge usage.  The search branches on the
    vertex with the fewest paths that still fit, and gives up on a branch
    once the edges entering the boundary cannot carry the vertices left.
    """
    out: dict = {}
    for e in edges:
        out.setdefault(e[0], []).append(e)
    boundary = set(boundary)
    options = {}
    for v in vertices:
        if v in boundary:
            continue
        ps = _simple_paths(v, out, boundary)
        if not ps:
            return False
        options[v] = ps
    entry = [e for e in edges if e[0] not in boundary and e[2] in boundary]
    use: dict = {}

    def fits(p):
        return all(use.get(e, 0) < C for e in p)

    def go(left):
        if not left:
            return True
        if sum(C - use.get(e, 0) for e in entry) < len(left):
            return False
        best, best_opts = None, None
        for v in left:
            opts = [p for p in options[v] if fits(p)]
            if not opts:
                return False
            if best is None or len(opts) < len(best_opts):
                best, best_opts = v, opts
        rest = left - {best}
        for p in best_opts:
            for e in p:
                use[e] = use.get(e, 0) + 1
            ok = go(rest)
            for e in p:
                use[e] -= 1
            if ok:
                return True
        return False

    return go(frozenset(options))


def random_labelled_graph(rng: random.Random, n: int, labels=("a0", "a1"), keep=0.7):
    """Each label is a random partial injection; both orientations are edges."""
    verts = list(range(n))
    edges = []
    for a in labels:
        perm = verts[:]
        rng.shuffle(perm)
        for u, v in zip(verts, perm):
            if rng.random() < keep:
                edges.append((u, a, v))
                edges.append((v, a + "^-1", u))
    deg = {v: 0 for v in verts}
    for u, _, _ in edges:
        deg[u] += 1
    boundary = {v for v in verts if deg[v] < 2 * len(labels)}
    return verts, edges, boundary
