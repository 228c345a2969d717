"""Belk-Brown automata BB(n, k): marked forests with n leaves and all trees of
height <= k, seen inside the left Cayley graph of F.

Densities are computed two ways: by building the automaton explicitly and
by counting, per label, the vertices that accept it.  Acceptance of every
label is a local condition on the marked tree and its neighbours, so each
count is a coefficient of a product of tree generating polynomials and
forest series.  All arithmetic is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .cayley import SubgraphSnapshot, snapshot_from_step
from .trees import (
    X0, X0I, X1, X1I, X2, X2I, XB1, XB1I, MarkedForest, apply_generator,
    enumerate_marked_forests, height,
)

GENSETS = {
    "x0,x1": (X0, X0I, X1, X1I),
    "x1,xb1": (X1, X1I, XB1, XB1I),
    "x0,x1,xb1": (X0, X0I, X1, X1I, XB1, XB1I),
    "x0,x1,x2": (X0, X0I, X1, X1I, X2, X2I),
}

DEFAULT_CAP = 10 ** 7


class SizeCapExceeded(RuntimeError):
    def __init__(self, count: int, cap: int):
        super().__init__(f"BB automaton has {count} vertices, above the cap {cap}; use the DP route")
        self.count = count
        self.cap = cap


def labels_of(genset: str) -> tuple:
    try:
        return GENSETS[genset]
    except KeyError:
        raise ValueError(f"unknown generating set {genset!r}; choose from {sorted(GENSETS)}") from None


@dataclass(frozen=True)
class BBParams:
    n: int
    k: int
    genset: str = "x0,x1"

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if self.k < 0:
            raise ValueError("k must be >= 0")
        labels_of(self.genset)


# ------------------------------------------------------------ polynomials

def poly_trim(p: list) -> list:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_mul(a: list, b: list, cap: Optional[int] = None) -> list:
    """Product of coefficient lists, truncated above degree ``cap``."""
    if not a or not b:
        return []
    size = len(a) + len(b) - 1
    if cap is not None:
        size = min(size, cap + 1)
    out = [0] * size
    for i, x in enumerate(a):
        if not x or i >= size:
            continue
        for j, y in enumerate(b[: size - i]):
            if y:
                out[i + j] += x * y
    return poly_trim(out)


def poly_add(a: list, b: list) -> list:
    n = max(len(a), len(b))
    return poly_trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def poly_sub(a: list, b: list) -> list:
    return poly_add(a, [-c for c in b])


@lru_cache(maxsize=None)
def _phi(k: int) -> tuple:
    if k < 0:
        return ()
    if k == 0:
        return (0, 1)
    prev = list(_phi(k - 1))
    return tuple(poly_add([0, 1], poly_mul(prev, prev)))


def phi_poly(k: int) -> list:
    """Coefficients (ascending) of the height-<=k tree polynomial; ``k=-1`` gives 0."""
    if k < -1:
        raise ValueError("k must be >= -1")
    return list(_phi(k))


def poly_eval(p: list, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def phi_eval(k: int, x):
    """Evaluate via the recursion ``x + previous^2`` (exact for Fractions)."""
    v = x
    for _ in range(k):
        v = x + v * v
    return v


def xi_root(k: int, tol) -> tuple:
    """Rational bracket ``(lo, hi)`` with ``hi - lo <= tol`` around the positive
    root of ``phi_k(x) = 1``."""
    if k < 0:
        raise ValueError("k must be >= 0")
    tol = Fraction(tol)
    if tol <= 0:
        raise ValueError("tol must be positive")
    if k == 0:
        return Fraction(1), Fraction(1)
    lo, hi = Fraction(0), Fraction(1)
    while hi - lo > tol:
        mid = (lo + hi) / 2
        v = phi_eval(k, mid)
        if v == 1:
            return mid, mid
        if v < 1:
            lo = mid
        else:
            hi = mid
    return lo, hi


# ------------------------------------------------------------ enumeration

def bb_vertices(p: BBParams, cap: int = DEFAULT_CAP) -> list:
    count = bb_count(p.n, p.k)
    if count > cap:
        raise SizeCapExceeded(count, cap)
    return list(enumerate_marked_forests(p.n, p.k))


def bb_graph(p: BBParams, cap: int = DEFAULT_CAP, keep_edges: bool = True) -> SubgraphSnapshot:
    verts = bb_vertices(p, cap)
    k = p.k
    return snapshot_from_step(
        verts, labels_of(p.genset), lambda v, a: apply_generator(v, a, k), keep_edges=keep_edges
    )


# ------------------------------------------------------------ counting

def _series(p: list, n: int) -> list:
    return (list(p) + [0] * (n + 1))[: n + 1]


@lru_cache(maxsize=64)
def _forest_series(k: int, n: int) -> tuple:
    """Coefficients of ``1/(1 - phi_k)``: possibly empty forests, degree <= n."""
    phi = phi_poly(k)
    g = [0] * (n + 1)
    g[0] = 1
    for d in range(1, n + 1):
        g[d] = sum(phi[j] * g[d - j] for j in range(1, min(d, len(phi) - 1) + 1))
    return tuple(g)


def _coeff_sandwich(k: int, n: int, middle: list, left_nonempty=False, right_nonempty=False) -> int:
    """``[x^n] L * middle * R`` with L, R forest series (optionally non-empty)."""
    g = list(_forest_series(k, n))
    left = list(g)
    if left_nonempty:
        left[0] = 0
    right = list(g)
    if right_nonempty:
        right[0] = 0
    lm = poly_mul(left, middle, n)
    lm = _series(lm, n)
    return sum(lm[i] * right[n - i] for i in range(n + 1))


def bb_count(n: int, k: int) -> int:
    return _coeff_sandwich(k, n, phi_poly(k))


def label_counts(n: int, k: int) -> dict:
    """Number of BB(n, k) vertices accepting each label."""
    phi = phi_poly(k)
    low = phi_poly(k - 1)  # trees that may take part in a new caret
    nontrivial = poly_sub(phi, [0, 1])
    pair_low = poly_mul(low, low)
    c = {}
    c[X0] = _coeff_sandwich(k, n, phi, left_nonempty=True)
    c[X0I] = _coeff_sandwich(k, n, phi, right_nonempty=True)
    c[X1] = c[XB1] = _coeff_sandwich(k, n, nontrivial)
    c[X1I] = c[XB1I] = _coeff_sandwich(k, n, pair_low)
    c[X2] = _coeff_sandwich(k, n, poly_mul(phi, nontrivial))
    c[X2I] = _coeff_sandwich(k, n, poly_mul(phi, pair_low))
    return c


def bb_density_dp(p: BBParams) -> Fraction:
    counts = label_counts(p.n, p.k)
    total = bb_count(p.n, p.k)
    return Fraction(sum(counts[a] for a in labels_of(p.genset)), total)


def acceptance_fractions(p: BBParams) -> dict:
    counts = label_counts(p.n, p.k)
    total = bb_count(p.n, p.k)
    return {a: Fraction(counts[a], total) for a in labels_of(p.genset)}


# ------------------------------------------------------------ special forests

@dataclass(frozen=True)
class SpecialForestWitness:
    forest: MarkedForest
    k: int

    @property
    def positions(self) -> tuple:
        i = self.forest.mark
        return tuple(range(i, i + 5))

    def check(self) -> bool:
        trees, i, k = self.forest.trees, self.forest.mark, self.k
        if i + 4 >= len(trees):
            return False
        t0, t1, t2, t3, t4 = trees[i:i + 5]
        return (
            not t0 and not t2
            and height(t1) == k and height(t3) == k
            and bool(t4)
            and all(height(t) <= k for t in trees)
        )

    def triple(self) -> tuple:
        """The vertices a, b, c: marks on T0, T1, T2."""
        trees, i = self.forest.trees, self.forest.mark
        return tuple(MarkedForest(trees, i + d) for d in range(3))

    @property
    def at_left_end(self) -> bool:
        return self.forest.mark == 0


def is_special(f: MarkedForest, k: int) -> bool:
    return SpecialForestWitness(f, k).check()


def special_count(n: int, k: int) -> int:
    """Exact number of special forests in BB(n, k)."""
    if k < 1:
        return 0
    exact_k = poly_sub(phi_poly(k), phi_poly(k - 1))
    nontrivial = poly_sub(phi_poly(k), [0, 1])
    mid = [0, 1]
    for part in (exact_k, [0, 1], exact_k, nontrivial):
        mid = poly_mul(mid, part, n)
    return _coeff_sandwich(k, n, mid)


def find_special(p: BBParams, samples: int = 10, cap: int = DEFAULT_CAP) -> tuple:
    """``(count, witnesses)``; witnesses are enumerated only while affordable."""
    if p.k < 1:
        raise ValueError("special forests need k >= 1")
    count = special_count(p.n, p.k)
    witnesses = []
    if samples and count and bb_count(p.n, p.k) <= cap:
        for f in enumerate_marked_forests(p.n, p.k):
            if is_special(f, p.k):
                witnesses.append(SpecialForestWitness(f, p.k))
                if len(witnesses) >= samples:
                    break
    return count, witnesses


# ------------------------------------------------------------ pruning

@dataclass
class PruneReport:
    before: Fraction
    after: Fraction
    removed_vertices: int
    removed_directed_edges: int
    groups: int
    max_edges_per_group: int

    def as_dict(self) -> dict:
        return {
            "before": str(self.before),
            "after": str(self.after),
            "removedVertices": self.removed_vertices,
            "removedDirectedEdges": self.removed_directed_edges,
            "groups": self.groups,
            "maxEdgesPerGroup": self.max_edges_per_group,
        }


def _incident(snap: SubgraphSnapshot, removed: set) -> int:
    return sum(1 for u, _, v in snap.edges if u in removed or v in removed)


def prune(p: BBParams, mode: str, cap: int = DEFAULT_CAP) -> PruneReport:
    """Remove isolated vertices ({x1, xb1}) or the a, b, c vertices of every
    special forest ({x0, x1} or {x0, x1, x2}) and report both densities."""
    if mode == "isolated":
        if p.genset != "x1,xb1":
            raise ValueError("isolated pruning needs the generating set x1,xb1")
    elif mode == "special-abc":
        if p.genset not in ("x0,x1", "x0,x1,x2"):
            raise ValueError("special-abc pruning needs x0,x1 or x0,x1,x2")
    else:
        raise ValueError(f"unknown mode {mode!r}")
    snap = bb_graph(p, cap)
    deg = {v: 0 for v in snap.vertices}
    for u, _, _ in snap.edges:
        deg[u] += 1
    groups: list = []
    if mode == "isolated":
        groups = [{v} for v in snap.vertices if deg[v] == 0]
    elif p.k >= 1:
        for v in snap.vertices:
            if is_special(v, p.k):
                groups.append(set(SpecialForestWitness(v, p.k).triple()))
    removed = set().union(*groups) if groups else set()
    if len(removed) != sum(len(g) for g in groups):
        raise AssertionError("special triples overlap")
    lost = _incident(snap, removed)
    per_group = max((_incident(snap, g) for g in groups), default=0)
    remaining = snap.size - len(removed)
    after = Fraction(snap.internal_edges - lost, remaining) if remaining else Fraction(0)
    return PruneReport(snap.density, after, len(removed), lost, len(groups), per_group)
