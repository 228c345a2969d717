"""Sparse exact Gaussian elimination over Q or a prime field.

Rows and vectors are ``{column: value}`` dicts with no zero entries.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional


@dataclass(frozen=True)
class Field:
    """``p=None`` is the rationals; otherwise integers mod the prime ``p``."""

    p: Optional[int] = None

    def __post_init__(self):
        if self.p is not None and (self.p < 2 or any(self.p % q == 0 for q in range(2, int(self.p ** 0.5) + 1))):
            raise ValueError(f"{self.p} is not a prime")

    @property
    def name(self) -> str:
        return "Q" if self.p is None else f"GF({self.p})"

    def coerce(self, x):
        if self.p is None:
            return Fraction(x)
        if isinstance(x, Fraction):
            return (x.numerator * pow(x.denominator, -1, self.p)) % self.p
        return int(x) % self.p

    def inv(self, x):
        if self.p is None:
            return 1 / Fraction(x)
        return pow(x, -1, self.p)

    def mul(self, x, y):
        return x * y if self.p is None else (x * y) % self.p

    def add(self, x, y):
        return x + y if self.p is None else (x + y) % self.p

    def neg(self, x):
        return -x if self.p is None else (-x) % self.p


QQ = Field()


def field_of(spec) -> Field:
    """``"Q"``/``None`` or a prime given as int or ``"GF(p)"``/``"p"`` text."""
    if spec is None or isinstance(spec, Field):
        return spec or QQ
    if isinstance(spec, int):
        return Field(spec)
    s = str(spec).strip().upper()
    if s in ("Q", "QQ"):
        return QQ
    if s.startswith("GF(") and s.endswith(")"):
        s = s[3:-1]
    return Field(int(s))


def _axpy(row: dict, piv: dict, factor, K: Field) -> None:
    """``row -= factor * piv`` in place."""
    for c, x in piv.items():
        v = K.add(row.get(c, 0), K.neg(K.mul(factor, x)))
        if v:
            row[c] = v
        else:
            row.pop(c, None)


class Echelon:
    """Incremental row reduction; ``pivots[c]`` is a row with leading 1 at ``c``."""

    def __init__(self, field: Field = QQ):
        self.K = field
        self.pivots: dict = {}

    def reduce(self, row: dict) -> dict:
        row = {c: v for c, v in row.items() if v}
        while True:
            hit = [c for c in row if c in self.pivots]
            if not hit:
                return row
            c = min(hit)
            _axpy(row, self.pivots[c], row[c], self.K)

    def add(self, row: dict) -> bool:
        """Insert a row; returns True if it raised the rank."""
        row = self.reduce(row)
        if not row:
            return False
        c = min(row)
        inv = self.K.inv(row[c])
        self.pivots[c] = {k: self.K.mul(v, inv) for k, v in row.items()}
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def rref(self) -> dict:
        """Fully reduce so no pivot row mentions another pivot column."""
        done: dict = {}
        for c in sorted(self.pivots, reverse=True):
            row = dict(self.pivots[c])
            for d in sorted(k for k in row if k != c and k in done):
                if d in row:
                    _axpy(row, done[d], row[d], self.K)
            done[c] = row
        self.pivots = done
        return done


def kernel(rows: Iterable[dict], ncols: int, field: Field = QQ) -> list:
    """Basis of ``{x : A x = 0}``, one vector per free column, in column order."""
    E = Echelon(field)
    for r in rows:
        E.add(r)
    piv = E.rref()
    by_col: dict = {}
    for c, row in piv.items():
        for k, v in row.items():
            if k != c:
                by_col.setdefault(k, []).append((c, v))
    basis = []
    for f in range(ncols):
        if f in piv:
            continue
        vec = {f: field.coerce(1)}
        for c, v in by_col.get(f, ()):
            vec[c] = field.neg(v)
        basis.append(vec)
    return basis


def solve(rows: list, rhs: list, ncols: int, field: Field = QQ) -> Optional[dict]:
    """A particular solution of ``A x = b`` (free variables zero) or None."""
    E = Echelon(field)
    aug = ncols
    for r, b in zip(rows, rhs):
        row = dict(r)
        if b:
            row[aug] = field.coerce(b)
        E.add(row)
    if aug in E.pivots:
        return None
    piv = E.rref()
    return {c: row[aug] for c, row in piv.items() if aug in row}


def mat_vec(rows: list, x: dict, field: Field = QQ) -> list:
    out = []
    for r in rows:
        s = field.coerce(0)
        for c, v in r.items():
            if c in x:
                s = field.add(s, field.mul(v, x[c]))
        out.append(s)
    return out
