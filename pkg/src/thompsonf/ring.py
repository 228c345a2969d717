"""Group ring K[F] and monoid ring K[M] over Q or a prime field.

Monomials are :class:`NormalForm` values.  Positive monomials multiply by a
fast insertion rule; anything else goes through the group multiplication.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Iterable, Optional, Sequence

from .element import IDENTITY, NormalForm, common_right_translate, multiply, nf_from_word
from .linalg import QQ, Field, field_of, kernel, solve
from .words import format_word, parse_word


class RingError(ValueError):
    pass


def mono(*indices: int) -> NormalForm:
    """Positive monomial from indices in any order (normalised)."""
    m = IDENTITY
    for i in indices:
        m = NormalForm(_left_letter_tail(m.pos, i), ())
    return m


def _left_letter_tail(pos: tuple, j: int) -> tuple:
    # pos * x_j: letters above j move right and go up by one
    return tuple(i for i in pos if i <= j) + (j,) + tuple(i + 1 for i in pos if i > j)


def _pos_mul(a: tuple, b: tuple) -> tuple:
    out = a
    for j in b:
        out = _left_letter_tail(out, j)
    return out


def _mono_mul(a: NormalForm, b: NormalForm) -> NormalForm:
    if not a.neg and not b.neg:
        return NormalForm(_pos_mul(a.pos, b.pos), ())
    return multiply(a, b)


def _mono_key(m: NormalForm):
    return (len(m.pos) + len(m.neg), m.pos, m.neg)


class RingElement:
    """Finitely supported ``{NormalForm: coefficient}`` with no zero entries."""

    __slots__ = ("terms", "field")

    def __init__(self, terms=None, field: Field = QQ):
        self.field = field
        self.terms = {}
        for m, c in (terms or {}).items():
            c = field.coerce(c)
            if c:
                self.terms[m] = c

    # --- constructors
    @classmethod
    def scalar(cls, c, field: Field = QQ) -> "RingElement":
        return cls({IDENTITY: c}, field)

    @classmethod
    def x(cls, i: int, field: Field = QQ) -> "RingElement":
        return cls({mono(i): 1}, field)

    @classmethod
    def monomial(cls, m: NormalForm, c=1, field: Field = QQ) -> "RingElement":
        return cls({m: c}, field)

    def _lift(self, other) -> "RingElement":
        if isinstance(other, RingElement):
            if other.field != self.field:
                raise RingError("mixing coefficient fields")
            return other
        if isinstance(other, NormalForm):
            return RingElement({other: 1}, self.field)
        return RingElement.scalar(other, self.field)

    # --- arithmetic
    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        K = self.field
        for m, c in other.terms.items():
            out[m] = K.add(out.get(m, 0), c)
        return RingElement(out, K)

    __radd__ = __add__

    def __neg__(self):
        return RingElement({m: self.field.neg(c) for m, c in self.terms.items()}, self.field)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        return ring_mul(self, self._lift(other))

    def __rmul__(self, other):
        return ring_mul(self._lift(other), self)

    def __eq__(self, other):
        if not isinstance(other, RingElement):
            try:
                other = self._lift(other)
            except (TypeError, ValueError):
                return NotImplemented
        return self.field == other.field and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    # --- inspection
    def is_zero(self) -> bool:
        return not self.terms

    def is_positive(self) -> bool:
        return all(not m.neg for m in self.terms)

    def degree(self) -> int:
        """Maximal monomial length; -1 for zero."""
        return max((len(m.pos) + len(m.neg) for m in self.terms), default=-1)

    def min_degree(self) -> int:
        return min((len(m.pos) + len(m.neg) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({len(m.pos) + len(m.neg) for m in self.terms}) <= 1

    def component(self, d: int) -> "RingElement":
        return RingElement({m: c for m, c in self.terms.items() if len(m.pos) + len(m.neg) == d}, self.field)

    def max_index(self) -> int:
        return max((max(m.pos + m.neg, default=-1) for m in self.terms), default=-1)

    def coeff(self, m: NormalForm):
        return self.terms.get(m, 0)

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda t: _mono_key(t[0]))

    def __repr__(self):
        return f"RingElement({format_element(self)!r})"

    __str__ = lambda self: format_element(self)


def ring_mul(a: RingElement, b: RingElement) -> RingElement:
    if a.field != b.field:
        raise RingError("mixing coefficient fields")
    K = a.field
    out: dict = {}
    for m1, c1 in a.terms.items():
        for m2, c2 in b.terms.items():
            m = _mono_mul(m1, m2)
            out[m] = K.add(out.get(m, 0), K.mul(c1, c2))
    return RingElement(out, K)


def phi_apply(a: RingElement, power: int = 1) -> RingElement:
    """Shift every index up by ``power``; positive support only."""
    if power < 0:
        raise ValueError("power must be >= 0")
    if not a.is_positive():
        raise RingError("the shift is only applied to elements of K[M]")
    return RingElement({NormalForm(tuple(i + power for i in m.pos), ()): c for m, c in a.terms.items()}, a.field)


def verify_identity(a: RingElement, u: RingElement, b: RingElement, v: RingElement) -> bool:
    return ring_mul(a, u) == ring_mul(b, v)


def product(factors: Iterable[RingElement], field: Field = QQ) -> RingElement:
    out = RingElement.scalar(1, field)
    for f in factors:
        out = out * f
    return out


# ------------------------------------------------------------ text and JSON

def _fmt_coeff(c) -> str:
    return str(c)


def format_monomial(m: NormalForm) -> str:
    return "1" if m == IDENTITY else format_word(m.word())


def format_element(a: RingElement) -> str:
    if not a.terms:
        return "0"
    out = ""
    for m, c in a.sorted_terms():
        mon = format_monomial(m)
        neg = c < 0 if a.field.p is None else False
        mag = -c if neg else c
        if mon == "1":
            body = _fmt_coeff(mag)
        elif mag == 1:
            body = mon
        else:
            body = f"{_fmt_coeff(mag)}*{mon}"
        if not out:
            out = ("-" if neg else "") + body
        else:
            out += (" - " if neg else " + ") + body
    return out


_TERM = re.compile(r"^((?:\d+(?:/\d+)?)?)\s*\*?\s*(.*?)$")


def parse_element(text: str, field: Field = QQ) -> RingElement:
    """Parse sums like ``1 - x1 + 2/3*x0 x2 - x3^2``."""
    text = text.strip()
    if not text or text == "0":
        return RingElement({}, field)
    # split at + and - signs that are not part of an exponent
    pieces = re.split(r"(?<!\^)\s*([+-])\s*", text)
    out = RingElement({}, field)
    sign = 1
    for piece in pieces:
        piece = piece.strip()
        if piece in ("+", "-"):
            sign = sign * (-1 if piece == "-" else 1)
            continue
        if not piece:
            continue
        m = _TERM.match(piece)
        if not m:
            raise RingError(f"bad term {piece!r}")
        coef_txt, mon_txt = m.group(1), m.group(2).strip()
        coef = Fraction(coef_txt) if coef_txt else Fraction(1)
        mon = IDENTITY if mon_txt in ("", "1") else nf_from_word(_expand_powers(mon_txt))
        out = out + RingElement({mon: sign * coef}, field)
        sign = 1
    return out


def _expand_powers(text: str) -> tuple:
    word: list = []
    for tok in text.replace("*", " ").split():
        word.extend(parse_word(tok))
    return tuple(word)


def to_json_obj(a: RingElement) -> list:
    return [{"monomial": format_monomial(m), "coeff": str(c)} for m, c in a.sorted_terms()]


def to_json(a: RingElement) -> str:
    return json.dumps(to_json_obj(a))


def from_json_obj(data: list, field: Field = QQ) -> RingElement:
    out: dict = {}
    for t in data:
        m = IDENTITY if t["monomial"] in ("", "1") else nf_from_word(_expand_powers(t["monomial"]))
        out[m] = field.add(out.get(m, 0), field.coerce(Fraction(t["coeff"])))
    return RingElement(out, field)


def from_json(text: str, field: Field = QQ) -> RingElement:
    return from_json_obj(json.loads(text), field)


# ------------------------------------------------------------ division

def _unshift(M: tuple, p: int) -> Optional[tuple]:
    """The ``m`` with ``x_p m == M``, if any."""
    for s, v in enumerate(M):
        if v == p + s:
            m = M[:s] + M[s + 1:]
            if _left_letter_tail_rev(p, m) == M:
                return m
    return None


def _left_letter_tail_rev(p: int, m: tuple) -> tuple:
    return _pos_mul((p,), m)


def _divide_linear(b: RingElement, r: RingElement) -> Optional[RingElement]:
    """Exact left quotient by a homogeneous degree-one ``b``.

    Left multiplication by ``x_p`` (``p`` the least index in ``b``) is strictly
    increasing in the lexicographic order of sorted index tuples and beats
    every ``x_i`` with ``i > p``, so the lex-least monomial of ``b v`` is
    ``x_p`` times the lex-least monomial of ``v``.
    """
    K = b.field
    p = min(m.pos[0] for m in b.terms)
    cp_inv = K.inv(b.terms[mono(p)])
    v: dict = {}
    rem = RingElement(r.terms, K)
    # leads only grow; past this index nothing can cancel back into r
    guard = r.max_index() + b.max_index() + r.degree() + 1
    while rem.terms:
        M = min(rem.terms, key=lambda m: m.pos)
        m = _unshift(M.pos, p)
        if m is None or M.pos[-1] > guard:
            return None
        c = K.mul(rem.terms[M], cp_inv)
        key = NormalForm(m, ())
        q = RingElement({key: c}, K)
        v[key] = K.add(v.get(key, 0), c)
        rem = rem - ring_mul(b, q)
    return RingElement(v, K)


def left_divide(b: RingElement, c: RingElement, index_bound: Optional[int] = None) -> Optional[RingElement]:
    """``v`` with ``b v == c`` in K[M], or None.  Graded by degree."""
    if not b:
        raise RingError("division by zero")
    if not (b.is_positive() and c.is_positive()):
        raise RingError("left division works in K[M]")
    K = b.field
    if not c:
        return RingElement({}, K)
    e0 = b.min_degree()
    low = b.component(e0)
    if e0 > 1 or (e0 == 1 and not all(len(m.pos) == 1 for m in low.terms)):
        return _divide_linear_algebra(b, c, index_bound)
    parts: dict = {}
    rem = RingElement(c.terms, K)
    top = c.degree() - e0
    for d in range(c.min_degree() - e0, top + 1):
        if d < 0:
            if rem.component(d + e0):
                return None
            continue
        target = rem.component(d + e0)
        if e0 == 0:
            vd = target * K.inv(low.terms[IDENTITY])
        else:
            vd = _divide_linear(low, target)
            if vd is None:
                return None
        if vd:
            parts.update(vd.terms)
            rem = rem - ring_mul(b, vd)
    if rem:
        return None
    return RingElement(parts, K)


def _divide_linear_algebra(b, c, index_bound):
    I = index_bound if index_bound is not None else max(c.max_index(), 0)
    e0 = b.min_degree()
    D = c.degree() - e0
    if D < 0:
        return None
    basis = positive_monomials(D, I)
    cols = {}
    for j, m in enumerate(basis):
        for mm, coef in ring_mul(b, RingElement.monomial(m, 1, b.field)).terms.items():
            cols.setdefault(mm, {})[j] = coef
    if any(m not in cols for m in c.terms):
        return None
    rows = list(cols.values())
    rhs = [c.terms.get(m, 0) for m in cols]
    x = solve(rows, rhs, len(basis), b.field)
    if x is None:
        return None
    v = RingElement({basis[j]: val for j, val in x.items()}, b.field)
    return v if ring_mul(b, v) == c else None


def partner(a: RingElement, u: RingElement, b: RingElement) -> Optional[RingElement]:
    """The unique ``v`` with ``a u == b v`` if it exists in K[M]."""
    return left_divide(b, ring_mul(a, u))


# ------------------------------------------------------------ closed forms

def _lin(field: Field, *pairs) -> RingElement:
    """``sum c * x_i`` for pairs ``(c, i)``; ``i=None`` is the constant."""
    out = RingElement({}, field)
    for c, i in pairs:
        out = out + (RingElement.scalar(c, field) if i is None else RingElement({mono(i): c}, field))
    return out


def basic_012(alpha, beta, field: Field = QQ) -> tuple:
    """``(a, b, u0, v0)`` with ``a = x0 + alpha x2``, ``b = x1 + beta x2``."""
    al, be = field.coerce(alpha), field.coerce(beta)
    m = mono
    u0 = RingElement({
        m(0, 3): be, m(0, 4): be * be, m(1, 3): -al, m(1, 4): -al * be,
        m(3, 3): -al * be, m(3, 4): -al * be * be,
    }, field)
    v0 = RingElement({
        m(0, 0): be, m(0, 1): -al, m(3, 3): -al * al, m(3, 4): -al * al * be,
    }, field)
    a = _lin(field, (1, 0), (al, 2))
    b = _lin(field, (1, 1), (be, 2))
    return a, b, u0, v0


def one_minus_basic(field: Field = QQ) -> tuple:
    """``(a, u, b, v)`` with ``a = 1-x0``, ``b = 1-x1``, ``u = (1-x1)(1+x1-x2)``
    and ``v = 1-x3-x0^2+x0x1``.

    This ``u`` does not satisfy ``a u == b v`` (the degree-one parts already
    differ); ``one_minus_u(0)`` is the first unknown that goes with this ``v``.
    """
    one_minus = lambda i: _lin(field, (1, None), (-1, i))
    u = one_minus(1) * _lin(field, (1, None), (1, 1), (-1, 2))
    v = _lin(field, (1, None), (-1, 3)) + RingElement({mono(0, 0): -1, mono(0, 1): 1}, field)
    return one_minus(0), u, one_minus(1), v


def one_minus_u(k: int, field: Field = QQ) -> RingElement:
    """``u_0 = (1+x0-x1)(1-x3)``, ``u_k = (1-x1) shift(u_{k-1})``."""
    if k < 0:
        raise ValueError("k must be >= 0")
    u = _lin(field, (1, None), (1, 0), (-1, 1)) * _lin(field, (1, None), (-1, 3))
    for _ in range(k):
        u = _lin(field, (1, None), (-1, 1)) * phi_apply(u)
    return u


def one_minus_family(k: int, field: Field = QQ) -> tuple:
    """``(u_k, v_k)`` with ``(1-x0) u_k == (1-x1) v_k``."""
    u = one_minus_u(k, field)
    a = _lin(field, (1, None), (-1, 0))
    b = _lin(field, (1, None), (-1, 1))
    v = partner(a, u, b)
    if v is None:
        raise RingError(f"no partner for u_{k}")
    return u, v


def equal_param_u(beta, k: int, field: Field = QQ) -> RingElement:
    """``prod_{i=1..k} (x_i + beta x_{i+2}) * shift^k(u0)`` for the equal-parameter equation."""
    be = field.coerce(beta)
    if not be:
        raise RingError("beta must be non-zero")
    if k < 0:
        raise ValueError("k must be >= 0")
    _, _, u0, _ = basic_012(be, be, field)
    # at alpha = beta, basic_012's u0 is beta times the generator
    u0 = u0 * field.inv(be)
    out = RingElement.scalar(1, field)
    for i in range(1, k + 1):
        out = out * _lin(field, (1, i), (be, i + 2))
    return out * phi_apply(u0, k)


def equal_param_family(beta, k: int, field: Field = QQ) -> tuple:
    """``(a, b, u, v)`` for ``(x0 + beta x2) u = (x1 + beta x2) v``."""
    be = field.coerce(beta)
    u = equal_param_u(be, k, field)
    a = _lin(field, (1, 0), (be, 2))
    b = _lin(field, (1, 1), (be, 2))
    v = partner(a, u, b)
    if v is None:
        raise RingError(f"generator {k} has no partner")
    return a, b, u, v


def lift_solution(u1: RingElement, v1: RingElement, alpha, beta) -> tuple:
    """From a solution of the equal-parameter equation ``(x0+beta x2)u' = (x1+beta x2)v'``
    build a solution of ``(x0+alpha x2)u = (x1+beta x2)v``:

        u = alpha^-1 (x1 + beta x3) shift(u'),  v = alpha^-1 x0 shift(v') + x3 shift(u').
    """
    K = u1.field
    al, be = K.coerce(alpha), K.coerce(beta)
    if not al:
        raise RingError("alpha must be non-zero")
    a1 = _lin(K, (1, 0), (be, 2))
    b1 = _lin(K, (1, 1), (be, 2))
    if not verify_identity(a1, u1, b1, v1):
        raise RingError("input pair does not solve the equal-parameter equation")
    inv = K.inv(al)
    pu, pv = phi_apply(u1), phi_apply(v1)
    u = _lin(K, (inv, 1), (inv * be if K.p is None else K.mul(inv, be), 3)) * pu
    v = _lin(K, (inv, 0)) * pv + RingElement.x(3, K) * pu
    return u, v


# ------------------------------------------------------------ the solver

@dataclass(frozen=True)
class BasisSpec:
    D: int
    I: int

    def __post_init__(self):
        if self.D < 0 or self.I < 0:
            raise ValueError("D and I must be >= 0")


def positive_monomials(D: int, I: int, exact: bool = False) -> list:
    """Positive monomials of degree <= D (or == D) with indices <= I, sorted."""
    out = []
    for d in range(D if exact else 0, D + 1):
        for c in combinations_with_replacement(range(I + 1), d):
            out.append(NormalForm(c, ()))
    return out


@dataclass
class SolveReport:
    basis: BasisSpec
    field: str
    unknowns: int
    equations: int
    rank: int
    solutions: list  # each a tuple (u_1, .., u_t)

    @property
    def kernel_dim(self) -> int:
        return len(self.solutions)

    def as_dict(self) -> dict:
        return {
            "D": self.basis.D,
            "I": self.basis.I,
            "field": self.field,
            "unknowns": self.unknowns,
            "equations": self.equations,
            "rank": self.rank,
            "kernelDim": self.kernel_dim,
            "solutions": [[to_json_obj(u) for u in sol] for sol in self.solutions],
        }


def default_basis(a_list: Sequence[RingElement], D: int) -> BasisSpec:
    return BasisSpec(D, max(max(a.max_index() for a in a_list), 0) + D)


def solve_right(a_list: Sequence[RingElement], basis: BasisSpec, field=None) -> SolveReport:
    """Kernel of ``a_1 u_1 = a_2 u_2 = .. = a_t u_t`` over positive monomials of
    degree <= D and indices <= I.  An empty kernel only speaks for this basis.

    Homogeneous coefficients of equal degree split the system by degree.
    """
    a_list = list(a_list)
    if len(a_list) < 2:
        raise ValueError("need at least two coefficients")
    K = field_of(field) if field is not None else a_list[0].field
    a_list = [RingElement(a.terms, K) if a.field != K else a for a in a_list]
    if not all(a.is_positive() for a in a_list):
        raise RingError("coefficients must lie in K[M]")
    graded = all(a.is_homogeneous() and a for a in a_list) and len({a.degree() for a in a_list}) == 1
    blocks = [positive_monomials(d, basis.I, exact=True) for d in range(basis.D + 1)] if graded \
        else [positive_monomials(basis.D, basis.I)]
    t = len(a_list)
    solutions, unknowns, equations, rank = [], 0, 0, 0
    for mons in blocks:
        n = len(mons)
        # products a_j * m for every unknown, grouped by result monomial
        images = [[ring_mul(a, RingElement.monomial(m, 1, K)).terms for m in mons] for a in a_list]
        rows_by_key: dict = {}
        for j in range(1, t):
            for col, img in enumerate(images[0]):
                for mm, c in img.items():
                    rows_by_key.setdefault((j, mm), {})[col] = c
            for col, img in enumerate(images[j]):
                for mm, c in img.items():
                    row = rows_by_key.setdefault((j, mm), {})
                    row[j * n + col] = K.neg(c)
        rows = [r for _, r in sorted(rows_by_key.items(), key=lambda kv: (kv[0][0], _mono_key(kv[0][1])))]
        ker = kernel(rows, t * n, K)
        unknowns += t * n
        equations += len(rows)
        rank += t * n - len(ker)
        for vec in ker:
            sol = tuple(
                RingElement({mons[c - j * n]: x for c, x in vec.items() if j * n <= c < (j + 1) * n}, K)
                for j in range(t)
            )
            solutions.append(sol)
    return SolveReport(basis, K.name, unknowns, equations, rank, solutions)


def check_solution(a_list: Sequence[RingElement], sol: Sequence[RingElement]) -> bool:
    prods = [ring_mul(a, u) for a, u in zip(a_list, sol)]
    return all(p == prods[0] for p in prods[1:])


def linear_form(coeffs: Sequence, field: Field = QQ) -> RingElement:
    """``sum coeffs[i] x_i``."""
    return _lin(field, *[(c, i) for i, c in enumerate(coeffs)])


# ------------------------------------------------------------ relations

class NotARelation(RingError):
    pass


def relation_to_solution(word, field: Field = QQ) -> tuple:
    """``(u, v)`` in K[F] with ``(1-x0) u == (1-x1) v`` from a relation ``w = 1``.

    With ``g_i`` the suffix starting at letter ``i``, each letter contributes
    ``(xi - 1) g_{i+1}``: ``x0`` gives ``-g`` to ``u``, ``x0^-1`` gives
    ``x0^-1 g`` to ``u``, ``x1`` gives ``g`` to ``v`` and ``x1^-1`` gives
    ``-x1^-1 g`` to ``v``.
    """
    if isinstance(word, str):
        word = parse_word(word)
    word = tuple(word)
    for a in word:
        if a.index not in (0, 1):
            raise RingError("relation words use x0 and x1 only")
    if nf_from_word(word) != IDENTITY:
        raise NotARelation(f"{format_word(word)} is not the identity")
    u: dict = {}
    v: dict = {}
    g = IDENTITY
    for a in reversed(word):
        target = u if a.index == 0 else v
        if a.sign > 0:
            term, sign = g, (-1 if a.index == 0 else 1)
        else:
            term = multiply(nf_from_word((a,)), g)
            sign = 1 if a.index == 0 else -1
        target[term] = field.add(target.get(term, 0), field.coerce(sign))
        g = multiply(nf_from_word((a,)), g)
    return RingElement(u, field), RingElement(v, field)


def right_translate(a: RingElement, g: NormalForm) -> RingElement:
    return RingElement({multiply(m, g): c for m, c in a.terms.items()}, a.field)


def to_monoid_pair(u: RingElement, v: RingElement) -> tuple:
    """``(u g, v g, g)`` with ``g`` in M chosen so both products lie in K[M].

    Right multiplication by a group element keeps ``(1-x0) u = (1-x1) v``.
    """
    support = list(u.terms) + list(v.terms)
    g = common_right_translate(support) if support else IDENTITY
    return right_translate(u, g), right_translate(v, g), g


def one_minus(i: int, field: Field = QQ) -> RingElement:
    return _lin(field, (1, None), (-1, i))


# ------------------------------------------------------------ divisibility

def divisibility_product(pairs: Sequence, form: str = "indexed", field: Field = QQ) -> RingElement:
    """Product of linear factors built from ``(alpha_i, beta_i)``.

    ``form="indexed"``: ``prod_j (alpha_j x0 + beta_j x_j)`` for j = 1..k.
    ``form="literal"``: first factor ``alpha_1 x0 + beta_1 x1``, then
    ``alpha_j x0 + beta_j x_{j+1}`` for j = 1..k (k + 1 factors).
    """
    pairs = [(field.coerce(a), field.coerce(b)) for a, b in pairs]
    if len(pairs) < 2:
        raise ValueError("need k >= 2 pairs")
    for a, b in pairs:
        if not a and not b:
            raise RingError("degenerate pair (0, 0)")
    if form == "indexed":
        factors = [_lin(field, (a, 0), (b, j)) for j, (a, b) in enumerate(pairs, start=1)]
    elif form == "literal":
        a1, b1 = pairs[0]
        factors = [_lin(field, (a1, 0), (b1, 1))] + [
            _lin(field, (a, 0), (b, j + 1)) for j, (a, b) in enumerate(pairs, start=1)
        ]
    else:
        raise ValueError(f"unknown form {form!r}")
    return product(factors, field)


def divisibility_product_check(pairs: Sequence, form: str = "indexed", field: Field = QQ) -> bool:
    """Every ``alpha_i x0 + beta_i x1`` left-divides the product."""
    P = divisibility_product(pairs, form, field)
    for a, b in pairs:
        d = _lin(field, (a, 0), (b, 1))
        if left_divide(d, P) is None:
            return False
    return True
