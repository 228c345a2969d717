import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from thompsonf.linalg import QQ, Echelon, Field, field_of, kernel, mat_vec, solve


def test_field_parsing():
    assert field_of(None) is QQ
    assert field_of("Q") == QQ
    assert field_of("GF(7)") == Field(7) == field_of(7) == field_of("7")
    assert Field(7).name == "GF(7)" and QQ.name == "Q"
    with pytest.raises(ValueError):
        Field(9)


def test_prime_field_arithmetic():
    K = Field(7)
    assert K.coerce(Fraction(1, 2)) == 4
    assert K.mul(3, K.inv(3)) == 1
    assert K.neg(2) == 5


def test_kernel_small():
    rows = [{0: Fraction(1), 1: Fraction(1)}, {1: Fraction(1), 2: Fraction(-1)}]
    ker = kernel(rows, 3)
    assert len(ker) == 1
    assert all(x == 0 for x in mat_vec(rows, ker[0]))


def test_solve_inconsistent():
    rows = [{0: 1}, {0: 2}]
    assert solve(rows, [1, 3], 1) is None
    assert solve(rows, [1, 2], 1) == {0: 1}


def _random_matrix(rng, r, c):
    return [{j: Fraction(rng.randint(-3, 3)) for j in range(c) if rng.random() < 0.5} for _ in range(r)]


@given(st.integers(0, 10**6), st.integers(1, 7), st.integers(1, 7))
def test_rank_nullity(seed, r, c):
    rng = random.Random(seed)
    rows = _random_matrix(rng, r, c)
    E = Echelon()
    for row in rows:
        E.add(row)
    ker = kernel(rows, c)
    assert E.rank + len(ker) == c
    for vec in ker:
        assert all(x == 0 for x in mat_vec(rows, vec))


@given(st.integers(0, 10**6), st.sampled_from([2, 5, 101]))
def test_prime_field_kernel(seed, p):
    rng = random.Random(seed)
    K = Field(p)
    rows = [{j: K.coerce(rng.randint(0, p - 1)) for j in range(5)} for _ in range(3)]
    for vec in kernel(rows, 5, K):
        assert all(x == 0 for x in mat_vec(rows, vec, K))


@given(st.integers(0, 10**6))
def test_solve_finds_solution(seed):
    rng = random.Random(seed)
    rows = _random_matrix(rng, 4, 5)
    x = {j: Fraction(rng.randint(-4, 4)) for j in range(5)}
    b = mat_vec(rows, x)
    y = solve(rows, b, 5)
    assert y is not None and mat_vec(rows, y) == b
