from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest
import sympy
from sympy.polys.matrices import DomainMatrix
from hypothesis import given, settings
from hypothesis import strategies as st

from fdimlab import GF, QQ, parse_field
from fdimlab import linalg

small_ints = st.integers(min_value=-4, max_value=4)


def matrices(max_rows=5, max_cols=5):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(small_ints, min_size=c, max_size=c), min_size=r, max_size=r)
        )
    )


@given(matrices())
@settings(max_examples=80, deadline=None)
def test_rank_over_rationals_matches_sympy(rows):
    M = QQ.array(rows)
    assert linalg.rank(QQ, M) == sympy.Matrix(rows).rank()


@given(matrices(), st.sampled_from([2, 3, 5, 7]))
@settings(max_examples=80, deadline=None)
def test_rank_mod_p_matches_sympy(rows, p):
    F = GF(p)
    M = F.array(rows)
    dm = DomainMatrix.from_list_sympy(len(rows), len(rows[0]), rows).convert_to(sympy.GF(p))
    want = dm.rank()
    assert linalg.rank(F, M) == want


@given(matrices())
@settings(max_examples=60, deadline=None)
def test_nullspace_is_a_kernel_basis(rows):
    M = QQ.array(rows)
    N = linalg.nullspace(QQ, M)
    assert N.shape[1] == M.shape[1] - linalg.rank(QQ, M)
    if N.shape[1]:
        assert QQ.is_zero(QQ.matmul(M, N))
        assert linalg.rank(QQ, N) == N.shape[1]


@given(matrices(4, 4))
@settings(max_examples=60, deadline=None)
def test_inverse_round_trip(rows):
    F = GF(7)
    M = F.array(rows)
    if M.shape[0] != M.shape[1] or linalg.rank(F, M) < M.shape[0]:
        return
    inv = linalg.inverse(F, M)
    assert np.array_equal(F.matmul(M, inv), F.eye(M.shape[0]))


def test_solve_and_complement():
    A = QQ.array([[1, 2], [0, 1], [1, 0]])
    X = QQ.array([[3], [1], [1]])
    sol = linalg.solve(QQ, A, X)
    assert np.array_equal(QQ.matmul(A, sol), X)
    comp = linalg.complement_indices(QQ, A, 3)
    assert len(comp) == 1
    full = np.concatenate([A, QQ.eye(3)[:, comp]], axis=1)
    assert linalg.rank(QQ, full) == 3


def test_intersection_of_coordinate_planes():
    F = GF(5)
    U = F.array([[1, 0], [0, 1], [0, 0]])
    V = F.array([[0, 0], [1, 0], [0, 1]])
    W = linalg.intersect(F, U, V)
    assert W.shape[1] == 1 and W[1, 0] != 0 and W[0, 0] == 0 and W[2, 0] == 0


@pytest.mark.parametrize("p", [2, 3, 7, 2**31 - 1])
def test_batched_rank_agrees_with_single_rank(p):
    rng = np.random.default_rng(p % 1000)
    mats = rng.integers(0, min(p, 50), size=(40, 4, 5)).astype(np.int64)
    mats[::3, 2] = mats[::3, 0]  # force some rank drops
    mats %= p
    F = GF(p)
    got = linalg.batched_rank_mod_p(mats, p)
    assert list(got) == [linalg.rank(F, m) for m in mats]


def test_field_parsing_and_arithmetic():
    assert parse_field("QQ") is QQ or parse_field("QQ") == QQ
    F = parse_field("GF(5)")
    assert F.characteristic == 5
    assert F.inv(2) * 2 % 5 == 1
    assert QQ.inv(Fraction(2, 3)) == Fraction(3, 2)
    with pytest.raises(ValueError):
        parse_field("GF(6)")
    with pytest.raises(ValueError):
        parse_field("RR")


def test_large_prime_matmul_does_not_overflow():
    p = 2**31 - 1
    F = GF(p)
    a = np.full((3, 200), p - 1, dtype=np.int64)
    b = np.full((200, 2), p - 1, dtype=np.int64)
    want = (200 * (p - 1) ** 2) % p
    assert np.all(F.matmul(a, b) == want)
