import random

import numpy as np
import pytest
from hypothesis import given, strategies as st

from e8bracket import _matrix as mx
from e8bracket.exact import gram, nullspace, rank, rref, signature, to_rational_matrix

small_ints = st.integers(-4, 4)


def int_matrices(rows, cols):
    return st.lists(st.lists(small_ints, min_size=cols, max_size=cols), min_size=rows, max_size=rows).map(
        lambda m: np.array(m, dtype=np.int64)
    )


def test_rref_simple():
    m = to_rational_matrix(np.array([[2, 4, 0], [1, 2, 3]]))
    red, piv = rref(m)
    assert piv == [0, 2]
    assert red.tolist() == [[1, 2, 0], [0, 0, 1]]


@given(int_matrices(5, 7))
def test_nullspace_vectors_are_killed(m):
    q = to_rational_matrix(m)
    basis = nullspace(q)
    assert len(basis) + rank(q) == 7
    for v in basis:
        assert not any(q.dot(v))


@given(int_matrices(6, 4))
def test_gram_preserves_rank(m):
    assert rank(gram(m)) == rank(to_rational_matrix(m))
    assert rank(to_rational_matrix(m)) == np.linalg.matrix_rank(m.astype(float))


def test_signature_basics():
    assert signature(np.eye(4, dtype=np.int64)) == (4, 0, 0)
    assert signature(-np.eye(3, dtype=np.int64)) == (0, 3, 0)
    assert signature(np.zeros((2, 2), dtype=np.int64)) == (0, 0, 2)
    # zero diagonal forces the 2x2 block pivot
    assert signature(np.array([[0, 1], [1, 0]])) == (1, 1, 0)
    assert signature(np.array([[0, 1, 2], [1, 0, 3], [2, 3, 0]])) == (1, 2, 0)


def test_signature_rejects_bad_input():
    with pytest.raises(ValueError):
        signature(np.array([[1, 2], [3, 4]]))
    with pytest.raises(ValueError):
        signature(np.zeros((2, 3), dtype=np.int64))


@given(int_matrices(6, 6), st.randoms(use_true_random=False))
def test_signature_matches_eigenvalues_and_is_congruence_invariant(m, rnd):
    s = m + m.T
    plus, minus, zero = signature(s)
    ev = np.linalg.eigvalsh(s.astype(float))
    assert (plus, minus) == (int(np.sum(ev > 1e-8)), int(np.sum(ev < -1e-8)))
    perm = list(range(6))
    rnd.shuffle(perm)
    assert signature(s[np.ix_(perm, perm)]) == (plus, minus, zero)
    # congruence by a unimodular triangular matrix
    t = np.eye(6, dtype=np.int64) + np.triu(np.array([[rnd.randint(-2, 2) for _ in range(6)] for _ in range(6)]), 1)
    assert signature(t.T @ s @ t) == (plus, minus, zero)


def test_rational_entries():
    h = mx.asmatrix([[1, mx.Rational(1, 2)], [mx.Rational(1, 2), mx.Rational(1, 3)]])  # Hilbert matrix
    assert signature(h) == (2, 0, 0)
    assert rank(h) == 2
    with pytest.raises(TypeError):
        to_rational_matrix(np.array([0.5]))


def test_large_random_rank():
    rng = random.Random(0)
    a = np.array([[rng.randint(-3, 3) for _ in range(4)] for _ in range(12)])
    b = a @ np.array([[rng.randint(-3, 3) for _ in range(12)] for _ in range(4)])  # rank <= 4
    assert rank(to_rational_matrix(b)) == np.linalg.matrix_rank(b.astype(float))
