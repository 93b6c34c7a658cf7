import itertools
import random

import numpy as np
import pytest
from hypothesis import given

from conftest import octonions, random_rationals
from e8bracket import _matrix as mx
from e8bracket.octonion import E, left_mul_matrix, right_mul_matrix
from e8bracket.so8 import (
    BASIS,
    GAMMA,
    SO8_DIM,
    WEDGE_PAIRS,
    NotSkewError,
    Skew8,
    commutator,
    kappa,
    lambda_matrix,
    triality_lambda,
    triality_lambda2,
    wedge,
)

HALF = mx.Rational(1, 2)


def unit(i, j):
    m = np.zeros((8, 8), dtype=np.int64)
    m[i, j], m[j, i] = 1, -1
    return m


def as_int(a: Skew8):
    return np.array([[int(x) for x in row] for row in a.entries])


def test_wedge_examples():
    assert np.array_equal(as_int(wedge(E[0], E[1])), unit(0, 1))
    assert np.array_equal(as_int(wedge(E[1], E[2])), unit(1, 2))
    assert not wedge(E[3], E[3])


@given(octonions, octonions)
def test_wedge_is_skew_and_antisymmetric(x, y):
    assert mx.is_skew(wedge(x, y).entries)
    assert wedge(x, y) == -wedge(y, x)
    assert not wedge(x, x)


def test_commutator_examples_against_integer_matrices():
    a, b, c = unit(0, 1), unit(1, 2), unit(2, 3)
    assert np.array_equal(as_int(commutator(BASIS[0], BASIS[7])), a @ b - b @ a)
    assert as_int(commutator(BASIS[0], BASIS[7])).tolist() == unit(0, 2).tolist()
    assert not commutator(BASIS[0], Skew8(c))
    assert not commutator(BASIS[5], BASIS[5])


def test_lambda_on_generators():
    # lambda(e0^e1) = 1/2 L_e1, so lambda(e1^e0) = -1/2 L_e1
    assert triality_lambda(wedge(E[0], E[1])) == Skew8(left_mul_matrix(E[1]) * HALF)
    assert triality_lambda(wedge(E[1], E[0])) == Skew8(left_mul_matrix(E[1]) * -HALF)
    assert triality_lambda2(wedge(E[0], E[1])) == Skew8(right_mul_matrix(E[1]) * HALF)
    assert not triality_lambda(Skew8.zero())
    assert not triality_lambda2(Skew8.zero())


def test_lambda_generator_formula_for_pure_factors():
    # lambda(a^b) = -1/2 L_conj(b) L_a, lambda^2(a^b) = -1/2 R_conj(b) R_a
    for i, j in itertools.product(range(1, 8), range(8)):
        if i == j:
            continue
        a, b = E[i], E[j]
        lam = left_mul_matrix(b.conj()).dot(left_mul_matrix(a)) * -HALF
        lam2 = right_mul_matrix(b.conj()).dot(right_mul_matrix(a)) * -HALF
        assert triality_lambda(wedge(a, b)) == Skew8(lam)
        assert triality_lambda2(wedge(a, b)) == Skew8(lam2)


def test_triality_relations_on_basis():
    for a in BASIS:
        assert triality_lambda(triality_lambda(triality_lambda(a))) == a
        assert triality_lambda2(a) == triality_lambda(triality_lambda(a))
        assert kappa(kappa(a)) == a
        assert kappa(triality_lambda2(a)) == triality_lambda(kappa(a))


@pytest.mark.parametrize("phi", [triality_lambda, triality_lambda2, kappa], ids=["lambda", "lambda2", "kappa"])
def test_automorphisms_of_so8(phi):
    for a, b in itertools.product(BASIS, repeat=2):
        assert phi(commutator(a, b)) == commutator(phi(a), phi(b))


def test_lambda_matrix_is_invertible_of_order_three():
    m = lambda_matrix()
    eye = mx.identity(SO8_DIM)
    assert np.all(m.dot(m).dot(m) == eye)
    assert not np.all(m == eye)


def test_infinitesimal_triality():
    count = 0
    for a in BASIS:
        la, kl2 = triality_lambda(a), kappa(triality_lambda2(a))
        for u, v in itertools.product(E, repeat=2):
            assert a.apply(u) * v + u * la.apply(v) == kl2.apply(u * v)
            count += 1
    assert count == 1792


def test_twice_wedge_with_unit_is_left_plus_right():
    for t in E[1:]:
        assert 2 * wedge(t, E[0]) == Skew8(right_mul_matrix(t) + left_mul_matrix(t))


def test_kappa_examples():
    assert kappa(wedge(E[0], E[1])) == -wedge(E[0], E[1])
    assert kappa(wedge(E[1], E[2])) == wedge(E[1], E[2])
    for a in BASIS:
        assert kappa(a) == Skew8(GAMMA.dot(a.entries).dot(GAMMA))
        x = E[3] + 2 * E[0]
        # kappa(A) x = conj(A conj(x))
        assert kappa(a).apply(x) == a.apply(x.conj()).conj()


def test_coordinates_reproduce_random_skew_matrix():
    rng = random.Random(5)
    c = random_rationals(rng, SO8_DIM)
    a = Skew8.from_coords(c)
    total = Skew8.zero()
    for coeff, b in zip(a.coords(), BASIS):
        total = total + b * coeff
    assert total == a
    assert a.coords() == c
    assert [a.entries[i, j] for i, j in WEDGE_PAIRS] == c


def test_rejects_non_skew():
    m = mx.zeros(8)
    m[0, 1] = mx.ONE
    with pytest.raises(NotSkewError):
        Skew8(m)
    with pytest.raises(TypeError):
        triality_lambda(m)
    with pytest.raises(TypeError):
        triality_lambda2(m)
    with pytest.raises(ValueError):
        Skew8(mx.zeros(7))


def test_skew8_is_read_only():
    a = BASIS[3]
    with pytest.raises(ValueError):
        a.entries[0, 0] = 1
