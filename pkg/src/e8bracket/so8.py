"""so(8) as skew 8x8 matrices, with the wedge map and the triality automorphisms."""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Iterable

import numpy as np

from . import _matrix as mx
from .octonion import DIM, E, Octonion, left_mul_matrix, oct_conj, right_mul_matrix

# basis e_i ^ e_j, i < j, lexicographic
WEDGE_PAIRS: tuple[tuple[int, int], ...] = tuple(
    (i, j) for i in range(DIM) for j in range(i + 1, DIM)
)
SO8_DIM = len(WEDGE_PAIRS)
_HALF = mx.Rational(1, 2)
GAMMA = np.diag([1, -1, -1, -1, -1, -1, -1, -1])
# Gamma A Gamma flips the sign of row 0 and column 0 except the corner
_GAMMA_SIGNS = np.outer(GAMMA.diagonal(), GAMMA.diagonal())


class NotSkewError(ValueError):
    pass


class Skew8:
    """An element of so(8): an exact skew-symmetric 8x8 matrix."""

    __slots__ = ("_m",)

    def __init__(self, entries, check: bool = True):
        m = entries if isinstance(entries, np.ndarray) and entries.dtype == object else mx.asmatrix(entries)
        if m.shape != (DIM, DIM):
            raise ValueError(f"so(8) elements are 8x8, got {m.shape}")
        if check and not mx.is_skew(m):
            raise NotSkewError("matrix is not skew-symmetric")
        m = m.copy()
        m.flags.writeable = False
        self._m = m

    @classmethod
    def zero(cls) -> "Skew8":
        return cls(mx.zeros(DIM), check=False)

    @classmethod
    def basis(cls, n: int) -> "Skew8":
        i, j = WEDGE_PAIRS[n]
        return wedge(E[i], E[j])

    @classmethod
    def from_coords(cls, coords: Iterable) -> "Skew8":
        c = [mx.frac(x) for x in coords]
        if len(c) != SO8_DIM:
            raise ValueError(f"expected {SO8_DIM} coordinates, got {len(c)}")
        m = mx.zeros(DIM)
        for (i, j), a in zip(WEDGE_PAIRS, c):
            m[i, j] = a
            m[j, i] = -a
        return cls(m, check=False)

    @property
    def entries(self) -> np.ndarray:
        return self._m

    def coords(self) -> list[mx.Rational]:
        """Coefficients A_ij (i < j) so that A = sum A_ij e_i ^ e_j."""
        return [self._m[i, j] for i, j in WEDGE_PAIRS]

    def apply(self, x: Octonion) -> Octonion:
        return Octonion(tuple(self._m.dot(x.vector())))

    def __add__(self, other: "Skew8") -> "Skew8":
        return Skew8(self._m + other._m, check=False)

    def __sub__(self, other: "Skew8") -> "Skew8":
        return Skew8(self._m - other._m, check=False)

    def __neg__(self) -> "Skew8":
        return Skew8(-self._m, check=False)

    def __mul__(self, scalar) -> "Skew8":
        return Skew8(self._m * mx.frac(scalar), check=False)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, Skew8) and bool(np.all(self._m == other._m))

    def __hash__(self):
        return hash(tuple(self.coords()))

    def __bool__(self) -> bool:
        return not mx.is_zero(self._m)

    def __repr__(self) -> str:
        terms = [f"{c}*e{i}^e{j}" for (i, j), c in zip(WEDGE_PAIRS, self.coords()) if c]
        return "Skew8(" + (" + ".join(terms) if terms else "0") + ")"


def wedge(x: Octonion, y: Octonion) -> Skew8:
    """x ^ y = x y^t - y x^t."""
    xv, yv = x.vector(), y.vector()
    return Skew8(np.outer(xv, yv) - np.outer(yv, xv), check=False)


def commutator(a: Skew8, b: Skew8) -> Skew8:
    p, q = a.entries, b.entries
    return Skew8(p.dot(q) - q.dot(p), check=False)


def _basis_images(rule: Callable[[Octonion, Octonion], np.ndarray]) -> np.ndarray:
    """28x28 matrix whose column n holds the wedge coordinates of the image of basis n.

    ``rule(a, b)`` evaluates the map on ``a ^ b`` for pure ``a``.
    """
    cols = []
    for i, j in WEDGE_PAIRS:
        if i >= 1:
            img = rule(E[i], E[j])
        else:
            # e0 ^ e_j = -(e_j ^ e0) and e_j is pure
            img = -rule(E[j], E[0])
        if not mx.is_skew(img):
            raise NotSkewError(f"image of e{i}^e{j} is not skew")
        cols.append(Skew8(img, check=False).coords())
    return np.array(cols, dtype=object).T


# With x ^ y = x y^t - y x^t, the order-three automorphism is
# a ^ b -> -1/2 L_{conj b} L_a (a pure); the opposite sign gives an
# anti-automorphism whose cube is -1.


@lru_cache(maxsize=None)
def lambda_matrix() -> np.ndarray:
    """lambda(a ^ b) = -1/2 L_{conj b} L_a on wedge coordinates."""
    m = _basis_images(lambda a, b: -_HALF * left_mul_matrix(oct_conj(b)).dot(left_mul_matrix(a)))
    m.flags.writeable = False
    return m


@lru_cache(maxsize=None)
def lambda2_matrix() -> np.ndarray:
    """lambda^2(a ^ b) = -1/2 R_{conj b} R_a on wedge coordinates."""
    m = _basis_images(lambda a, b: -_HALF * right_mul_matrix(oct_conj(b)).dot(right_mul_matrix(a)))
    m.flags.writeable = False
    return m


def _check_skew(a: Skew8) -> None:
    if not isinstance(a, Skew8):
        raise TypeError(f"expected Skew8, got {type(a).__name__}")


def _apply_map(m: np.ndarray, a: Skew8) -> Skew8:
    # sum only the columns hit by nonzero coordinates; brackets of basis
    # elements mostly feed in one or two
    out = None
    for n, c in enumerate(a.coords()):
        if c:
            col = m[:, n] * c
            out = col if out is None else out + col
    return Skew8.zero() if out is None else Skew8.from_coords(out)


def triality_lambda(a: Skew8) -> Skew8:
    _check_skew(a)
    return _apply_map(lambda_matrix(), a)


def triality_lambda2(a: Skew8) -> Skew8:
    _check_skew(a)
    return _apply_map(lambda2_matrix(), a)


def kappa(a: Skew8) -> Skew8:
    """kappa(A) = Gamma A Gamma with Gamma = diag(1, -1, ..., -1)."""
    _check_skew(a)
    return Skew8(a.entries * _GAMMA_SIGNS, check=False)


BASIS = tuple(Skew8.basis(n) for n in range(SO8_DIM))
