"""Exact octonion arithmetic over the basis e0..e7 (e0 is the unit)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from . import _matrix as mx

DIM = 8

# The seven defining products e_a e_b = e_c.
GENERATING_TRIPLES = ((1, 2, 3), (1, 4, 5), (2, 4, 6), (3, 4, 7), (5, 3, 6), (6, 1, 7), (7, 2, 5))


class MultiplicationTableError(ValueError):
    pass


def _generate_table() -> tuple[tuple[tuple[int, int], ...], ...]:
    """Close the generating products into the full signed table.

    ``table[i][j] == (s, k)`` means ``e_i e_j = s * e_k``.
    """
    table: dict[tuple[int, int], tuple[int, int]] = {}

    def put(i, j, s, k):
        old = table.get((i, j))
        if old is not None and old != (s, k):
            raise MultiplicationTableError(
                f"inconsistent product e{i}e{j}: {old} vs {(s, k)}"
            )
        if old is None:
            table[(i, j)] = (s, k)
            return True
        return False

    for i in range(DIM):
        put(0, i, 1, i)
        put(i, 0, 1, i)
    for i in range(1, DIM):
        put(i, i, -1, 0)
    for a, b, c in GENERATING_TRIPLES:
        put(a, b, 1, c)

    changed = True
    while changed:
        changed = False
        for (x, y), (s, z) in list(table.items()):
            if x == 0 or y == 0 or x == y:
                continue
            # distinct imaginary units anticommute
            changed |= put(y, x, -s, z)
            # x(xy) = (xx)y = -y  =>  e_x e_z = -s e_y
            changed |= put(x, z, -s, y)
            # (xy)y = x(yy) = -x  =>  e_z e_y = -s e_x
            changed |= put(z, y, -s, x)

    missing = [(i, j) for i in range(DIM) for j in range(DIM) if (i, j) not in table]
    if missing:
        raise MultiplicationTableError(f"products not determined: {missing}")
    return tuple(tuple(table[(i, j)] for j in range(DIM)) for i in range(DIM))


MULT_TABLE = _generate_table()

# STRUCTURE[i, j, k] = coefficient of e_k in e_i e_j
STRUCTURE = np.zeros((DIM, DIM, DIM), dtype=np.int64)
for _i in range(DIM):
    for _j in range(DIM):
        _s, _k = MULT_TABLE[_i][_j]
        STRUCTURE[_i, _j, _k] = _s


@dataclass(frozen=True)
class Octonion:
    coeffs: tuple[mx.Rational, ...]

    def __post_init__(self):
        c = tuple(mx.frac(x) for x in self.coeffs)
        if len(c) != DIM:
            raise ValueError(f"an octonion has {DIM} coefficients, got {len(c)}")
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def basis(cls, i: int) -> "Octonion":
        return cls(tuple(1 if k == i else 0 for k in range(DIM)))

    @classmethod
    def zero(cls) -> "Octonion":
        return cls((0,) * DIM)

    @classmethod
    def from_vector(cls, v: Iterable) -> "Octonion":
        return cls(tuple(v))

    def __getitem__(self, i: int) -> mx.Rational:
        return self.coeffs[i]

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self) -> int:
        return DIM

    def __add__(self, other: "Octonion") -> "Octonion":
        return Octonion(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Octonion") -> "Octonion":
        return Octonion(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "Octonion":
        return Octonion(tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, Octonion):
            return oct_mul(self, other)
        return Octonion(tuple(a * other for a in self.coeffs))

    def __rmul__(self, scalar):
        return Octonion(tuple(scalar * a for a in self.coeffs))

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def conj(self) -> "Octonion":
        return oct_conj(self)

    def vector(self) -> np.ndarray:
        return np.array(self.coeffs, dtype=object)

    def __repr__(self) -> str:
        terms = [f"{c}*e{i}" for i, c in enumerate(self.coeffs) if c]
        return "Octonion(" + (" + ".join(terms) if terms else "0") + ")"


def oct_mul(a: Octonion, b: Octonion) -> Octonion:
    out = [mx.ZERO] * DIM
    for i, x in enumerate(a.coeffs):
        if not x:
            continue
        row = MULT_TABLE[i]
        for j, y in enumerate(b.coeffs):
            if y:
                s, k = row[j]
                out[k] += s * x * y
    return Octonion(tuple(out))


def oct_conj(a: Octonion) -> Octonion:
    c = a.coeffs
    return Octonion((c[0],) + tuple(-x for x in c[1:]))


def oct_re(a: Octonion) -> mx.Rational:
    return a.coeffs[0]


def oct_pu(a: Octonion) -> Octonion:
    return Octonion((0,) + a.coeffs[1:])


def oct_inner(u: Octonion, v: Octonion) -> mx.Rational:
    return sum((x * y for x, y in zip(u.coeffs, v.coeffs)), mx.ZERO)


def oct_norm_sq(a: Octonion) -> mx.Rational:
    return oct_inner(a, a)


def left_mul_matrix(a: Octonion) -> np.ndarray:
    """Matrix of x -> a x; column j is the image of e_j."""
    m = mx.zeros(DIM)
    for i, x in enumerate(a.coeffs):
        if not x:
            continue
        for j in range(DIM):
            s, k = MULT_TABLE[i][j]
            m[k, j] += s * x
    return m


def right_mul_matrix(a: Octonion) -> np.ndarray:
    """Matrix of x -> x a; column j is the image of e_j."""
    m = mx.zeros(DIM)
    for i, x in enumerate(a.coeffs):
        if not x:
            continue
        for j in range(DIM):
            s, k = MULT_TABLE[j][i]
            m[k, j] += s * x
    return m


def apply(m: np.ndarray, a: Octonion) -> Octonion:
    """Apply an 8x8 matrix to the coordinate vector of ``a``."""
    return Octonion(tuple(m.dot(a.vector())))


E = tuple(Octonion.basis(i) for i in range(DIM))
