"""The 52-dimensional compact f4 on so(8) x Ca^3."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from . import _matrix as mx
from .octonion import DIM, Octonion, oct_conj, oct_mul
from .so8 import SO8_DIM, Skew8, commutator, triality_lambda, triality_lambda2, wedge

F4_DIM = SO8_DIM + 3 * DIM


@dataclass(frozen=True)
class F4Element:
    A: Skew8
    u: Octonion
    v: Octonion
    w: Octonion

    @classmethod
    def zero(cls) -> "F4Element":
        z = Octonion.zero()
        return cls(Skew8.zero(), z, z, z)

    @classmethod
    def from_coords(cls, coords: Iterable) -> "F4Element":
        c = [mx.frac(x) for x in coords]
        if len(c) != F4_DIM:
            raise ValueError(f"expected {F4_DIM} coordinates, got {len(c)}")
        n = SO8_DIM
        return cls(
            Skew8.from_coords(c[:n]),
            Octonion(c[n:n + DIM]),
            Octonion(c[n + DIM:n + 2 * DIM]),
            Octonion(c[n + 2 * DIM:]),
        )

    @classmethod
    def basis(cls, n: int) -> "F4Element":
        c = [0] * F4_DIM
        c[n] = 1
        return cls.from_coords(c)

    def coords(self) -> list:
        return self.A.coords() + list(self.u) + list(self.v) + list(self.w)

    def __add__(self, other: "F4Element") -> "F4Element":
        return F4Element(self.A + other.A, self.u + other.u, self.v + other.v, self.w + other.w)

    def __sub__(self, other: "F4Element") -> "F4Element":
        return F4Element(self.A - other.A, self.u - other.u, self.v - other.v, self.w - other.w)

    def __neg__(self) -> "F4Element":
        return F4Element(-self.A, -self.u, -self.v, -self.w)

    def __mul__(self, scalar) -> "F4Element":
        return F4Element(self.A * scalar, self.u * scalar, self.v * scalar, self.w * scalar)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, F4Element) and self.coords() == other.coords()

    def __hash__(self):
        return hash(tuple(self.coords()))

    def __bool__(self) -> bool:
        return any(self.coords())


def _cm(a: Octonion, b: Octonion) -> Octonion:
    return oct_conj(oct_mul(a, b))


def f4_bracket(xi: F4Element, eta: F4Element) -> F4Element:
    A, u, v, w = xi.A, xi.u, xi.v, xi.w
    B, x, y, z = eta.A, eta.u, eta.v, eta.w
    C = (
        commutator(A, B)
        - 4 * wedge(u, x)
        - 4 * triality_lambda2(wedge(v, y))
        - 4 * triality_lambda(wedge(w, z))
    )
    lA, lB = triality_lambda(A), triality_lambda(B)
    l2A, l2B = triality_lambda2(A), triality_lambda2(B)
    r = A.apply(x) - B.apply(u) + _cm(v, z) - _cm(y, w)
    s = lA.apply(y) - lB.apply(v) + _cm(w, x) - _cm(z, u)
    t = l2A.apply(z) - l2B.apply(w) + _cm(u, y) - _cm(x, v)
    return F4Element(C, r, s, t)


def f4_tau(xi: F4Element) -> F4Element:
    """(A, u, v, w) -> (lambda(A), v, w, u)."""
    return F4Element(triality_lambda(xi.A), xi.v, xi.w, xi.u)
