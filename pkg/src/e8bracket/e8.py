"""The 248-dimensional bracket on (so(8)+so(8)) x (Ca (x) Ca)^3.

Elements are ``E8Element(A, u, v, w)`` with ``A = (P, Q)``.  The canonical
coordinate order is P (28 wedges), Q (28 wedges), then u, v, w (64 each,
row-major ``e_i (x) e_j``).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from . import _matrix as mx
from .octoct import (
    OO_DIM,
    Lambda,
    Lambda2,
    OctOct,
    SoPair,
    curly_wedge,
    oo_conj,
    oo_mul,
    pair_bracket,
    so_pair_act,
)
from .so8 import SO8_DIM

E8_DIM = 2 * SO8_DIM + 3 * OO_DIM
_OFFSETS = (0, 2 * SO8_DIM, 2 * SO8_DIM + OO_DIM, 2 * SO8_DIM + 2 * OO_DIM, E8_DIM)


@dataclass(frozen=True)
class E8Element:
    A: SoPair
    u: OctOct
    v: OctOct
    w: OctOct

    @classmethod
    def zero(cls) -> "E8Element":
        z = OctOct.zero()
        return cls(SoPair.zero(), z, z, z)

    @classmethod
    def from_coords(cls, coords: Iterable) -> "E8Element":
        c = [mx.frac(x) for x in coords]
        if len(c) != E8_DIM:
            raise ValueError(f"expected {E8_DIM} coordinates, got {len(c)}")
        a, b, d, e, f = _OFFSETS
        return cls(
            SoPair.from_coords(c[a:b]),
            OctOct.from_coords(c[b:d]),
            OctOct.from_coords(c[d:e]),
            OctOct.from_coords(c[e:f]),
        )

    @classmethod
    def basis(cls, n: int) -> "E8Element":
        c = [0] * E8_DIM
        c[n] = 1
        return cls.from_coords(c)

    def coords(self) -> list[mx.Rational]:
        return self.A.coords() + self.u.coords() + self.v.coords() + self.w.coords()

    @property
    def P(self):
        return self.A.P

    @property
    def Q(self):
        return self.A.Q

    def __add__(self, other: "E8Element") -> "E8Element":
        return E8Element(self.A + other.A, self.u + other.u, self.v + other.v, self.w + other.w)

    def __sub__(self, other: "E8Element") -> "E8Element":
        return E8Element(self.A - other.A, self.u - other.u, self.v - other.v, self.w - other.w)

    def __neg__(self) -> "E8Element":
        return E8Element(-self.A, -self.u, -self.v, -self.w)

    def __mul__(self, scalar) -> "E8Element":
        return E8Element(self.A * scalar, self.u * scalar, self.v * scalar, self.w * scalar)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, E8Element) and self.coords() == other.coords()

    def __hash__(self):
        return hash(tuple(self.coords()))

    def __bool__(self) -> bool:
        return any(self.coords())


def _bracket(xi: E8Element, eta: E8Element, sign: int) -> E8Element:
    A, u, v, w = xi.A, xi.u, xi.v, xi.w
    B, x, y, z = eta.A, eta.u, eta.v, eta.w
    # zero blocks are skipped; basis elements have a single nonzero block
    C = pair_bracket(A, B) if A and B else SoPair.zero()
    if u and x:
        C = C - 4 * curly_wedge(u, x)
    if v and y:
        C = C - (4 * sign) * Lambda2(curly_wedge(v, y))
    if w and z:
        C = C - (4 * sign) * Lambda(curly_wedge(w, z))

    r = _act(A, x) - _act(B, u) + sign * (_conj_mul(v, z) - _conj_mul(y, w))
    LA, LB = (Lambda(A) if A else A), (Lambda(B) if B else B)
    s = _act(LA, y) - _act(LB, v) + _conj_mul(w, x) - _conj_mul(z, u)
    L2A, L2B = (Lambda2(A) if A else A), (Lambda2(B) if B else B)
    t = _act(L2A, z) - _act(L2B, w) + _conj_mul(u, y) - _conj_mul(x, v)
    return E8Element(C, r, s, t)


def _act(a: SoPair, x: OctOct) -> OctOct:
    return so_pair_act(a, x) if a and x else OctOct.zero()


def _conj_mul(x: OctOct, y: OctOct) -> OctOct:
    return oo_conj(oo_mul(x, y)) if x and y else OctOct.zero()


def e8_bracket(xi: E8Element, eta: E8Element) -> E8Element:
    """Bracket of the compact form."""
    return _bracket(xi, eta, 1)


def e8_split_bracket(xi: E8Element, eta: E8Element) -> E8Element:
    """Bracket of the split form: the v/w-quadratic terms of C and r change sign."""
    return _bracket(xi, eta, -1)


def tau(xi: E8Element) -> E8Element:
    """(A, x, y, z) -> (Lambda(A), y, z, x); order three."""
    return E8Element(Lambda(xi.A), xi.v, xi.w, xi.u)


def cartan_involution(xi: E8Element) -> E8Element:
    """(A, u, v, w) -> (A, u, -v, -w)."""
    return E8Element(xi.A, xi.u, -xi.v, -xi.w)


def scalar_product(xi: E8Element, eta: E8Element) -> mx.Rational:
    """8 tr(u x^t + v y^t + w z^t) - tr(A C) - tr(B D)."""
    oo = sum(
        (mx.frac(sum(a * b for a, b in zip(p.coords(), q.coords())))
         for p, q in ((xi.u, eta.u), (xi.v, eta.v), (xi.w, eta.w))),
        mx.ZERO,
    )
    so = mx.trace(xi.P.entries.dot(eta.P.entries)) + mx.trace(xi.Q.entries.dot(eta.Q.entries))
    return 8 * oo - so
