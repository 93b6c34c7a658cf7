"""Oct-octonions Ca (x) Ca stored as 8x8 matrices (x (x) y = x y^t).

``OctOct`` has no matrix product on purpose: the algebra product is
``oo_mul``.  The matrix products needed for the so(8)+so(8) action and the
curly wedge go through the raw layer in ``_matrix``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from . import _matrix as mx
from .octonion import DIM, MULT_TABLE, Octonion
from .so8 import GAMMA, SO8_DIM, Skew8, commutator, triality_lambda, triality_lambda2

OO_DIM = DIM * DIM


class OctOct:
    __slots__ = ("_m",)

    def __init__(self, entries):
        m = entries if isinstance(entries, np.ndarray) and entries.dtype == object else mx.asmatrix(entries)
        if m.shape != (DIM, DIM):
            raise ValueError(f"oct-octonions are 8x8 matrices, got {m.shape}")
        m = m.copy()
        m.flags.writeable = False
        self._m = m

    @classmethod
    def zero(cls) -> "OctOct":
        return cls(mx.zeros(DIM))

    @classmethod
    def tensor(cls, x: Octonion, y: Octonion) -> "OctOct":
        return cls(np.outer(x.vector(), y.vector()))

    @classmethod
    def basis(cls, n: int) -> "OctOct":
        """e_i (x) e_j for n = 8 i + j."""
        m = mx.zeros(DIM)
        m[divmod(n, DIM)] = mx.ONE
        return cls(m)

    @classmethod
    def from_coords(cls, coords: Iterable) -> "OctOct":
        c = [mx.frac(x) for x in coords]
        if len(c) != OO_DIM:
            raise ValueError(f"expected {OO_DIM} coordinates, got {len(c)}")
        return cls(np.array(c, dtype=object).reshape(DIM, DIM))

    @property
    def entries(self) -> np.ndarray:
        return self._m

    @property
    def T(self) -> "OctOct":
        return OctOct(self._m.T)

    def coords(self) -> list:
        return list(self._m.flat)

    def __add__(self, other: "OctOct") -> "OctOct":
        return OctOct(self._m + other._m)

    def __sub__(self, other: "OctOct") -> "OctOct":
        return OctOct(self._m - other._m)

    def __neg__(self) -> "OctOct":
        return OctOct(-self._m)

    def __mul__(self, scalar) -> "OctOct":
        if isinstance(scalar, OctOct):
            raise TypeError("use oo_mul for the oct-octonion product")
        return OctOct(self._m * mx.frac(scalar))

    __rmul__ = __mul__

    def __matmul__(self, other):
        raise TypeError("OctOct has no matrix product; use oo_mul")

    def __eq__(self, other) -> bool:
        return isinstance(other, OctOct) and bool(np.all(self._m == other._m))

    def __hash__(self):
        return hash(tuple(self._m.flat))

    def __bool__(self) -> bool:
        return not mx.is_zero(self._m)

    def __repr__(self) -> str:
        terms = [f"{c}*e{n // DIM}@e{n % DIM}" for n, c in enumerate(self._m.flat) if c]
        return "OctOct(" + (" + ".join(terms) if terms else "0") + ")"


@dataclass(frozen=True)
class SoPair:
    """(P, Q) in so(8) + so(8)."""

    P: Skew8
    Q: Skew8

    @classmethod
    def zero(cls) -> "SoPair":
        return cls(Skew8.zero(), Skew8.zero())

    @classmethod
    def basis(cls, n: int) -> "SoPair":
        if n < SO8_DIM:
            return cls(Skew8.basis(n), Skew8.zero())
        return cls(Skew8.zero(), Skew8.basis(n - SO8_DIM))

    @classmethod
    def from_coords(cls, coords: Iterable) -> "SoPair":
        c = list(coords)
        if len(c) != 2 * SO8_DIM:
            raise ValueError(f"expected {2 * SO8_DIM} coordinates, got {len(c)}")
        return cls(Skew8.from_coords(c[:SO8_DIM]), Skew8.from_coords(c[SO8_DIM:]))

    def coords(self) -> list:
        return self.P.coords() + self.Q.coords()

    def __add__(self, other: "SoPair") -> "SoPair":
        return SoPair(self.P + other.P, self.Q + other.Q)

    def __sub__(self, other: "SoPair") -> "SoPair":
        return SoPair(self.P - other.P, self.Q - other.Q)

    def __neg__(self) -> "SoPair":
        return SoPair(-self.P, -self.Q)

    def __mul__(self, scalar) -> "SoPair":
        return SoPair(self.P * scalar, self.Q * scalar)

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return bool(self.P) or bool(self.Q)


def pair_bracket(a: SoPair, b: SoPair) -> SoPair:
    return SoPair(commutator(a.P, b.P), commutator(a.Q, b.Q))


def _product_indices():
    ij, kl, mn, sign = [], [], [], []
    for i, j, k, l in np.ndindex(DIM, DIM, DIM, DIM):
        s1, m = MULT_TABLE[i][k]
        s2, n = MULT_TABLE[j][l]
        ij.append(i * DIM + j)
        kl.append(k * DIM + l)
        mn.append(m * DIM + n)
        sign.append(s1 * s2)
    return np.array(ij), np.array(kl), np.array(mn), np.array(sign)


# (e_i (x) e_j) . (e_k (x) e_l) = sign * e_m (x) e_n, for all 4096 index tuples
_IJ, _KL, _MN, _SIGN = _product_indices()


def oo_mul(x: OctOct, y: OctOct) -> OctOct:
    """(a (x) b) . (c (x) d) = ac (x) bd, extended bilinearly."""
    xm, ym = x.entries, y.entries
    xnz, ynz = np.flatnonzero(xm), np.flatnonzero(ym)
    out = np.empty(OO_DIM, dtype=object)
    out.fill(mx.ZERO)
    if len(xnz) * len(ynz) > 256:
        xf, yf = xm.reshape(-1), ym.reshape(-1)
        np.add.at(out, _MN, _SIGN * (xf[_IJ] * yf[_KL]))
        return OctOct(out.reshape(DIM, DIM))
    for p in xnz:
        i, j = divmod(int(p), DIM)
        a = xm[i, j]
        ri, rj = MULT_TABLE[i], MULT_TABLE[j]
        for q in ynz:
            k, l = divmod(int(q), DIM)
            s1, m = ri[k]
            s2, n = rj[l]
            out[m * DIM + n] += (s1 * s2) * a * ym[k, l]
    return OctOct(out.reshape(DIM, DIM))


def oo_conj(x: OctOct) -> OctOct:
    return OctOct(GAMMA.dot(x.entries).dot(GAMMA).astype(object))


def so_pair_act(a: SoPair, x: OctOct) -> OctOct:
    """(P, Q).X = P X - X Q."""
    m = x.entries
    return OctOct(a.P.entries.dot(m) - m.dot(a.Q.entries))


def curly_wedge(x: OctOct, y: OctOct) -> SoPair:
    """X curly-wedge Y = (X Y^t - Y X^t, X^t Y - Y^t X)."""
    xm, ym = x.entries, y.entries
    p = xm.dot(ym.T)
    q = xm.T.dot(ym)
    return SoPair(Skew8(p - p.T, check=False), Skew8(q - q.T, check=False))


def Lambda(a: SoPair) -> SoPair:
    return SoPair(triality_lambda(a.P), triality_lambda(a.Q))


def Lambda2(a: SoPair) -> SoPair:
    return SoPair(triality_lambda2(a.P), triality_lambda2(a.Q))


# so(16) model on (so(8) + so(8)) x R(8)

SO16_DIM = 2 * SO8_DIM + OO_DIM


def so16_embed(a: SoPair, x: OctOct) -> np.ndarray:
    """((P, Q), X) -> [[P, 2X], [-2X^t, Q]]."""
    out = mx.zeros(2 * DIM)
    out[:DIM, :DIM] = a.P.entries
    out[DIM:, DIM:] = a.Q.entries
    out[:DIM, DIM:] = 2 * x.entries
    out[DIM:, :DIM] = -2 * x.entries.T
    return out


def so16_bracket(first: tuple[SoPair, OctOct], second: tuple[SoPair, OctOct]) -> tuple[SoPair, OctOct]:
    """[(A, X), (B, Y)] = ([A, B] - 4 X curly-wedge Y, A.Y - B.X)."""
    a, x = first
    b, y = second
    c = pair_bracket(a, b) - 4 * curly_wedge(x, y)
    return c, so_pair_act(a, y) - so_pair_act(b, x)
