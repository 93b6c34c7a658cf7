"""Exact scalars and raw exact matrices (numpy object arrays of ``mpq``).

This is the private layer that performs ordinary matrix products.  The public
types built on it (``Skew8``, ``OctOct``) decide which products they expose.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

import numpy as np
from gmpy2 import mpq

# Exact rational scalar: arbitrary precision, always in lowest terms.
Rational = mpq

ZERO = mpq(0)
ONE = mpq(1)


def frac(x) -> Rational:
    """Coerce ints (Python or numpy), Fractions and "p/q" strings to an exact rational."""
    if type(x) is Rational:
        return x
    if isinstance(x, float):
        raise TypeError(f"refusing float {x!r}; exact values only")
    if isinstance(x, str):
        return mpq(x.strip())
    if isinstance(x, Fraction):
        return mpq(x.numerator, x.denominator)
    if isinstance(x, np.integer):
        return mpq(int(x))
    return mpq(x)


def zeros(n: int, m: int | None = None) -> np.ndarray:
    m = n if m is None else m
    out = np.empty((n, m), dtype=object)
    out.fill(ZERO)
    return out


def identity(n: int) -> np.ndarray:
    out = zeros(n)
    for i in range(n):
        out[i, i] = ONE
    return out


def asmatrix(rows: Iterable[Iterable], shape: tuple[int, int] | None = None) -> np.ndarray:
    """Convert nested sequences (ints, Fractions, "p/q" strings) to an exact matrix."""
    arr = np.array([[frac(x) for x in row] for row in rows], dtype=object)
    if arr.ndim != 2:
        raise ValueError("expected a 2-d array")
    if shape is not None and arr.shape != shape:
        raise ValueError(f"expected shape {shape}, got {arr.shape}")
    return arr


def outer(x: Iterable, y: Iterable) -> np.ndarray:
    return np.outer(np.array(list(x), dtype=object), np.array(list(y), dtype=object))


def is_zero(m: np.ndarray) -> bool:
    return not any(m.flat)


def is_skew(m: np.ndarray) -> bool:
    return bool(np.all(m.T == -m))


def trace(m: np.ndarray) -> Rational:
    return sum(m.diagonal(), ZERO)
