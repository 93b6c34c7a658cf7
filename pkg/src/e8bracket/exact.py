"""Exact linear algebra over Q on numpy object arrays of ``mpq``."""

from __future__ import annotations

import numpy as np
from scipy import sparse

from . import _matrix as mx


def to_rational_matrix(m, scale=1) -> np.ndarray:
    """Copy an int / rational array into an ``mpq`` object array, dividing by ``scale``."""
    arr = np.asarray(m)
    out = np.empty(arr.shape, dtype=object)
    s = mx.frac(scale)
    flat = out.reshape(-1)
    for n, x in enumerate(arr.reshape(-1).tolist()):
        flat[n] = mx.frac(x) / s
    return out


def rref(m: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns."""
    a = to_rational_matrix(m) if m.dtype != object else m.copy()
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = [i for i in range(r, rows) if a[i, c]]
        if not nz:
            continue
        p = nz[0]
        if p != r:
            a[[r, p]] = a[[p, r]]
        a[r] = a[r] / a[r, c]
        for i in range(rows):
            if i != r and a[i, c]:
                a[i] = a[i] - a[i, c] * a[r]
        pivots.append(c)
        r += 1
    return a, pivots


def rank(m: np.ndarray) -> int:
    return len(rref(m)[1])


def nullspace(m: np.ndarray) -> list[np.ndarray]:
    """Basis of {x : m x = 0}, one vector per free column."""
    a, pivots = rref(m)
    cols = a.shape[1]
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = []
    for f in free:
        x = np.empty(cols, dtype=object)
        x.fill(mx.ZERO)
        x[f] = mx.ONE
        for r, p in enumerate(pivots):
            x[p] = -a[r, f]
        basis.append(x)
    return basis


def gram(m) -> np.ndarray:
    """m^T m; over Q its kernel equals the kernel of m, and it is square."""
    arr = np.asarray(m)
    if arr.dtype == object:
        return arr.T.dot(arr)
    s = sparse.csr_array(arr.astype(np.int64))
    return to_rational_matrix((s.T @ s).toarray())


def signature(s: np.ndarray) -> tuple[int, int, int]:
    """(n_plus, n_minus, n_zero) of a symmetric rational matrix, by congruence.

    Diagonal pivots are used when available; otherwise a nonzero off-diagonal
    entry with zero diagonal gives a 2x2 block [[0, b], [b, 0]] of signature
    (1, 1) that is eliminated as a unit.
    """
    a = to_rational_matrix(s) if s.dtype != object else s.copy()
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("signature needs a square matrix")
    if not np.all(a == a.T):
        raise ValueError("signature needs a symmetric matrix")
    plus = minus = 0
    while a.shape[0]:
        d = a.diagonal()
        idx = next((i for i in range(a.shape[0]) if d[i]), None)
        if idx is not None:
            p = a[idx, idx]
            if p > 0:
                plus += 1
            else:
                minus += 1
            col = np.delete(a[:, idx], idx)
            a = np.delete(np.delete(a, idx, 0), idx, 1)
            if any(col):
                a = a - np.outer(col, col) / p
            continue
        nz = np.argwhere(a != 0)
        if not len(nz):
            break
        i, j = (int(x) for x in nz[0])
        b = a[i, j]
        plus += 1
        minus += 1
        ci = np.delete(a[:, i], [i, j])
        cj = np.delete(a[:, j], [i, j])
        a = np.delete(np.delete(a, [i, j], 0), [i, j], 1)
        # block inverse of [[0, b], [b, 0]] is [[0, 1/b], [1/b, 0]]
        if any(ci) or any(cj):
            cross = np.outer(ci, cj) / b
            a = a - cross - cross.T
    return plus, minus, n - plus - minus
