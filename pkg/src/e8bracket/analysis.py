"""Structure constants and the exact certification checks built on them.

Everything here is exact except ``cartan_and_roots``, which uses floating
point to find joint eigenvectors and then re-validates the rounded weights.
"""

from __future__ import annotations

import hashlib
import itertools
import json
import logging
import math
import multiprocessing
import os
import random
import time
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from pathlib import Path
from typing import Callable, Sequence

import numpy as np
from scipy import sparse

from . import _matrix as mx
from . import exact
from .e8 import E8_DIM, E8Element, e8_bracket, e8_split_bracket, scalar_product
from .f4 import F4_DIM, F4Element, f4_bracket
from .octoct import OO_DIM, SO16_DIM, OctOct, SoPair, so16_bracket
from .so8 import SO8_DIM, WEDGE_PAIRS

log = logging.getLogger(__name__)

ALGEBRAS = ("f4", "e8", "e8_split", "so16")
CACHE_ENV = "E8_CACHE_DIR"


# ---------------------------------------------------------------------------
# algebra registry


def _wedge_labels(prefix: str) -> list[str]:
    return [f"{prefix}:e{i}^e{j}" for i, j in WEDGE_PAIRS]


def _oo_labels(prefix: str) -> list[str]:
    return [f"{prefix}:e{n // 8}@e{n % 8}" for n in range(OO_DIM)]


def basis_labels(algebra: str) -> list[str]:
    if algebra == "f4":
        return _wedge_labels("so8") + [f"{c}:e{k}" for c in "uvw" for k in range(8)]
    if algebra in ("e8", "e8_split"):
        return _wedge_labels("so8a") + _wedge_labels("so8b") + sum((_oo_labels(c) for c in "uvw"), [])
    if algebra == "so16":
        return _wedge_labels("so8a") + _wedge_labels("so8b") + _oo_labels("x")
    raise ValueError(f"unknown algebra {algebra!r}; expected one of {ALGEBRAS}")


def _so16_from_coords(c):
    n = 2 * SO8_DIM
    return SoPair.from_coords(c[:n]), OctOct.from_coords(c[n:])


@dataclass(frozen=True)
class Algebra:
    name: str
    dim: int
    from_coords: Callable
    coords: Callable
    bracket: Callable


def algebra_model(name: str) -> Algebra:
    name = normalize_name(name)
    if name == "f4":
        return Algebra(name, F4_DIM, F4Element.from_coords, F4Element.coords, f4_bracket)
    if name == "e8":
        return Algebra(name, E8_DIM, E8Element.from_coords, E8Element.coords, e8_bracket)
    if name == "e8_split":
        return Algebra(name, E8_DIM, E8Element.from_coords, E8Element.coords, e8_split_bracket)
    return Algebra(
        name, SO16_DIM, _so16_from_coords, lambda x: x[0].coords() + x[1].coords(), so16_bracket
    )


def normalize_name(name: str) -> str:
    n = name.lower().replace("-", "_")
    if n not in ALGEBRAS:
        raise ValueError(f"unknown algebra {name!r}; expected one of {ALGEBRAS}")
    return n


# ---------------------------------------------------------------------------
# structure tables


@dataclass(frozen=True)
class StructureTable:
    """Nonzero c_ijk with [b_i, b_j] = sum_k c_ijk b_k, stored for i < j."""

    algebra: str
    dim: int
    basis: tuple[str, ...]
    entries: tuple[tuple[int, int, int, mx.Rational], ...]

    def __post_init__(self):
        if len(self.basis) != self.dim:
            raise ValueError("basis labels do not match dim")
        for i, j, k, c in self.entries:
            if not (0 <= i < j < self.dim and 0 <= k < self.dim) or not c:
                raise ValueError(f"invalid structure-constant entry {(i, j, k, c)}")

    @cached_property
    def scale(self) -> int:
        """Least common denominator of all constants."""
        return math.lcm(1, *(int(c.denominator) for *_, c in self.entries))

    @cached_property
    def int_tensor(self) -> np.ndarray:
        """Dense skew tensor T[i, j, k] = scale * c_ijk as int64."""
        n = self.dim
        t = np.zeros((n, n, n), dtype=np.int64)
        for i, j, k, c in self.entries:
            v = int(c * self.scale)
            t[i, j, k] = v
            t[j, i, k] = -v
        return t

    @cached_property
    def _arrays(self):
        """Entry columns sorted by output index k, plus reduceat segment starts."""
        if not self.entries:
            e = np.zeros(0, dtype=np.int64)
            return e, e, e, np.zeros(0, dtype=object), e
        order = sorted(range(len(self.entries)), key=lambda n: self.entries[n][2])
        i, j, k, c = zip(*(self.entries[n] for n in order))
        k = np.array(k)
        starts = np.flatnonzero(np.r_[True, k[1:] != k[:-1]])
        return np.array(i), np.array(j), k, np.array(c, dtype=object), starts

    def coefficient(self, i: int, j: int, k: int) -> mx.Rational:
        if i == j:
            return mx.ZERO
        sign = 1
        if i > j:
            i, j, sign = j, i, -1
        return sign * self._lookup.get((i, j, k), mx.ZERO)

    @cached_property
    def _lookup(self) -> dict:
        return {(i, j, k): c for i, j, k, c in self.entries}

    def bracket(self, x: Sequence, y: Sequence) -> list[mx.Rational]:
        """Bracket of coordinate vectors, evaluated from the table.

        Inputs are cleared of denominators so the sum runs over integers;
        int64 is used when a magnitude bound rules out overflow.
        """
        xs, dx = _integerize(x)
        ys, dy = _integerize(y)
        i, j, k, c, starts = self._arrays
        out = [mx.ZERO] * self.dim
        if not len(c):
            return out
        cs = self._int_coeffs
        bound = max(map(abs, xs)) * max(map(abs, ys)) * int(np.max(np.abs(cs))) * 2 * len(cs)
        dtype = np.int64 if bound < 2**62 else object
        xv, yv = np.array(xs, dtype=dtype), np.array(ys, dtype=dtype)
        terms = cs.astype(dtype) * (xv[i] * yv[j] - xv[j] * yv[i])
        sums = np.add.reduceat(terms, starts)
        denom = self.scale * dx * dy
        for kk, v in zip(k[starts].tolist(), sums.tolist()):
            out[kk] = mx.Rational(int(v), denom)
        return out

    @cached_property
    def _int_coeffs(self) -> np.ndarray:
        return np.array([int(c * self.scale) for c in self._arrays[3]], dtype=np.int64)

    def ad_int(self, i: int) -> np.ndarray:
        """scale * ad(b_i) as an int matrix: column k holds [b_i, b_k]."""
        return self.int_tensor[i].T.copy()

    def distinct_abs_values(self) -> list[mx.Rational]:
        return sorted({abs(c) for *_, c in self.entries})


def _integerize(v: Sequence) -> tuple[list[int], int]:
    q = [mx.frac(a) for a in v]
    d = math.lcm(1, *(int(a.denominator) for a in q))
    return [int(a * d) for a in q], d


def _generator_hash() -> str:
    h = hashlib.sha256()
    here = Path(__file__).parent
    for name in ("octonion.py", "so8.py", "octoct.py", "f4.py", "e8.py", "_matrix.py"):
        h.update((here / name).read_bytes())
    return h.hexdigest()[:16]


def _cache_path(algebra: str) -> Path | None:
    root = os.environ.get(CACHE_ENV)
    if not root:
        return None
    return Path(root) / f"{algebra}-{_generator_hash()}.json"


def _compute_table(algebra: str) -> StructureTable:
    model = algebra_model(algebra)
    n = model.dim
    basis = []
    for m in range(n):
        c = [0] * n
        c[m] = 1
        basis.append(model.from_coords(c))
    entries = []
    for i in range(n):
        for j in range(i + 1, n):
            for k, c in enumerate(model.coords(model.bracket(basis[i], basis[j]))):
                if c:
                    entries.append((i, j, k, mx.frac(c)))
    return StructureTable(model.name, n, tuple(basis_labels(model.name)), tuple(entries))


@lru_cache(maxsize=None)
def build_structure_table(algebra: str) -> StructureTable:
    """Tabulate the bracket of ``algebra`` on its canonical basis.

    With ``E8_CACHE_DIR`` set, tables are stored there as JSON keyed by a hash
    of the generating source, so edits to the bracket code invalidate them.
    """
    algebra = normalize_name(algebra)
    path = _cache_path(algebra)
    if path is not None and path.exists():
        log.info("loading cached %s table from %s", algebra, path)
        return table_from_json(json.loads(path.read_text()))
    t0 = time.perf_counter()
    table = _compute_table(algebra)
    log.info("built %s table: %d entries in %.1fs", algebra, len(table.entries), time.perf_counter() - t0)
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(".tmp")
        tmp.write_text(json.dumps(table_to_json(table)))
        tmp.replace(path)
    return table


def table_to_json(table: StructureTable) -> dict:
    return {
        "algebra": table.algebra,
        "dim": table.dim,
        "basis": list(table.basis),
        "entries": [{"i": i, "j": j, "k": k, "c": str(c)} for i, j, k, c in table.entries],
    }


def table_from_json(data: dict) -> StructureTable:
    entries = tuple(
        sorted((int(e["i"]), int(e["j"]), int(e["k"]), mx.frac(e["c"])) for e in data["entries"])
    )
    return StructureTable(data["algebra"], int(data["dim"]), tuple(data["basis"]), entries)


# ---------------------------------------------------------------------------
# verification


@dataclass
class VerificationReport:
    check: str
    algebra: str
    mode: str
    tested: int
    failures: list = field(default_factory=list)
    elapsed: float = 0.0
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self, timing: bool = True) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {self.check} [{self.algebra}, {self.mode}]: {self.tested} tested, {len(self.failures)} failures"
        return text + (f", {self.elapsed:.2f}s" if timing else "")

    def to_dict(self, timing: bool = True) -> dict:
        d = {
            "check": self.check,
            "algebra": self.algebra,
            "mode": self.mode,
            "tested": self.tested,
            "passed": self.passed,
            "failures": self.failures,
            "details": self.details,
        }
        if timing:
            d["elapsed"] = round(self.elapsed, 3)
        return d


def random_vector(rng: random.Random, dim: int) -> list[mx.Rational]:
    return [mx.Rational(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(dim)]


def _residual_dict(idx, residual) -> dict:
    return {"triple": list(idx), "residual": {str(k): str(v) for k, v in residual}}


# Exhaustive sweep state is module-global so forked workers share it without pickling.
_SWEEP: dict = {}


def _jacobi_rows(i_values) -> list[tuple[int, int, int, list]]:
    t = _SWEEP["tensor"]
    n = t.shape[0]
    flat = _SWEEP["flat"]
    spread = _SWEEP["spread"]
    bad = []
    for i in i_values:
        a_i = sparse.csr_array(t[i])
        t1 = (flat @ a_i).tocoo()
        h = (a_i @ spread).tocoo()
        # [b_i,[b_j,b_l]] at ((j*n+l)*n+m)
        idx1 = t1.row.astype(np.int64) * n + t1.col
        # [b_j,[b_l,b_i]] = -sum_k c_ilk c_jkm, from h[l, j*n+m]
        hb, hm = np.divmod(h.col.astype(np.int64), n)
        idx2 = hb * n * n + h.row.astype(np.int64) * n + hm
        # [b_l,[b_i,b_j]] = sum_k c_ijk c_lkm, from h[j, l*n+m]
        idx3 = h.row.astype(np.int64) * n * n + h.col
        total = sparse.coo_array(
            (
                np.concatenate([t1.data, -h.data, h.data]),
                (np.zeros(len(idx1) + 2 * len(idx2), dtype=np.int64), np.concatenate([idx1, idx2, idx3])),
            ),
            shape=(1, n**3),
        )
        total.sum_duplicates()
        nz = total.data != 0
        for lin, val in zip(total.col[nz], total.data[nz]):
            j, rem = divmod(int(lin), n * n)
            l, m = divmod(rem, n)
            bad.append((i, j, l, m, int(val)))
        if "progress" in _SWEEP:
            _SWEEP["progress"](i)
    return bad


def _exhaustive_jacobi(table: StructureTable, jobs: int, progress) -> list[dict]:
    t = table.int_tensor
    n = table.dim
    _SWEEP.clear()
    _SWEEP.update(
        tensor=t,
        flat=sparse.csr_array(t.reshape(n * n, n)),
        spread=sparse.csr_array(t.transpose(1, 0, 2).reshape(n, n * n)),
    )
    if progress is not None and jobs <= 1:
        _SWEEP["progress"] = progress
    try:
        if jobs <= 1:
            raw = _jacobi_rows(range(n))
        else:
            chunks = [list(range(s, n, jobs)) for s in range(jobs)]
            ctx = multiprocessing.get_context("fork")
            with ctx.Pool(jobs) as pool:
                raw = []
                for part in pool.imap(_jacobi_rows, chunks):
                    raw.extend(part)
                    if progress is not None:
                        progress(None)
    finally:
        _SWEEP.clear()
    scale2 = mx.Rational(table.scale) ** 2
    # the residual is alternating in (i, j, l): the sorted triple always shows up
    residuals: dict[tuple[int, int, int], list] = {}
    for i, j, l, m, val in raw:
        if i < j < l:
            residuals.setdefault((i, j, l), []).append((m, mx.Rational(val) / scale2))
    return [_residual_dict(k, sorted(residuals[k])) for k in sorted(residuals)]


def verify_jacobi(
    table: StructureTable,
    mode: str = "exhaustive",
    samples: int = 1000,
    seed: int = 0,
    jobs: int = 1,
    progress: Callable | None = None,
) -> VerificationReport:
    """Check [x,[y,z]] + [y,[z,x]] + [z,[x,y]] = 0 exactly.

    ``exhaustive`` covers every basis triple (all orderings, via sparse
    integer products of the scaled table); ``sampled`` uses ``samples``
    random rational triples drawn from ``seed``.  Violations are reported,
    never raised.
    """
    t0 = time.perf_counter()
    n = table.dim
    if mode == "exhaustive":
        failures = _exhaustive_jacobi(table, jobs, progress)
        tested = math.comb(n, 3)
        mode_s = "exhaustive"
    elif mode == "sampled":
        if samples < 1:
            raise ValueError("sampled mode needs at least one sample")
        rng = random.Random(seed)
        failures = []
        br = table.bracket
        for s in range(samples):
            x, y, z = (random_vector(rng, n) for _ in range(3))
            jac = [a + b + c for a, b, c in zip(br(x, br(y, z)), br(y, br(z, x)), br(z, br(x, y)))]
            if any(jac):
                failures.append({"sample": s, "residual": {str(k): str(v) for k, v in enumerate(jac) if v}})
        tested = samples
        mode_s = f"sampled({samples}, seed={seed})"
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return VerificationReport("jacobi", table.algebra, mode_s, tested, failures, time.perf_counter() - t0)


def gram_matrix(algebra: str = "e8") -> np.ndarray:
    """Matrix of the invariant scalar product on the canonical basis."""
    algebra = normalize_name(algebra)
    if algebra not in ("e8", "e8_split"):
        raise ValueError("the scalar product is defined on the e8 model")
    basis = [E8Element.basis(n) for n in range(E8_DIM)]
    g = np.empty((E8_DIM, E8_DIM), dtype=object)
    for a in range(E8_DIM):
        for b in range(a, E8_DIM):
            g[a, b] = g[b, a] = scalar_product(basis[a], basis[b])
    return g


def verify_ad_invariance(table: StructureTable, gram: np.ndarray) -> VerificationReport:
    """<[b_i,b_k], b_j> + <b_k, [b_i,b_j]> = 0 for every basis triple (i, j, k)."""
    t0 = time.perf_counter()
    n = table.dim
    gs = math.lcm(1, *(int(x.denominator) for x in gram.flat))
    g = sparse.csr_array(np.array([[int(x * gs) for x in row] for row in gram], dtype=np.int64))
    failures = []
    for i in range(n):
        ad = sparse.csr_array(table.ad_int(i))
        res = (ad.T @ g + g @ ad).tocoo()
        nz = res.data != 0
        for k, j, val in zip(res.row[nz], res.col[nz], res.data[nz]):
            failures.append({"triple": [i, int(j), int(k)], "residual": str(mx.Rational(int(val), gs * table.scale))})
    return VerificationReport("ad-invariance", table.algebra, "exhaustive", n**3, failures, time.perf_counter() - t0)


def killing_form(table: StructureTable) -> np.ndarray:
    """B(b_a, b_b) = tr(ad b_a ad b_b) as an exact symmetric matrix."""
    n = table.dim
    t = table.int_tensor
    x = sparse.csr_array(t.reshape(n, n * n))
    y = sparse.csr_array(t.transpose(0, 2, 1).reshape(n, n * n))
    b = (x @ y.T).toarray()
    return exact.to_rational_matrix(b, table.scale**2)


def signature(s: np.ndarray) -> tuple[int, int, int]:
    return exact.signature(s)


def proportionality_constant(b: np.ndarray, g: np.ndarray) -> mx.Rational | None:
    """The c with b == c * g entrywise, or None if there is none."""
    nz = np.argwhere(g != 0)
    if not len(nz):
        return None
    c = b[tuple(nz[0])] / g[tuple(nz[0])]
    return c if np.all(b == g * c) else None


def simplicity_certificate(table: StructureTable) -> VerificationReport:
    """Center = 0, [g, g] = g and a nondegenerate Killing form, all exact.

    Ranks of the tall stacked matrices are taken through their Gram matrices
    (same kernel over Q), so only square exact eliminations are needed.
    """
    t0 = time.perf_counter()
    n = table.dim
    t = table.int_tensor
    # rows (i, k), columns j: c_jik; z is central iff this kills z
    stacked_ad = t.transpose(1, 2, 0).reshape(n * n, n)
    center_dim = len(exact.nullspace(exact.gram(stacked_ad)))
    derived_dim = exact.rank(exact.gram(t.reshape(n * n, n)))
    sig = exact.signature(killing_form(table))
    failures = []
    if center_dim:
        failures.append({"center_dim": center_dim})
    if derived_dim != n:
        failures.append({"derived_dim": derived_dim})
    if sig[2]:
        failures.append({"killing_null": sig[2]})
    details = {"dim": n, "center_dim": center_dim, "derived_dim": derived_dim, "killing_signature": list(sig)}
    return VerificationReport("simplicity", table.algebra, "exact", 1, failures, time.perf_counter() - t0, details)


# ---------------------------------------------------------------------------
# roots


CLUSTER_TOL = 1e-9
VALIDATE_TOL = 1e-6


class RootExtractionError(RuntimeError):
    pass


@dataclass
class RootDatum:
    cartan: tuple[int, ...]
    cartan_labels: tuple[str, ...]
    centralizer_dim: int
    roots: list[tuple[mx.Rational, ...]]
    max_rounding_residual: float
    max_eigen_residual: float
    killing_on_cartan: np.ndarray
    # (a, b) = a^T M b, the form on weights dual to minus the Killing form
    pairing_matrix: np.ndarray

    def pairing(self, a: Sequence, b: Sequence) -> mx.Rational:
        return np.array(a, dtype=object).dot(self.pairing_matrix).dot(np.array(b, dtype=object))

    def pairings(self) -> np.ndarray:
        """All (a, b) over the roots, as an exact matrix."""
        r = np.array(self.roots, dtype=object)
        return r.dot(self.pairing_matrix).dot(r.T)

    @property
    def squared_lengths(self) -> list[mx.Rational]:
        return list(self.pairings().diagonal())

    def to_json(self) -> dict:
        return {
            "cartan": list(self.cartan),
            "cartan_labels": list(self.cartan_labels),
            "centralizer_dim": self.centralizer_dim,
            "root_count": len(self.roots),
            "roots": [[str(x) for x in r] for r in self.roots],
            "squared_lengths": sorted({str(x) for x in self.squared_lengths}),
            "killing_on_cartan": [[str(x) for x in row] for row in self.killing_on_cartan],
            "max_rounding_residual": self.max_rounding_residual,
            "max_eigen_residual": self.max_eigen_residual,
        }


def _inverse(b: np.ndarray) -> np.ndarray:
    n = b.shape[0]
    aug = np.concatenate([b, exact.to_rational_matrix(np.eye(n, dtype=np.int64))], axis=1)
    red, piv = exact.rref(aug)
    if piv[:n] != list(range(n)):
        raise RootExtractionError("Killing form is degenerate on the Cartan subalgebra")
    return red[:, n:]


def cartan_candidate(table: StructureTable) -> tuple[int, ...]:
    """e_{2k} ^ e_{2k+1} in both so(8) summands."""
    if table.dim != E8_DIM:
        raise ValueError("Cartan candidate is defined for the 248-dimensional model")
    one = [WEDGE_PAIRS.index((2 * k, 2 * k + 1)) for k in range(4)]
    return tuple(one + [SO8_DIM + x for x in one])


def cartan_and_roots(table: StructureTable, seed: int = 0) -> RootDatum:
    n = table.dim
    h_idx = cartan_candidate(table)
    t = table.int_tensor
    for a, b in itertools.combinations(h_idx, 2):
        if np.any(t[a, b]):
            raise RootExtractionError(f"Cartan candidates {a} and {b} do not commute")
    stacked = np.concatenate([t[h] for h in h_idx], axis=1).T  # rows (h, k), cols j
    centralizer_dim = len(exact.nullspace(exact.gram(stacked)))
    if centralizer_dim != len(h_idx):
        raise RootExtractionError(f"centralizer has dimension {centralizer_dim}, expected {len(h_idx)}")

    ads = [t[h].T.astype(float) / table.scale for h in h_idx]
    rng = np.random.default_rng(seed)
    coeffs = rng.uniform(1.0, 2.0, size=len(h_idx))
    generic = sum(c * a for c, a in zip(coeffs, ads))
    evals, evecs = np.linalg.eig(generic)
    evecs = evecs / np.linalg.norm(evecs, axis=0)

    nonzero = np.abs(evals) > CLUSTER_TOL
    if int(np.count_nonzero(~nonzero)) != len(h_idx):
        raise RootExtractionError(f"{int(np.count_nonzero(~nonzero))} zero eigenvalues, expected {len(h_idx)}")
    roots = []
    max_round = max_eig = 0.0
    half = mx.Rational(1, 2)
    for col in np.flatnonzero(nonzero):
        v = evecs[:, col]
        # ad(h) v = i alpha(h) v with alpha real for a compact form
        weights = np.array([np.vdot(v, a @ v).imag for a in ads])
        rounded = np.round(weights * 2) / 2
        max_round = max(max_round, float(np.max(np.abs(weights - rounded))))
        for a, wgt in zip(ads, rounded):
            max_eig = max(max_eig, float(np.linalg.norm(a @ v - 1j * wgt * v)))
        roots.append(tuple(int(round(2 * x)) * half for x in rounded))
    if max_round > VALIDATE_TOL or max_eig > VALIDATE_TOL:
        raise RootExtractionError(f"rounding residual {max_round:.3g}, eigen residual {max_eig:.3g}")
    roots.sort()
    if len(set(roots)) != len(roots):
        raise RootExtractionError("eigenvalue clusters merged distinct roots")
    if len(roots) != n - len(h_idx):
        raise RootExtractionError(f"found {len(roots)} roots, expected {n - len(h_idx)}")

    kh = killing_form(table)[np.ix_(h_idx, h_idx)]
    return RootDatum(
        cartan=h_idx,
        cartan_labels=tuple(table.basis[h] for h in h_idx),
        centralizer_dim=centralizer_dim,
        roots=roots,
        max_rounding_residual=max_round,
        max_eigen_residual=max_eig,
        killing_on_cartan=kh,
        pairing_matrix=-_inverse(kh),
    )


def root_census(pairings: np.ndarray) -> dict[int, int]:
    """Counts of the integers 2(a, b)/(b, b) over all ordered root pairs.

    ``pairings`` is the exact matrix of (a, b) over a list of roots.
    """
    counts: dict[int, int] = {}
    diag = pairings.diagonal()
    for row in pairings:
        for ab, bb in zip(row, diag):
            q = 2 * ab / bb
            if q.denominator != 1:
                raise ValueError(f"non-integral pairing {q}")
            counts[int(q)] = counts.get(int(q), 0) + 1
    return dict(sorted(counts.items()))


# ---------------------------------------------------------------------------
# linear maps and embeddings


def map_matrix(algebra: str, fn: Callable) -> np.ndarray:
    """Exact matrix of a linear map on coordinates; column n is fn(b_n)."""
    model = algebra_model(algebra)
    cols = []
    for n in range(model.dim):
        c = [0] * model.dim
        c[n] = 1
        cols.append(model.coords(fn(model.from_coords(c))))
    return np.array(cols, dtype=object).T


def _int_matrix(m: np.ndarray) -> tuple[np.ndarray, int]:
    s = math.lcm(1, *(int(mx.frac(x).denominator) for x in m.flat))
    return np.array([[int(x * s) for x in row] for row in m], dtype=np.int64), s


def verify_automorphism(table: StructureTable, matrix: np.ndarray, name: str) -> VerificationReport:
    """phi[b_i, b_j] = [phi b_i, phi b_j] for every basis pair, exactly."""
    t0 = time.perf_counter()
    n = table.dim
    t = table.int_tensor
    m, sm = _int_matrix(matrix)
    mt = sparse.csr_array(m.T)
    # lhs[(i,j), a] = sum_k T[i,j,k] m[a,k]
    lhs = (sparse.csr_array(t.reshape(n * n, n)) @ mt).toarray().reshape(n, n, n) * sm
    # u[i, b, k] = sum_a m[a,i] T[a,b,k]; rhs[i,j,k] = sum_b m[b,j] u[i,b,k]
    u = (mt @ sparse.csr_array(t.reshape(n, n * n))).toarray().reshape(n, n, n)
    rhs = (mt @ sparse.csr_array(u.transpose(1, 0, 2).reshape(n, n * n))).toarray().reshape(n, n, n)
    rhs = rhs.transpose(1, 0, 2)
    bad = np.argwhere(lhs != rhs)
    failures = sorted({(int(i), int(j)) for i, j, _ in bad if i < j})
    report = [{"pair": list(p)} for p in failures]
    return VerificationReport(f"automorphism:{name}", table.algebra, "exhaustive", n * n, report, time.perf_counter() - t0)


def so16_embedding_check(table: StructureTable) -> VerificationReport:
    """The so16 table agrees with 16x16 commutators under ((P,Q),X) -> [[P,2X],[-2X^t,Q]].

    Checked on all ordered basis pairs, with integer matrices.
    """
    from .octoct import so16_embed

    t0 = time.perf_counter()
    if table.algebra != "so16":
        raise ValueError("expected the so16 table")
    n = table.dim
    model = algebra_model("so16")
    emb = []
    for b in range(n):
        c = [0] * n
        c[b] = 1
        emb.append([[int(x) for x in row] for row in so16_embed(*model.from_coords(c))])
    e = np.array(emb, dtype=np.int64)  # (n, 16, 16)
    comm = np.einsum("iab,jbc->ijac", e, e) - np.einsum("jab,ibc->ijac", e, e)
    image = (sparse.csr_array(table.int_tensor.reshape(n * n, n)) @ e.reshape(n, -1)).reshape(n, n, 16, 16)
    bad = np.argwhere(np.any(comm * table.scale != image, axis=(2, 3)))
    injective = exact.rank(exact.gram(e.reshape(n, -1).T)) == n
    failures = [{"pair": [int(i), int(j)]} for i, j in bad]
    if not injective:
        failures.append({"embedding": "not injective"})
    return VerificationReport("so16-embedding", "so16", "exhaustive", n * n, failures, time.perf_counter() - t0)
