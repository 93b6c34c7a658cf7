"""Acceptance gate: the twelve release criteria, each at its stated tolerance.

Every criterion prints one ``PASS``/``FAIL`` line (collected into the pytest
terminal summary, or printed directly with ``python3 tests/test_acceptance.py``).
"""

from __future__ import annotations

import itertools
import os
import random
import subprocess
import sys
import tempfile
import time

import numpy as np
import pytest

from e8bracket import _matrix as mx
from e8bracket.analysis import (
    algebra_model,
    build_structure_table,
    cartan_and_roots,
    gram_matrix,
    killing_form,
    map_matrix,
    proportionality_constant,
    signature,
    simplicity_certificate,
    so16_embedding_check,
    verify_ad_invariance,
    verify_automorphism,
    verify_jacobi,
)
from e8bracket.e8 import E8_DIM, cartan_involution
from e8bracket.octonion import DIM, E, GENERATING_TRIPLES
from e8bracket.so8 import BASIS, commutator, kappa, triality_lambda, triality_lambda2

RESULTS: list[str] = []


def _line(n: int, ok: bool, text: str, elapsed: float) -> str:
    return f"{'PASS' if ok else 'FAIL'} criterion {n:2d}: {text} ({elapsed:.2f}s)"


def criterion_1():
    ok = all(E[a] * E[b] == E[c] for a, b, c in GENERATING_TRIPLES)
    for x, y in itertools.product(E, repeat=2):
        ok &= (x * x) * y == x * (x * y) and (y * x) * x == y * (x * x)
    return ok, "octonion generating products and alternative laws on 64 basis pairs", 1.0


def criterion_2():
    ok = True
    for a in BASIS:
        ok &= triality_lambda(triality_lambda(triality_lambda(a))) == a
        ok &= kappa(kappa(a)) == a
        ok &= kappa(triality_lambda2(a)) == triality_lambda(kappa(a))
    for a, b in itertools.product(BASIS, repeat=2):
        c = commutator(a, b)
        ok &= triality_lambda(c) == commutator(triality_lambda(a), triality_lambda(b))
        ok &= kappa(c) == commutator(kappa(a), kappa(b))
    return ok, "lambda^3 = kappa^2 = id, kappa lambda^2 = lambda kappa, automorphisms on 28x28 pairs", 1.0


def criterion_3():
    count = bad = 0
    for a in BASIS:
        la, kl2 = triality_lambda(a), kappa(triality_lambda2(a))
        for u, v in itertools.product(E, repeat=2):
            count += 1
            bad += a.apply(u) * v + u * la.apply(v) != kl2.apply(u * v)
    return count == 1792 and not bad, f"infinitesimal triality: {count} identities, {bad} failures", None


def criterion_4():
    t = build_structure_table("f4")
    jac = verify_jacobi(t)
    sig = signature(killing_form(t))
    ok = jac.passed and t.dim == 52 and sig == (0, 52, 0)
    return ok, f"f4 exhaustive Jacobi ({jac.tested} triples, {len(jac.failures)} failures), dim {t.dim}, Killing signature {sig}", 10.0


def criterion_5():
    rep = so16_embedding_check(build_structure_table("so16"))
    return rep.passed, f"so(16) block embedding preserves brackets on {rep.tested} basis pairs", None


def criterion_6():
    rep = verify_jacobi(build_structure_table("e8"), jobs=int(os.environ.get("E8_JOBS", "1")))
    return rep.passed, f"compact e8 exhaustive Jacobi: {rep.tested} triples, {len(rep.failures)} failures", 600.0


def criterion_7():
    rep = verify_ad_invariance(build_structure_table("e8"), gram_matrix("e8"))
    return rep.passed, f"scalar product ad-invariant on {rep.tested} basis triples", None


def criterion_8():
    b = killing_form(build_structure_table("e8"))
    c = proportionality_constant(b, gram_matrix("e8"))
    sig = signature(b)
    ok = c is not None and c < 0 and sig == (0, 248, 0)
    return ok, f"Killing form = {c} * scalar product, signature {sig}", None


def criterion_9():
    split = build_structure_table("e8_split")
    jac = verify_jacobi(split)
    sig = signature(killing_form(split))
    theta = map_matrix("e8", cartan_involution)
    auto = verify_automorphism(build_structure_table("e8"), theta, "theta")
    diag = list(theta.diagonal())
    eig = (diag.count(1), diag.count(-1))
    diagonal = bool(np.all(theta == np.diag(theta.diagonal())))
    ok = jac.passed and sig == (128, 120, 0) and auto.passed and eig == (120, 128) and diagonal
    return ok, f"split Jacobi {jac.passed}, split signature {sig}, theta automorphism {auto.passed}, eigenspaces {eig}", None


def criterion_10():
    parts, ok = [], True
    for alg in ("e8", "f4"):
        cert = simplicity_certificate(build_structure_table(alg))
        d = cert.details
        ok &= cert.passed
        parts.append(f"{alg}: center {d['center_dim']}, derived {d['derived_dim']}/{d['dim']}, Killing null {d['killing_signature'][2]}")
    return ok, "simplicity " + "; ".join(parts), None


def criterion_11():
    rd = cartan_and_roots(build_structure_table("e8"))
    roots = set(rd.roots)
    closed = roots == {tuple(-x for x in r) for r in roots}
    lengths = set(rd.squared_lengths)
    residual = max(rd.max_rounding_residual, rd.max_eigen_residual)
    ok = rd.centralizer_dim == 8 and len(rd.roots) == 240 and closed and len(lengths) == 1 and residual < 1e-6
    text = (
        f"centralizer {rd.centralizer_dim}, {len(rd.roots)} roots, closed under negation {closed}, "
        f"squared lengths {sorted(str(x) for x in lengths)}, max residual {residual:.1e}"
    )
    return ok, text, 60.0


def _cli(args, env):
    return subprocess.run([sys.executable, "-m", "e8bracket", *args], capture_output=True, env=env, check=True).stdout


def criterion_12():
    t = build_structure_table("e8")
    model = algebra_model("e8")
    rng = random.Random(2024)
    mismatches = 0
    for _ in range(1000):
        x = [mx.Rational(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(E8_DIM)]
        y = [mx.Rational(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(E8_DIM)]
        direct = model.coords(model.bracket(model.from_coords(x), model.from_coords(y)))
        mismatches += t.bracket(x, y) != direct
    with tempfile.TemporaryDirectory() as cache:
        env = dict(os.environ, E8_CACHE_DIR=cache)
        # the first run builds and caches the table, the second loads it
        runs = [_cli(["export", "structure-constants", "--algebra", "e8", "--format", "csv"], env) for _ in range(2)]
        runs += [_cli(["verify", "--algebra", "e8", "--check", "all", "--quiet"], env) for _ in range(2)]
    identical = runs[0] == runs[1] and runs[2] == runs[3]
    ok = not mismatches and identical
    return ok, f"table vs direct on 1000 random pairs: {mismatches} mismatches; repeated CLI runs byte-identical {identical}", None


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7, criterion_8, criterion_9, criterion_10, criterion_11, criterion_12]


def evaluate(n: int) -> tuple[bool, str]:
    t0 = time.perf_counter()
    ok, text, limit = CRITERIA[n - 1]()
    elapsed = time.perf_counter() - t0
    if limit is not None and elapsed > limit:
        ok, text = False, f"{text}; took {elapsed:.1f}s, limit {limit:.0f}s"
    line = _line(n, ok, text, elapsed)
    RESULTS.append(line)
    print(line)
    return ok, line


@pytest.mark.parametrize("n", range(1, 13))
def test_criterion(n):
    ok, line = evaluate(n)
    assert ok, line


if __name__ == "__main__":
    outcomes = [evaluate(n)[0] for n in range(1, 13)]
    sys.exit(0 if all(outcomes) else 1)
