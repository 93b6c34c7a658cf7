"""JSON and CSV encodings.  Rationals always travel as "p/q" or "p" strings."""

from __future__ import annotations

import csv
import io
import json
from typing import Any

import numpy as np

from . import _matrix as mx
from .analysis import StructureTable, algebra_model, normalize_name
from .e8 import E8_DIM, E8Element
from .f4 import F4_DIM, F4Element
from .octoct import SO16_DIM, OctOct, SoPair
from .octonion import DIM, Octonion
from .so8 import Skew8


class InputError(ValueError):
    """Malformed or invalid serialized input."""


def rational_to_str(x) -> str:
    return str(mx.frac(x))


def parse_rational(s: Any, what: str = "value") -> mx.Rational:
    if isinstance(s, bool) or not isinstance(s, (str, int)):
        raise InputError(f"{what}: expected a \"p/q\" string, got {s!r}")
    try:
        return mx.frac(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"{what}: not a rational: {s!r}") from exc


def _vector(data: Any, n: int, what: str) -> list[mx.Rational]:
    if not isinstance(data, list) or len(data) != n:
        raise InputError(f"{what}: expected an array of {n} rationals")
    return [parse_rational(x, what) for x in data]


def _matrix(data: Any, what: str) -> np.ndarray:
    if not isinstance(data, list) or len(data) != DIM or any(not isinstance(r, list) or len(r) != DIM for r in data):
        raise InputError(f"matrix {what} must be 8x8")
    return mx.asmatrix([[parse_rational(x, f"matrix {what}") for x in row] for row in data])


def _strings(m) -> list:
    return [[rational_to_str(x) for x in row] for row in m]


# ---------------------------------------------------------------------------
# building blocks


def octonion_to_json(a: Octonion) -> list[str]:
    return [rational_to_str(x) for x in a]


def octonion_from_json(data: Any, what: str = "octonion") -> Octonion:
    return Octonion(tuple(_vector(data, DIM, what)))


def skew8_to_json(a: Skew8) -> list[list[str]]:
    return _strings(a.entries)


def skew8_from_json(data: Any, what: str = "A") -> Skew8:
    m = _matrix(data, what)
    if not mx.is_skew(m):
        raise InputError(f"matrix {what} is not skew-symmetric")
    return Skew8(m, check=False)


def octoct_to_json(x: OctOct) -> list[list[str]]:
    return _strings(x.entries)


def octoct_from_json(data: Any, what: str = "X") -> OctOct:
    return OctOct(_matrix(data, what))


def sopair_to_json(a: SoPair) -> dict:
    return {"P": skew8_to_json(a.P), "Q": skew8_to_json(a.Q)}


def sopair_from_json(data: Any) -> SoPair:
    _require_keys(data, ("P", "Q"))
    return SoPair(skew8_from_json(data["P"], "P"), skew8_from_json(data["Q"], "Q"))


def _require_keys(data: Any, keys: tuple[str, ...]) -> None:
    if not isinstance(data, dict):
        raise InputError(f"expected an object with keys {list(keys)}")
    missing = [k for k in keys if k not in data]
    extra = sorted(set(data) - set(keys))
    if missing or extra:
        raise InputError(f"expected keys {list(keys)}; missing {missing}, unexpected {extra}")


# ---------------------------------------------------------------------------
# algebra elements


def element_to_json(algebra: str, elem) -> dict:
    """Structured encoding of an element of ``algebra``."""
    algebra = normalize_name(algebra)
    if algebra == "f4":
        return {
            "A": skew8_to_json(elem.A),
            "u": octonion_to_json(elem.u),
            "v": octonion_to_json(elem.v),
            "w": octonion_to_json(elem.w),
        }
    if algebra == "so16":
        a, x = elem
        return {"P": skew8_to_json(a.P), "Q": skew8_to_json(a.Q), "X": octoct_to_json(x)}
    return {
        "P": skew8_to_json(elem.P),
        "Q": skew8_to_json(elem.Q),
        "u": octoct_to_json(elem.u),
        "v": octoct_to_json(elem.v),
        "w": octoct_to_json(elem.w),
    }


def element_from_json(algebra: str, data: Any):
    """Parse either the structured object or a flat coordinate array."""
    algebra = normalize_name(algebra)
    model = algebra_model(algebra)
    if isinstance(data, list):
        return model.from_coords(_vector(data, model.dim, f"{algebra} coordinate vector"))
    if algebra == "f4":
        _require_keys(data, ("A", "u", "v", "w"))
        return F4Element(
            skew8_from_json(data["A"], "A"),
            octonion_from_json(data["u"], "u"),
            octonion_from_json(data["v"], "v"),
            octonion_from_json(data["w"], "w"),
        )
    if algebra == "so16":
        _require_keys(data, ("P", "Q", "X"))
        return (
            SoPair(skew8_from_json(data["P"], "P"), skew8_from_json(data["Q"], "Q")),
            octoct_from_json(data["X"], "X"),
        )
    _require_keys(data, ("P", "Q", "u", "v", "w"))
    return E8Element(
        SoPair(skew8_from_json(data["P"], "P"), skew8_from_json(data["Q"], "Q")),
        octoct_from_json(data["u"], "u"),
        octoct_from_json(data["v"], "v"),
        octoct_from_json(data["w"], "w"),
    )


def coords_to_json(coords) -> list[str]:
    return [rational_to_str(x) for x in coords]


def element_dim(algebra: str) -> int:
    return {"f4": F4_DIM, "e8": E8_DIM, "e8_split": E8_DIM, "so16": SO16_DIM}[normalize_name(algebra)]


# ---------------------------------------------------------------------------
# exports


def dumps(data: Any) -> str:
    """Deterministic JSON text with a trailing newline."""
    return json.dumps(data) + "\n"


def table_to_csv(table: StructureTable) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["i", "j", "k", "c"])
    for i, j, k, c in table.entries:
        w.writerow([i, j, k, rational_to_str(c)])
    return buf.getvalue()


def table_from_csv(text: str, algebra: str, basis: tuple[str, ...]) -> StructureTable:
    rows = list(csv.reader(io.StringIO(text)))
    if not rows or rows[0] != ["i", "j", "k", "c"]:
        raise InputError("structure-constant CSV needs the header i,j,k,c")
    entries = tuple(sorted((int(i), int(j), int(k), parse_rational(c, "c")) for i, j, k, c in rows[1:]))
    return StructureTable(algebra, len(basis), basis, entries)


def matrix_to_csv(m: np.ndarray) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    for row in m:
        w.writerow([rational_to_str(x) for x in row])
    return buf.getvalue()


def matrix_from_csv(text: str) -> np.ndarray:
    return mx.asmatrix([[parse_rational(x) for x in row] for row in csv.reader(io.StringIO(text)) if row])


def basis_to_json(algebra: str, labels) -> dict:
    return {"algebra": normalize_name(algebra), "dim": len(labels), "basis": list(labels)}


def basis_to_csv(labels) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["index", "label"])
    for n, lab in enumerate(labels):
        w.writerow([n, lab])
    return buf.getvalue()


def roots_to_csv(roots) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([f"h{k}" for k in range(len(roots[0]))] if roots else [])
    for r in roots:
        w.writerow([rational_to_str(x) for x in r])
    return buf.getvalue()
