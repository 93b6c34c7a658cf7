import json
import random

import numpy as np
import pytest
from hypothesis import given

from conftest import octonions, random_rationals
from e8bracket import _matrix as mx
from e8bracket import serialize as ser
from e8bracket.analysis import algebra_model
from e8bracket.octonion import E
from e8bracket.so8 import BASIS


@given(octonions)
def test_octonion_round_trip(a):
    data = ser.octonion_to_json(a)
    assert all(isinstance(x, str) for x in data)
    assert ser.octonion_from_json(json.loads(json.dumps(data))) == a


def test_rational_strings():
    assert ser.rational_to_str(mx.Rational(-3, 6)) == "-1/2"
    assert ser.rational_to_str(4) == "4"
    assert ser.parse_rational("6/4") == mx.Rational(3, 2)
    for bad in (0.5, None, "x", "1/0", True):
        with pytest.raises(ser.InputError):
            ser.parse_rational(bad)


def test_skew8_round_trip_and_validation():
    a = BASIS[4] * mx.Rational(3, 7)
    assert ser.skew8_from_json(ser.skew8_to_json(a)) == a
    m = [["0"] * 8 for _ in range(8)]
    m[0][1] = "1"
    with pytest.raises(ser.InputError, match="matrix P is not skew-symmetric"):
        ser.skew8_from_json(m, "P")
    with pytest.raises(ser.InputError, match="8x8"):
        ser.skew8_from_json([["0"] * 8] * 7, "Q")


@pytest.mark.parametrize("algebra", ["f4", "e8", "e8_split", "so16"])
def test_element_round_trips(algebra):
    model = algebra_model(algebra)
    rng = random.Random(3)
    x = model.from_coords(random_rationals(rng, model.dim))
    structured = json.loads(json.dumps(ser.element_to_json(algebra, x)))
    back = ser.element_from_json(algebra, structured)
    assert model.coords(back) == model.coords(x)
    flat = ser.coords_to_json(model.coords(x))
    assert model.coords(ser.element_from_json(algebra, flat)) == model.coords(x)


def test_element_keys():
    x = algebra_model("e8").from_coords([0] * 248)
    assert list(ser.element_to_json("e8", x)) == ["P", "Q", "u", "v", "w"]
    f = algebra_model("f4").from_coords([0] * 52)
    assert list(ser.element_to_json("f4", f)) == ["A", "u", "v", "w"]
    with pytest.raises(ser.InputError, match="missing"):
        ser.element_from_json("e8", {"P": [], "Q": []})
    with pytest.raises(ser.InputError, match="248"):
        ser.element_from_json("e8", ["0"] * 247)


def test_sopair_and_octoct():
    from e8bracket.octoct import OctOct, SoPair

    p = SoPair(BASIS[1], BASIS[2])
    assert ser.sopair_from_json(ser.sopair_to_json(p)) == p
    x = OctOct.tensor(E[1], E[3] * mx.Rational(1, 3))
    assert ser.octoct_from_json(ser.octoct_to_json(x)) == x


def test_csv_round_trips(tables):
    t = tables("f4")
    text = ser.table_to_csv(t)
    assert text.splitlines()[0] == "i,j,k,c"
    assert ser.table_from_csv(text, "f4", t.basis) == t
    m = mx.asmatrix([[1, mx.Rational(-1, 2)], [mx.Rational(-1, 2), 0]])
    assert np.all(ser.matrix_from_csv(ser.matrix_to_csv(m)) == m)
    with pytest.raises(ser.InputError):
        ser.table_from_csv("a,b\n", "f4", t.basis)
