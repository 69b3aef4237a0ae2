from fractions import Fraction as Fr

import pytest

import frieze_lab as fl
from frieze_lab import serialize


def test_fraction_strings():
    assert serialize.fraction_to_str(Fr(3)) == "3"
    assert serialize.fraction_to_str(Fr(-7, 2)) == "-7/2"
    assert serialize.str_to_fraction("5/3") == Fr(5, 3)
    assert serialize.str_to_fraction("4") == Fr(4)
    assert serialize.str_to_fraction(2) == Fr(2)


def test_frieze_doc_roundtrip():
    f = fl.diagonal_to_frieze((Fr(1, 2), Fr(3)))
    doc = serialize.frieze_to_doc(f)
    assert doc["width"] == 2 and doc["period"] == 5
    assert serialize.frieze_from_doc(doc) == f


def test_frieze_doc_tamper_detected():
    f = fl.diagonal_to_frieze((1, 2))
    doc = serialize.frieze_to_doc(f)
    doc["rows"][1][0] = "99"
    with pytest.raises(ValueError):
        serialize.frieze_from_doc(doc)


def test_polygon_and_equation_docs():
    f = fl.diagonal_to_frieze((1, 2))
    p = fl.polygon_from_frieze(f)
    doc = serialize.polygon_to_doc(p)
    assert doc["vertices"][0] == ["0", "1"]
    eq = serialize.equation_to_doc(f.quiddity)
    assert eq["n"] == 5 and eq["quiddity"][0] == "1"
    # float scalars serialize as numbers
    eq2 = serialize.equation_to_doc((2.0, 2.5))
    assert eq2["quiddity"] == [2.0, 2.5]


def test_csv_rfc4180():
    text = serialize.csv_string(("a", "b"), [(1, 0.5), (2, 1.0 / 3.0)])
    lines = text.split("\r\n")
    assert lines[0] == "a,b"
    assert lines[1] == "1,0.5"
    assert lines[2] == "2," + repr(1.0 / 3.0)


def test_form_value_doc():
    doc = serialize.form_value_to_doc(
        (Fr(1), Fr(2)), (Fr(1), Fr(0)), (Fr(0), Fr(1)), Fr(1, 2)
    )
    assert doc == {"base": ["1", "2"], "xi": ["1", "0"], "eta": ["0", "1"], "value": "1/2"}
