import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from coxeter_lab.graph_core import bipartition
from coxeter_lab.gvector import GVector, format_fraction
from coxeter_lab.surd import Surd

from conftest import path


def test_format_fraction():
    assert format_fraction(Fraction(4, 3)) == "4/3"
    assert format_fraction(Fraction(6, 3)) == "2"
    assert format_fraction(Fraction(-1, 2)) == "-1/2"


def test_gvector_rejects_floats_and_serializes():
    ctx = bipartition(path("a", "b", "c"))
    with pytest.raises(TypeError):
        GVector.from_mapping(ctx, {"a": 0.5, "b": 1, "c": 1})
    x = GVector.from_mapping(ctx, {"a": "1/2", "b": 1, "c": 0})
    assert x.to_json() == {"a": "1/2", "c": "0", "b": "1"}
    assert (x + x).scale(Fraction(1, 2)) == x
    assert x.min_normalized()["a"] == 1


def test_surd_normalizes_radicand():
    s = Surd.sqrt(12)
    assert (s.b, s.d) == (2, 3)
    assert Surd.sqrt(Fraction(9, 4)) == Fraction(3, 2)


@given(st.fractions(-50, 50, max_denominator=20), st.fractions(-50, 50, max_denominator=20),
       st.integers(2, 50))
def test_surd_sign_matches_float_away_from_zero(a, b, d):
    s = Surd(a, b, d)
    approx = float(a) + float(b) * math.sqrt(d)
    if abs(approx) > 1e-6:
        assert s.sign() == (1 if approx > 0 else -1)


def test_surd_exact_zero():
    assert (Surd(0, 1, 2) * Surd(0, 1, 2)) == 2
    assert (Surd(3) - Surd.sqrt(9)).sign() == 0
