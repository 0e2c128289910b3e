from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from coxhecke.laurent import LaurentPoly

polys = st.dictionaries(st.integers(-6, 6), st.integers(-9, 9), max_size=6).map(LaurentPoly)


def test_str_format():
    v = LaurentPoly.v()
    assert str(v * v - 1 + v ** -2) == "v^2 - 1 + v^-2"
    assert str(-v + 3) == "-v + 3"
    assert str(LaurentPoly()) == "0"
    assert str(2 * v ** -1) == "2v^-1"


@given(polys)
def test_parse_roundtrip(p):
    assert LaurentPoly.parse(str(p)) == p
    assert LaurentPoly.from_json(p.to_json()) == p


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert (p + q) * r == p * r + q * r
    assert (p * q) * r == p * (q * r)
    assert p - p == LaurentPoly()
    assert (p * q)(Fraction(3, 2)) == p(Fraction(3, 2)) * q(Fraction(3, 2))


def test_negative_powers():
    v = LaurentPoly.v()
    assert v ** -3 * v ** 3 == 1
    with pytest.raises(ValueError):
        (2 * v) ** -1
    with pytest.raises(ValueError):
        (v + 1) ** -1


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        LaurentPoly.parse("v^2 + x")
