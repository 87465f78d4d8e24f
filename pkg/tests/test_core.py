from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from srdpoly.core import (Element, IntPoly, Mode, QTable, SignedSeq, TruncSeries,
                          poly_derivative, poly_eval_int)

polys = st.lists(st.integers(-10**30, 10**30), max_size=8).map(IntPoly)


@pytest.mark.parametrize("p, expected", [
    (IntPoly([1, 4, 1]), IntPoly([4, 2])),
    (IntPoly(), IntPoly()),
    (IntPoly([3, 14, 14, 3]), IntPoly([14, 28, 9])),
])
def test_poly_derivative(p, expected):
    assert poly_derivative(p) == expected


@pytest.mark.parametrize("p, t0, expected", [
    (IntPoly([1, 4, 1]), 1, 6),
    (IntPoly([1, 4, 1]), 0, 1),
    (IntPoly(), 5, 0),
])
def test_poly_eval_int(p, t0, expected):
    assert poly_eval_int(p, t0) == expected


def test_zero_polynomial_normalization():
    assert IntPoly([0, 0, 0]).coeffs == ()
    assert IntPoly().degree == -1
    assert IntPoly([5, 0, 0]).degree == 0
    assert str(IntPoly()) == "0"


def test_poly_str():
    assert str(IntPoly([3, 14, 14, 3])) == "3t^3 + 14t^2 + 14t + 3"
    assert str(IntPoly([0, -1, 0, 1])) == "t^3 - t"


def test_poly_is_immutable():
    with pytest.raises(AttributeError):
        IntPoly([1]).coeffs = (2,)


@given(polys, polys, st.integers(-5, 5))
def test_ring_operations_commute_with_evaluation(p, q, t0):
    assert (p + q)(t0) == p(t0) + q(t0)
    assert (p * q)(t0) == p(t0) * q(t0)
    assert (p - q)(t0) == p(t0) - q(t0)
    assert p.shift(3)(t0) == t0 ** 3 * p(t0)


@given(polys, polys)
def test_product_rule(p, q):
    assert (p * q).derivative() == p.derivative() * q + p * q.derivative()


@given(polys)
def test_derivative_drops_degree_by_one(p):
    if p.degree >= 1:
        assert p.derivative().degree == p.degree - 1
    else:
        assert p.derivative() == IntPoly()


def test_big_integers_are_exact():
    big = IntPoly([10**40, 1])
    assert (big * big)[0] == 10**80


def test_element_code_roundtrip():
    for v in range(0, 5):
        for b in (False, True):
            e = Element(v, b)
            assert Element.from_code(e.code) == e
    with pytest.raises(ValueError):
        Element(-1)


def test_signed_seq_validation_and_text():
    s = SignedSeq.parse("1' 3 2' 4")
    assert s.ground == 4 and str(s) == "1' 3 2' 4"
    g = SignedSeq.parse("0 2' 1'", Mode.GAMMA)
    assert g.ground == 2
    with pytest.raises(ValueError):
        SignedSeq.parse("1 1")
    with pytest.raises(ValueError):
        SignedSeq.parse("0 1")  # 0 is not a classical value
    with pytest.raises(ValueError):
        SignedSeq.parse("1 2", Mode.GAMMA)


def test_qtable():
    t = QTable([(), (1, 1), (1, 4, 1)])
    assert t[2, 1] == 4 and t[2, 5] == 0 and t[2, -1] == 0
    assert t.row_sum(2) == 6 and t.is_symmetric()
    assert not QTable([(), (1, 2)]).is_symmetric()


def test_trunc_series_derivatives():
    F = TruncSeries([IntPoly(), IntPoly([1, 1]), IntPoly([1, 4, 1])])
    assert F.d_dx().coeff_of_x == (IntPoly([1, 1]), IntPoly([2, 8, 2]))
    assert F.d_dt()[2] == IntPoly([4, 2])
    assert F.evaluate(Fraction(1, 2), 1) == Fraction(2, 2) + Fraction(6, 4)
    assert F.scale([0, 1])[2] == IntPoly([1, 1])
