from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from infstab.extreal import (
    NEG_INF,
    POS_INF,
    ExtReal,
    OppositeInfinities,
    ext_add,
    ext_distance,
    ext_inf,
    ext_scale,
    ext_sup,
    format_rational,
    parse_rational,
)

rationals = st.fractions(max_denominator=50).filter(lambda q: abs(q) < 10**6)
finite = rationals.map(ExtReal)
extended = st.one_of(finite, st.sampled_from([NEG_INF, POS_INF]))


def test_add_finite():
    assert ext_add(ExtReal(Fraction(1, 2)), ExtReal(Fraction(1, 3))) == ExtReal(Fraction(5, 6))


def test_add_absorbs():
    assert ext_add(POS_INF, ExtReal(-7)) == POS_INF
    assert ext_add(ExtReal(-7), NEG_INF) == NEG_INF


def test_opposite_infinities():
    with pytest.raises(OppositeInfinities):
        ext_add(POS_INF, NEG_INF)
    with pytest.raises(OppositeInfinities):
        NEG_INF + POS_INF


def test_scale():
    assert ext_scale(POS_INF, 0) == ExtReal(0)
    assert ext_scale(ExtReal(3), Fraction(2, 3)) == ExtReal(2)
    assert ext_scale(NEG_INF, Fraction(1, 2)) == NEG_INF
    with pytest.raises(ValueError):
        ext_scale(POS_INF, -1)


def test_inf_sup_conventions():
    assert ext_inf([]) == POS_INF
    assert ext_sup([]) == NEG_INF
    assert ext_inf([ExtReal(2), NEG_INF, POS_INF]) == NEG_INF
    assert ext_inf([ExtReal(1), ExtReal(Fraction(1, 2))]) == ExtReal(Fraction(1, 2))


def test_value_of_infinity_raises():
    with pytest.raises(ValueError):
        POS_INF.value


def test_parse():
    assert ExtReal.parse("+inf") == POS_INF
    assert ExtReal.parse("-inf") == NEG_INF
    assert ExtReal.parse("-3/6") == ExtReal(Fraction(-1, 2))
    assert ExtReal.parse(4) == ExtReal(4)
    for bad in ("1/0", "0.5", "inf", "", "1/-2", True, 0.5):
        with pytest.raises((ValueError, TypeError)):
            ExtReal.parse(bad)


def test_distance():
    assert ext_distance(POS_INF, POS_INF) == ExtReal(0)
    assert ext_distance(NEG_INF, ExtReal(3)) == POS_INF
    assert ext_distance(ExtReal(1), ExtReal(-2)) == ExtReal(3)


@given(rationals)
def test_format_roundtrip(q):
    assert parse_rational(format_rational(q)) == q


@given(extended)
def test_str_roundtrip(a):
    assert ExtReal.parse(str(a)) == a


@given(extended, extended)
def test_add_commutes(a, b):
    if {a, b} == {POS_INF, NEG_INF}:
        return
    assert ext_add(a, b) == ext_add(b, a)


@given(extended, extended, extended)
def test_add_associates(a, b, c):
    if POS_INF in (a, b, c) and NEG_INF in (a, b, c):
        return
    assert ext_add(ext_add(a, b), c) == ext_add(a, ext_add(b, c))


@given(extended, extended)
def test_total_order(a, b):
    assert (a < b) + (a == b) + (a > b) == 1
    assert NEG_INF <= a <= POS_INF


@given(extended, st.fractions(min_value=0, max_denominator=20).filter(lambda q: q < 100))
def test_scale_monotone(a, c):
    s = ext_scale(a, c)
    if c == 0:
        assert s == ExtReal(0)
    elif not a.is_finite:
        assert s == a


@given(rationals, rationals)
def test_mixed_comparisons(p, q):
    assert (ExtReal(p) < q) == (p < q)
    assert (ExtReal(p) == q) == (p == q)
