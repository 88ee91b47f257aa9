from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from infstab.extreal import POS_INF, ExtReal
from infstab.r2gap import R2Point, r2_eval, r2_grid_min_on_K, r2_limit, r2_min_on_K, r2_table

coords = st.fractions(min_value=-3, max_value=3, max_denominator=12)


def test_eval_examples():
    assert r2_eval(3, R2Point(F(-1, 3), 1)) == ExtReal(0)
    assert r2_eval(1, R2Point(0, 0)) == ExtReal(0)
    assert r2_eval(2, R2Point(1, 1)) == ExtReal(6)
    with pytest.raises(ValueError):
        r2_eval(0, R2Point(0, 0))


def test_min_on_k_is_zero():
    assert all(r2_min_on_K(n) == ExtReal(0) for n in range(1, 200))


def test_grid_cross_check():
    m = r2_grid_min_on_K(7)
    assert ExtReal(0) <= m <= ExtReal(F(1, 142))
    assert m == ExtReal(F(7, 1000))


def test_limits():
    assert r2_limit(R2Point(0, 0)) == ExtReal(0)
    assert r2_limit(R2Point(F(1, 2), 0)) == POS_INF
    assert [r2_eval(n, R2Point(F(1, 2), 0)) for n in (1, 2, 10)] == [ExtReal(F(n * n, 2)) for n in (1, 2, 10)]


def test_table_rows():
    rows = r2_table(3)
    assert [r["n"] for r in rows] == [1, 2, 3]
    assert all(r["min_K"] == "0" for r in rows)


@given(coords, coords, coords, coords, st.sampled_from([F(1, 4), F(1, 3), F(1, 2)]), st.integers(1, 50))
def test_convex_along_segments(x0, y0, x1, y1, lam, n):
    p, q = R2Point(x0, y0), R2Point(x1, y1)
    mid = R2Point((1 - lam) * x0 + lam * x1, (1 - lam) * y0 + lam * y1)
    lhs = r2_eval(n, mid).value
    assert lhs <= (1 - lam) * r2_eval(n, p).value + lam * r2_eval(n, q).value


@given(coords, coords)
def test_values_grow_off_origin(x, y):
    vals = [r2_eval(n, R2Point(x, y)).value for n in (2**k for k in range(8, 14))]
    if (x, y) == (0, 0):
        assert all(v == 0 for v in vals)
    else:
        assert all(a < b for a, b in zip(vals, vals[1:]))
