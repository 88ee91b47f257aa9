from fractions import Fraction as F

import pytest
from hypothesis import assume, given, strategies as st

from conftest import sample_points, specs
from infstab import convexfn as cf
from infstab.convexfn import REAL_LINE, ConvexFnSpec, EmptyDom, Improper, Interval, Proper, Slope
from infstab.extreal import NEG_INF, POS_INF, ExtReal
from infstab.fenchel import conjugate, continuity_at_zero, corollary_fstar_check

ABS = cf.proper([(0, 0)], -1, 1)
RELU = cf.proper([(0, 0)], 0, 1)
ZERO = cf.proper([(0, 0)], 0, 0)
slopes = st.fractions(min_value=-12, max_value=12, max_denominator=6)


def line_specs(kind=None):
    return specs(case="theorem1", kind=kind)


def conj_oracle(spec, t):
    """``sup_x [t x - f(x)]`` from the raw fields: knots, plus tails that run off to infinity."""
    t = F(t)
    body = spec.body
    if isinstance(body, EmptyDom):
        return NEG_INF
    if isinstance(body, Improper):
        return POS_INF
    pts = list(body.breakpoints)
    lt, rt = body.left_tail, body.right_tail
    if isinstance(lt, Slope):
        if lt.extent.is_neg_inf:
            if t < lt.slope:
                return POS_INF
        else:
            e = lt.extent.value
            pts.insert(0, (e, pts[0][1] + lt.slope * (e - pts[0][0])))
    if isinstance(rt, Slope):
        if rt.extent.is_pos_inf:
            if t > rt.slope:
                return POS_INF
        else:
            e = rt.extent.value
            pts.append((e, pts[-1][1] + rt.slope * (e - pts[-1][0])))
    if len(pts) == 1 and not isinstance(lt, Slope) and not isinstance(rt, Slope):
        x0, v0 = pts[0]
        w = body.left_endpoint_override or body.right_endpoint_override or ExtReal(v0)
        return NEG_INF if w.is_pos_inf else ExtReal(t * x0 - w.value)
    return ExtReal(max(t * x - v for x, v in pts))


def test_conjugate_of_empty_is_minus_inf():
    conj = conjugate(ConvexFnSpec(REAL_LINE, EmptyDom()))
    assert all(conj(t) == NEG_INF for t in (-3, 0, F(7, 2)))


def test_conjugate_of_improper_is_plus_inf():
    conj = conjugate(ConvexFnSpec(REAL_LINE, Improper(Interval.open(0, 1))))
    assert all(conj(t) == POS_INF for t in (-3, 0, F(7, 2)))


def test_conjugate_of_zero():
    conj = conjugate(ZERO)
    assert conj(0) == ExtReal(0)
    assert conj(F(1, 1000)) == POS_INF and conj(F(-1, 1000)) == POS_INF


def test_conjugate_of_absval():
    conj = conjugate(ABS)
    for t in (F(-1), F(-1, 3), F(0), F(1, 2), F(1)):
        assert conj(t) == ExtReal(0)
    assert conj(F(-11, 10)) == POS_INF and conj(F(11, 10)) == POS_INF
    # brute-force sup over a dense rational grid
    xs = [F(k, 8) for k in range(-400, 401)]
    for t in (F(-1), F(-1, 2), F(0), F(3, 4), F(1)):
        assert max(t * x - abs(x) for x in xs) == 0


def test_conjugate_of_relu():
    conj = conjugate(RELU)
    assert [conj(t) for t in (0, F(1, 2), 1)] == [ExtReal(0)] * 3
    assert conj(F(-1, 100)) == POS_INF and conj(F(101, 100)) == POS_INF


def test_conjugate_of_singleton_is_affine():
    spec = ConvexFnSpec(REAL_LINE, Proper(((F(2), F(3)),)))
    conj = conjugate(spec)
    for t in (F(-5), F(0), F(7, 3)):
        assert conj(t) == ExtReal(2 * t - 3)


def test_conjugate_needs_real_line():
    with pytest.raises(cf.DomainNotR):
        conjugate(cf.proper([(0, 0), (1, 1)], domain=Interval.closed(0, 1)))


def test_continuity_examples():
    assert continuity_at_zero(conjugate(ABS))
    assert not continuity_at_zero(conjugate(RELU))
    assert not continuity_at_zero(conjugate(ZERO))


def test_fstar_check_examples():
    r = corollary_fstar_check(ABS)
    assert r["premise"] and r["conclusion"] and r["status"] == "holds"
    r = corollary_fstar_check(RELU)
    assert not r["premise"] and r["status"] == "vacuous"


@given(line_specs(), slopes)
def test_conjugate_matches_oracle(spec, t):
    assert conjugate(spec)(t) == conj_oracle(spec, t)


@given(line_specs())
def test_conjugate_is_valid_spec(spec):
    cf.validate(conjugate(spec).spec)


@given(line_specs(), slopes)
def test_fenchel_young(spec, t):
    ft = conjugate(spec)(t)
    for x in sample_points(spec):
        fx = cf.eval_at(spec, x)
        if {fx, ft} == {POS_INF, NEG_INF}:
            continue
        assert fx + ft >= ExtReal(t * x)


@given(line_specs(), slopes)
def test_conjugate_dominates_sampled_sup(spec, t):
    ft = conjugate(spec)(t)
    for x in sample_points(spec):
        fx = cf.eval_at(spec, x)
        if fx.is_finite:
            assert ft >= ExtReal(t * x - fx.value)
        elif fx.is_neg_inf:
            assert ft == POS_INF


@given(line_specs())
def test_minus_conjugate_at_zero_is_infimum(spec):
    assert -conjugate(spec)(0) == cf.infimum(spec)


@given(line_specs(kind="proper"))
def test_biconjugate_is_lower_closure(spec):
    assume(cf.card_dom(spec).kind == "many")
    fss = conjugate(conjugate(spec).spec)
    v = cf.view(spec.body)
    for x in sample_points(spec):
        fx = cf.eval_at(spec, x)
        assert fss(x) <= fx
        inside = v.lo < ExtReal(x) < v.hi
        beyond = not (v.lo <= ExtReal(x) <= v.hi)
        if inside or beyond:
            assert fss(x) == fx
        elif v.lo == ExtReal(x):
            assert fss(x) == cf.one_sided_limit(spec, x, "right")


@given(line_specs(kind="proper"))
def test_fstar_check_never_violated(spec):
    r = corollary_fstar_check(spec)
    assert r["status"] != "violated"
    if r["premise"]:
        assert r["conclusion"]
