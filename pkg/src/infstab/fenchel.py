"""Exact Legendre-Fenchel conjugates of representable convex functions."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import convexfn as cf
from .convexfn import REAL_LINE, ConvexFnSpec, DomainNotR, EmptyDom, Improper, PLView
from .extreal import ExtReal

__all__ = [
    "ConjugatePlf",
    "conjugate",
    "continuity_at_zero",
    "corollary_fstar_check",
]


@dataclass(frozen=True)
class ConjugatePlf:
    """``f*`` as a convex spec on the real line, in the slope variable."""

    spec: ConvexFnSpec
    variable: str = "t"

    def __call__(self, t) -> ExtReal:
        return cf.eval_at(self.spec, t)


def conjugate(spec: ConvexFnSpec) -> ConjugatePlf:
    """``f*(t) = sup_x [t*x - f(x)]``, computed from knots and slopes.

    Breakpoints of ``f*`` sit at the slopes of ``f``; between them ``f*`` is
    affine with slope equal to the knot of ``f`` that attains the sup.
    Upward endpoint jumps of ``f`` do not affect the sup.
    """
    if not spec.domain.is_real_line:
        raise DomainNotR("conjugate needs C = R; apply extend_to_line first")
    body = spec.body
    minus_inf_everywhere = ConvexFnSpec(REAL_LINE, Improper(REAL_LINE))
    if isinstance(body, EmptyDom):
        return ConjugatePlf(minus_inf_everywhere)
    if isinstance(body, Improper):
        return ConjugatePlf(ConvexFnSpec(REAL_LINE, EmptyDom()))
    card = cf.card_dom(spec)
    if card.kind == "zero":
        return ConjugatePlf(minus_inf_everywhere)
    if card.kind == "one":
        w = cf.eval_at(spec, card.x0).value
        line = PLView(((Fraction(0), -w),), card.x0, card.x0)
        return ConjugatePlf(cf.from_view(REAL_LINE, line))

    v = cf.view(body)
    ts = sorted(set(v.slope_sequence()))
    knots = tuple((t, max(t * x - val for x, val in v.knots)) for t in ts)
    out = PLView(
        knots,
        None if v.left_slope is not None else v.knots[0][0],
        None if v.right_slope is not None else v.knots[-1][0],
    )
    conj = cf.from_view(REAL_LINE, out)
    cf.validate(conj)
    return ConjugatePlf(conj)


def continuity_at_zero(conj) -> bool:
    """Whether both one-sided limits at 0 equal the value at 0."""
    spec = conj.spec if isinstance(conj, ConjugatePlf) else conj
    at0 = cf.eval_at(spec, 0)
    return (
        cf.one_sided_limit(spec, 0, "left") == at0 == cf.one_sided_limit(spec, 0, "right")
    )


def corollary_fstar_check(spec: ConvexFnSpec) -> dict:
    """Test "non-monotonic with many-point domain implies f* continuous at 0"."""
    if not spec.domain.is_real_line:
        raise DomainNotR("the f* check needs C = R")
    premise = (
        cf.card_dom(spec).kind == "many"
        and cf.monotonicity_class(spec) is cf.MonotonicityClass.NON_MONOTONIC
    )
    conj = conjugate(spec).spec
    left = cf.one_sided_limit(conj, 0, "left")
    at0 = cf.eval_at(conj, 0)
    right = cf.one_sided_limit(conj, 0, "right")
    conclusion = left == at0 == right
    if not premise:
        status = "vacuous"
    else:
        status = "holds" if conclusion else "violated"
    return {
        "premise": premise,
        "conclusion": conclusion,
        "status": status,
        "fstar_left": str(left),
        "fstar_0": str(at0),
        "fstar_right": str(right),
    }
