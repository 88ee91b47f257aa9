"""Extended-real convex functions on an interval of the real line.

A :class:`ConvexFnSpec` pairs the ambient interval ``C`` with one of three
bodies:

* :class:`EmptyDom` -- ``f`` is ``+inf`` on all of ``C``;
* :class:`Improper` -- ``f`` is ``-inf`` on an interval, ``+inf`` outside its
  closure, with optional values in ``(-inf, +inf]`` at the open ends;
* :class:`Proper` -- a finite piecewise-linear function given by breakpoints,
  two tails, and optional upward jumps at finite endpoints of its domain.

All predicates (convexity, monotonicity, infimum, sublevel sets) are decided
exactly in rational arithmetic.
"""

from __future__ import annotations

import bisect
import enum
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from .extreal import NEG_INF, POS_INF, ExtReal

__all__ = [
    "ValidationError",
    "NonConvexSlopes",
    "DownwardEndpointJump",
    "IntervalNotContained",
    "MalformedSpec",
    "OutsideAmbientSet",
    "DomainNotR",
    "Interval",
    "REAL_LINE",
    "CutOff",
    "Slope",
    "EmptyDom",
    "Improper",
    "Proper",
    "ConvexFnSpec",
    "PLView",
    "DomCard",
    "MonotonicityClass",
    "validate",
    "eval_at",
    "card_dom",
    "infimum",
    "infimum_attained",
    "monotonicity_class",
    "sublevel_interval",
    "is_coercive",
    "extend_to_line",
    "one_sided_limit",
    "view",
    "from_view",
    "flip",
    "shift_x",
    "shift_v",
    "add_pl",
    "restrict",
    "critical_points",
    "proper",
]


class ValidationError(ValueError):
    """Base class for specs that do not describe a convex function."""


class NonConvexSlopes(ValidationError):
    pass


class DownwardEndpointJump(ValidationError):
    pass


class IntervalNotContained(ValidationError):
    pass


class MalformedSpec(ValidationError):
    pass


class OutsideAmbientSet(ValueError):
    pass


class DomainNotR(ValueError):
    pass


def _q(x) -> Fraction:
    if isinstance(x, ExtReal):
        return x.value
    return Fraction(x)


@dataclass(frozen=True)
class Interval:
    """An interval with extended-real endpoints and closure flags.

    ``lo == hi`` is allowed only for the closed single point ``[a, a]``.
    Infinite endpoints are always open.
    """

    lo: ExtReal
    lo_closed: bool
    hi: ExtReal
    hi_closed: bool

    def __post_init__(self):
        object.__setattr__(self, "lo", ExtReal.coerce(self.lo))
        object.__setattr__(self, "hi", ExtReal.coerce(self.hi))
        if self.lo > self.hi:
            raise MalformedSpec(f"interval with lo > hi: {self}")
        if (self.lo_closed and not self.lo.is_finite) or (
            self.hi_closed and not self.hi.is_finite
        ):
            raise MalformedSpec(f"infinite endpoint marked closed: {self}")
        if self.lo == self.hi and not (self.lo_closed and self.hi_closed):
            raise MalformedSpec(f"empty degenerate interval: {self}")

    @classmethod
    def closed(cls, lo, hi) -> "Interval":
        return cls(ExtReal(lo), True, ExtReal(hi), True)

    @classmethod
    def open(cls, lo, hi) -> "Interval":
        return cls(ExtReal.coerce(lo), False, ExtReal.coerce(hi), False)

    @classmethod
    def point(cls, x) -> "Interval":
        return cls.closed(x, x)

    @property
    def is_bounded(self) -> bool:
        return self.lo.is_finite and self.hi.is_finite

    @property
    def is_degenerate(self) -> bool:
        return self.lo == self.hi

    @property
    def is_real_line(self) -> bool:
        return self.lo.is_neg_inf and self.hi.is_pos_inf

    def contains(self, x) -> bool:
        x = ExtReal.coerce(x)
        if not x.is_finite:
            return False
        above = x > self.lo or (self.lo_closed and x == self.lo)
        below = x < self.hi or (self.hi_closed and x == self.hi)
        return above and below

    def closure_contains(self, x) -> bool:
        x = ExtReal.coerce(x)
        return x.is_finite and self.lo <= x <= self.hi

    def contains_interval(self, other: "Interval") -> bool:
        if other.lo < self.lo or other.hi > self.hi:
            return False
        if other.lo == self.lo and other.lo_closed and not self.lo_closed:
            return False
        if other.hi == self.hi and other.hi_closed and not self.hi_closed:
            return False
        return True

    def flipped(self) -> "Interval":
        return Interval(-self.hi, self.hi_closed, -self.lo, self.lo_closed)

    def shifted(self, a) -> "Interval":
        return Interval(self.lo + a, self.lo_closed, self.hi + a, self.hi_closed)

    def __str__(self) -> str:
        left = "[" if self.lo_closed else "("
        right = "]" if self.hi_closed else ")"
        return f"{left}{self.lo}, {self.hi}{right}"


REAL_LINE = Interval(NEG_INF, False, POS_INF, False)


@dataclass(frozen=True)
class CutOff:
    """``f = +inf`` beyond the outermost breakpoint."""


@dataclass(frozen=True)
class Slope:
    """Affine continuation with the given slope out to ``extent``.

    ``extent`` is a finite endpoint of the domain or the matching infinity
    (``-inf`` on the left, ``+inf`` on the right).
    """

    slope: Fraction
    extent: ExtReal

    def __post_init__(self):
        object.__setattr__(self, "slope", Fraction(self.slope))
        object.__setattr__(self, "extent", ExtReal.coerce(self.extent))


Tail = Union[CutOff, Slope]


@dataclass(frozen=True)
class EmptyDom:
    pass


@dataclass(frozen=True)
class Improper:
    """``-inf`` on ``minus_inf`` (ends included when closed).

    An open finite end of ``minus_inf`` that lies in ``C`` takes the matching
    edge value; everything else is ``+inf``.
    """

    minus_inf: Interval
    left_edge_value: ExtReal = POS_INF
    right_edge_value: ExtReal = POS_INF

    def __post_init__(self):
        object.__setattr__(self, "left_edge_value", ExtReal.coerce(self.left_edge_value))
        object.__setattr__(self, "right_edge_value", ExtReal.coerce(self.right_edge_value))


@dataclass(frozen=True)
class Proper:
    breakpoints: Tuple[Tuple[Fraction, Fraction], ...]
    left_tail: Tail = CutOff()
    right_tail: Tail = CutOff()
    left_endpoint_override: Optional[ExtReal] = None
    right_endpoint_override: Optional[ExtReal] = None

    def __post_init__(self):
        pts = tuple((Fraction(x), Fraction(v)) for x, v in self.breakpoints)
        object.__setattr__(self, "breakpoints", pts)
        for name in ("left_endpoint_override", "right_endpoint_override"):
            val = getattr(self, name)
            if val is not None:
                object.__setattr__(self, name, ExtReal.coerce(val))


Body = Union[EmptyDom, Improper, Proper]


@dataclass(frozen=True)
class ConvexFnSpec:
    domain: Interval
    body: Body


# -- normalized piecewise-linear view ------------------------------------


@dataclass(frozen=True)
class PLView:
    """Knot form of a :class:`Proper` body.

    Finite tail extents become knots; ``left_slope``/``right_slope`` are set
    only for tails reaching an infinity.
    """

    knots: Tuple[Tuple[Fraction, Fraction], ...]
    left_slope: Optional[Fraction] = None
    right_slope: Optional[Fraction] = None
    left_override: Optional[ExtReal] = None
    right_override: Optional[ExtReal] = None

    @property
    def lo(self) -> ExtReal:
        return NEG_INF if self.left_slope is not None else ExtReal(self.knots[0][0])

    @property
    def hi(self) -> ExtReal:
        return POS_INF if self.right_slope is not None else ExtReal(self.knots[-1][0])

    @property
    def xs(self) -> List[Fraction]:
        return [x for x, _ in self.knots]

    def chord_slopes(self) -> List[Fraction]:
        return [
            (v1 - v0) / (x1 - x0)
            for (x0, v0), (x1, v1) in zip(self.knots, self.knots[1:])
        ]

    def slope_sequence(self) -> List[Fraction]:
        seq = self.chord_slopes()
        if self.left_slope is not None:
            seq.insert(0, self.left_slope)
        if self.right_slope is not None:
            seq.append(self.right_slope)
        return seq

    def value(self, x) -> Fraction:
        """Value of the affine interpolant at ``x`` (overrides ignored)."""
        x = _q(x)
        x0, v0 = self.knots[0]
        xn, vn = self.knots[-1]
        if x < x0:
            if self.left_slope is None:
                raise ValueError(f"{x} is left of the domain")
            return v0 + self.left_slope * (x - x0)
        if x > xn:
            if self.right_slope is None:
                raise ValueError(f"{x} is right of the domain")
            return vn + self.right_slope * (x - xn)
        xs = self.xs
        i = bisect.bisect_left(xs, x)
        if xs[i] == x:
            return self.knots[i][1]
        (xa, va), (xb, vb) = self.knots[i - 1], self.knots[i]
        return va + (vb - va) * (x - xa) / (xb - xa)

    def flipped(self) -> "PLView":
        return PLView(
            tuple((-x, v) for x, v in reversed(self.knots)),
            None if self.right_slope is None else -self.right_slope,
            None if self.left_slope is None else -self.left_slope,
            self.right_override,
            self.left_override,
        )


def view(spec_or_body) -> PLView:
    body = spec_or_body.body if isinstance(spec_or_body, ConvexFnSpec) else spec_or_body
    if not isinstance(body, Proper):
        raise TypeError("only proper bodies have a piecewise-linear view")
    knots = list(body.breakpoints)
    if not knots:
        raise MalformedSpec("proper body needs at least one breakpoint")
    left_slope = right_slope = None
    lt, rt = body.left_tail, body.right_tail
    if isinstance(lt, Slope):
        if lt.extent.is_finite:
            x0, v0 = knots[0]
            e = lt.extent.value
            knots.insert(0, (e, v0 + lt.slope * (e - x0)))
        else:
            left_slope = lt.slope
    if isinstance(rt, Slope):
        if rt.extent.is_finite:
            xn, vn = knots[-1]
            e = rt.extent.value
            knots.append((e, vn + rt.slope * (e - xn)))
        else:
            right_slope = rt.slope
    return PLView(
        tuple(knots),
        left_slope,
        right_slope,
        body.left_endpoint_override,
        body.right_endpoint_override,
    )


def from_view(domain: Interval, v: PLView) -> ConvexFnSpec:
    """Canonical spec for a view: tails are ``CutOff`` or reach infinity."""
    left = CutOff() if v.left_slope is None else Slope(v.left_slope, NEG_INF)
    right = CutOff() if v.right_slope is None else Slope(v.right_slope, POS_INF)
    body = Proper(v.knots, left, right, v.left_override, v.right_override)
    return ConvexFnSpec(domain, body)


def proper(
    knots: Sequence[Tuple],
    left_slope=None,
    right_slope=None,
    domain: Interval = REAL_LINE,
    left_override=None,
    right_override=None,
) -> ConvexFnSpec:
    """Build and validate a proper spec; ``None`` slopes mean ``CutOff``."""
    v = PLView(
        tuple((Fraction(x), Fraction(y)) for x, y in knots),
        None if left_slope is None else Fraction(left_slope),
        None if right_slope is None else Fraction(right_slope),
        None if left_override is None else ExtReal.coerce(left_override),
        None if right_override is None else ExtReal.coerce(right_override),
    )
    spec = from_view(domain, v)
    validate(spec)
    return spec


# -- validation -----------------------------------------------------------


def validate(spec: ConvexFnSpec) -> None:
    """Raise a :class:`ValidationError` subclass for the first broken invariant."""
    c = spec.domain
    if c.is_degenerate:
        raise MalformedSpec("ambient set must contain more than one point")
    body = spec.body
    if isinstance(body, EmptyDom):
        return
    if isinstance(body, Improper):
        _validate_improper(c, body)
        return
    if isinstance(body, Proper):
        _validate_proper(c, body)
        return
    raise MalformedSpec(f"unknown body {body!r}")


def _validate_improper(c: Interval, body: Improper) -> None:
    r = body.minus_inf
    if not c.contains_interval(r):
        raise IntervalNotContained(f"-inf region {r} not contained in {c}")
    for end, closed, edge, side in (
        (r.lo, r.lo_closed, body.left_edge_value, "left"),
        (r.hi, r.hi_closed, body.right_edge_value, "right"),
    ):
        if edge.is_neg_inf:
            raise MalformedSpec(f"{side} edge value must exceed -inf; close the region instead")
        if edge.is_pos_inf:
            continue
        if not end.is_finite or closed:
            raise MalformedSpec(f"{side} edge value given where the region has no open end")
        if not c.contains(end):
            raise IntervalNotContained(f"{side} edge value given at {end}, outside {c}")


def _validate_proper(c: Interval, body: Proper) -> None:
    if not body.breakpoints:
        raise MalformedSpec("proper body needs at least one breakpoint")
    xs = [x for x, _ in body.breakpoints]
    for a, b in zip(xs, xs[1:]):
        if not a < b:
            raise MalformedSpec(f"breakpoints not strictly increasing at {b}")
    lt, rt = body.left_tail, body.right_tail
    if isinstance(lt, Slope):
        if lt.extent.is_pos_inf or (lt.extent.is_finite and lt.extent.value >= xs[0]):
            raise MalformedSpec(f"left tail extent {lt.extent} must lie left of {xs[0]}")
    if isinstance(rt, Slope):
        if rt.extent.is_neg_inf or (rt.extent.is_finite and rt.extent.value <= xs[-1]):
            raise MalformedSpec(f"right tail extent {rt.extent} must lie right of {xs[-1]}")
    v = view(body)
    if v.lo < c.lo or v.hi > c.hi:
        raise IntervalNotContained(f"domain [{v.lo}, {v.hi}] leaves the closure of {c}")
    seq = v.slope_sequence()
    for i, (s0, s1) in enumerate(zip(seq, seq[1:])):
        if s1 < s0:
            raise NonConvexSlopes(f"slope {s1} follows larger slope {s0} (position {i + 1})")
    for end, override, side in (
        (v.lo, v.left_override, "left"),
        (v.hi, v.right_override, "right"),
    ):
        if override is None:
            continue
        if not end.is_finite:
            raise MalformedSpec(f"{side} override given but the domain is unbounded there")
        if not c.contains(end):
            raise IntervalNotContained(f"{side} override at {end} lies outside {c}")
        limit = v.value(end.value)
        if not override > limit:
            raise DownwardEndpointJump(
                f"{side} override {override} does not exceed the limit {limit}"
            )
    if (
        v.lo == v.hi
        and v.left_override is not None
        and v.right_override is not None
        and v.left_override != v.right_override
    ):
        raise MalformedSpec("single-point domain with two different overrides")


# -- pointwise evaluation -------------------------------------------------


def _proper_value(v: PLView, x: Fraction) -> ExtReal:
    if x < v.lo or x > v.hi:
        return POS_INF
    if v.left_override is not None and x == v.lo:
        return v.left_override
    if v.right_override is not None and x == v.hi:
        return v.right_override
    return ExtReal(v.value(x))


def _improper_value(body: Improper, x: Fraction) -> ExtReal:
    r = body.minus_inf
    if r.contains(x):
        return NEG_INF
    if r.lo == x:
        return body.left_edge_value
    if r.hi == x:
        return body.right_edge_value
    return POS_INF


def eval_at(spec: ConvexFnSpec, x) -> ExtReal:
    """Exact value of ``f`` at a rational point of ``C``."""
    x = _q(x)
    if not spec.domain.contains(x):
        raise OutsideAmbientSet(f"{x} is not in {spec.domain}")
    body = spec.body
    if isinstance(body, EmptyDom):
        return POS_INF
    if isinstance(body, Improper):
        return _improper_value(body, x)
    return _proper_value(view(body), x)


def one_sided_limit(spec: ConvexFnSpec, x, side: str) -> ExtReal:
    """``lim f(y)`` as ``y`` tends to ``x`` from ``side`` ("left" or "right")."""
    x = _q(x)
    c = spec.domain
    if side == "left":
        ok = c.lo < x <= c.hi
    elif side == "right":
        ok = c.lo <= x < c.hi
    else:
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")
    if not ok:
        raise OutsideAmbientSet(f"no points of {c} on the {side} of {x}")
    body = spec.body
    if isinstance(body, EmptyDom):
        return POS_INF
    if isinstance(body, Improper):
        r = body.minus_inf
        if r.is_degenerate:
            return POS_INF
        inside = (r.lo < x <= r.hi) if side == "left" else (r.lo <= x < r.hi)
        return NEG_INF if inside else POS_INF
    v = view(body)
    inside = (v.lo < x <= v.hi) if side == "left" else (v.lo <= x < v.hi)
    return ExtReal(v.value(x)) if inside else POS_INF


# -- effective domain and infimum ----------------------------------------


@dataclass(frozen=True)
class DomCard:
    """Cardinality class of ``dom f``: "zero", "one" (with its point) or "many"."""

    kind: str
    x0: Optional[Fraction] = None

    @classmethod
    def one(cls, x0) -> "DomCard":
        return cls("one", Fraction(x0))

    def __str__(self) -> str:
        return f"One({self.x0})" if self.kind == "one" else self.kind.capitalize()


DomCard.ZERO = DomCard("zero")
DomCard.MANY = DomCard("many")


def card_dom(spec: ConvexFnSpec) -> DomCard:
    body = spec.body
    if isinstance(body, EmptyDom):
        return DomCard.ZERO
    if isinstance(body, Improper):
        r = body.minus_inf
        return DomCard.one(r.lo.value) if r.is_degenerate else DomCard.MANY
    v = view(body)
    if v.lo < v.hi:
        return DomCard.MANY
    x0 = v.lo.value
    if not spec.domain.contains(x0) or _proper_value(v, x0).is_pos_inf:
        return DomCard.ZERO
    return DomCard.one(x0)


def _escapes(v: PLView) -> bool:
    return (v.left_slope is not None and v.left_slope > 0) or (
        v.right_slope is not None and v.right_slope < 0
    )


def infimum(spec: ConvexFnSpec) -> ExtReal:
    """Exact ``inf_C f`` (``+inf`` when ``dom f`` is empty)."""
    body = spec.body
    if isinstance(body, EmptyDom):
        return POS_INF
    if isinstance(body, Improper):
        return NEG_INF
    card = card_dom(spec)
    if card.kind == "zero":
        return POS_INF
    v = view(body)
    if card.kind == "one":
        return _proper_value(v, card.x0)
    if _escapes(v):
        return NEG_INF
    # With interior points, every knot value is attained or approached.
    return ExtReal(min(val for _, val in v.knots))


def infimum_attained(spec: ConvexFnSpec) -> bool:
    """Whether some ``x`` in ``C`` has ``f(x) == inf_C f``."""
    body = spec.body
    if not isinstance(body, Proper) or card_dom(spec).kind != "many":
        return True
    v = view(body)
    if _escapes(v):
        return False
    m = min(val for _, val in v.knots)
    for x, val in v.knots:
        if val == m and spec.domain.contains(x) and _proper_value(v, x) == m:
            return True
    for (_, va), (_, vb) in zip(v.knots, v.knots[1:]):
        if va == vb == m:
            return True
    flat_left = v.left_slope == 0 and v.knots[0][1] == m
    flat_right = v.right_slope == 0 and v.knots[-1][1] == m
    return flat_left or flat_right


# -- monotonicity ---------------------------------------------------------


class MonotonicityClass(enum.Enum):
    NONDECREASING_ONLY = "NondecreasingOnly"
    NONINCREASING_ONLY = "NonincreasingOnly"
    CONSTANT = "Constant"
    NON_MONOTONIC = "NonMonotonic"

    @property
    def nondecreasing(self) -> bool:
        return self in (MonotonicityClass.NONDECREASING_ONLY, MonotonicityClass.CONSTANT)

    @property
    def nonincreasing(self) -> bool:
        return self in (MonotonicityClass.NONINCREASING_ONLY, MonotonicityClass.CONSTANT)


def critical_points(spec: ConvexFnSpec) -> List[Fraction]:
    """Sorted finite points of the closure of ``C`` where ``f`` may change form."""
    c = spec.domain
    pts = {e.value for e in (c.lo, c.hi) if e.is_finite}
    body = spec.body
    if isinstance(body, Improper):
        pts.update(e.value for e in (body.minus_inf.lo, body.minus_inf.hi) if e.is_finite)
    elif isinstance(body, Proper):
        pts.update(view(body).xs)
    return sorted(p for p in pts if c.closure_contains(p))


def _profile_points(spec: ConvexFnSpec) -> List[Fraction]:
    # Each open gap between critical points is affine (or constant +-inf),
    # so two interior samples per gap fix its direction.
    crit = critical_points(spec)
    c = spec.domain
    if not crit:
        return [Fraction(0), Fraction(1)]
    pts = []
    if c.lo.is_neg_inf:
        pts += [crit[0] - 2, crit[0] - 1]
    for a, b in zip(crit, crit[1:]):
        pts += [a, a + (b - a) / 3, a + 2 * (b - a) / 3]
    pts.append(crit[-1])
    if c.hi.is_pos_inf:
        pts += [crit[-1] + 1, crit[-1] + 2]
    return [p for p in pts if c.contains(p)]


def monotonicity_class(spec: ConvexFnSpec) -> MonotonicityClass:
    """Monotonicity over all of ``C`` in the extended-real order."""
    vals = [eval_at(spec, p) for p in _profile_points(spec)]
    up = all(a <= b for a, b in zip(vals, vals[1:]))
    down = all(a >= b for a, b in zip(vals, vals[1:]))
    if up and down:
        return MonotonicityClass.CONSTANT
    if up:
        return MonotonicityClass.NONDECREASING_ONLY
    if down:
        return MonotonicityClass.NONINCREASING_ONLY
    return MonotonicityClass.NON_MONOTONIC


# -- sublevel sets --------------------------------------------------------


def _leftmost_at_most(v: PLView, c: Fraction) -> Optional[ExtReal]:
    """Smallest ``x`` in the closed domain with interpolant ``<= c``, if any."""
    x0, v0 = v.knots[0]
    if v.left_slope is not None:
        s = v.left_slope
        if s > 0 or (s == 0 and v0 <= c):
            return NEG_INF
        if s < 0 and v0 <= c:
            return ExtReal(x0 + (c - v0) / s)
    prev = None
    for x, val in v.knots:
        if val <= c:
            if prev is None:
                return ExtReal(x)
            px, pv = prev
            return ExtReal(px + (c - pv) * (x - px) / (val - pv))
        prev = (x, val)
    xn, vn = v.knots[-1]
    if v.right_slope is not None and v.right_slope < 0:
        return ExtReal(xn + (c - vn) / v.right_slope)
    return None


def sublevel_interval(spec: ConvexFnSpec, c) -> Optional[Interval]:
    """``{x in C : f(x) <= c}`` as an interval, or ``None`` when empty."""
    c = ExtReal.coerce(c)
    dom = spec.domain
    body = spec.body
    if c.is_pos_inf:
        return dom
    if isinstance(body, EmptyDom):
        return None
    if isinstance(body, Improper):
        r = body.minus_inf
        lo_closed = r.lo_closed or body.left_edge_value <= c
        hi_closed = r.hi_closed or body.right_edge_value <= c
        return Interval(r.lo, lo_closed, r.hi, hi_closed)
    if c.is_neg_inf:
        return None
    card = card_dom(spec)
    v = view(body)
    if card.kind == "zero":
        return None
    if card.kind == "one":
        return Interval.point(card.x0) if _proper_value(v, card.x0) <= c else None
    lo = _leftmost_at_most(v, c.value)
    if lo is None:
        return None
    hi = -_leftmost_at_most(v.flipped(), c.value)

    def end_closed(x: ExtReal) -> bool:
        if not x.is_finite:
            return False
        if x == v.lo or x == v.hi:
            return dom.contains(x) and _proper_value(v, x.value) <= c
        return True

    lo_closed, hi_closed = end_closed(lo), end_closed(hi)
    if lo == hi and not (lo_closed and hi_closed):
        return None
    return Interval(lo, lo_closed, hi, hi_closed)


def is_coercive(spec: ConvexFnSpec) -> bool:
    """``f(x) -> +inf`` as ``|x| -> inf``; defined for ``C`` equal to the real line."""
    if not spec.domain.is_real_line:
        raise DomainNotR(f"coercivity needs C = R, got {spec.domain}")
    body = spec.body
    if isinstance(body, EmptyDom):
        return True
    if isinstance(body, Improper):
        return body.minus_inf.is_bounded
    v = view(body)
    left_ok = v.left_slope is None or v.left_slope < 0
    right_ok = v.right_slope is None or v.right_slope > 0
    return left_ok and right_ok


# -- transformations ------------------------------------------------------


def extend_to_line(spec: ConvexFnSpec) -> ConvexFnSpec:
    """The extension equal to ``f`` on ``C`` and ``+inf`` off ``C``."""
    c = spec.domain
    if c.is_real_line:
        return spec
    body = spec.body
    if isinstance(body, Proper):
        v = view(body)
        lo_over, hi_over = body.left_endpoint_override, body.right_endpoint_override
        if v.lo.is_finite and not c.contains(v.lo):
            lo_over = POS_INF
        if v.hi.is_finite and not c.contains(v.hi):
            hi_over = POS_INF
        body = replace(body, left_endpoint_override=lo_over, right_endpoint_override=hi_over)
    out = ConvexFnSpec(REAL_LINE, body)
    validate(out)
    return out


def _flip_tail(t: Tail) -> Tail:
    return t if isinstance(t, CutOff) else Slope(-t.slope, -t.extent)


def flip(spec: ConvexFnSpec) -> ConvexFnSpec:
    """The mirror image ``x -> -x``."""
    body = spec.body
    if isinstance(body, Improper):
        body = Improper(body.minus_inf.flipped(), body.right_edge_value, body.left_edge_value)
    elif isinstance(body, Proper):
        body = Proper(
            tuple((-x, v) for x, v in reversed(body.breakpoints)),
            _flip_tail(body.right_tail),
            _flip_tail(body.left_tail),
            body.right_endpoint_override,
            body.left_endpoint_override,
        )
    return ConvexFnSpec(spec.domain.flipped(), body)


def _shift_tail(t: Tail, a: Fraction) -> Tail:
    return t if isinstance(t, CutOff) else Slope(t.slope, t.extent + a)


def shift_x(spec: ConvexFnSpec, a) -> ConvexFnSpec:
    """``x -> f(x - a)`` on ``C + a``."""
    a = Fraction(a)
    body = spec.body
    if isinstance(body, Improper):
        body = replace(body, minus_inf=body.minus_inf.shifted(a))
    elif isinstance(body, Proper):
        body = replace(
            body,
            breakpoints=tuple((x + a, v) for x, v in body.breakpoints),
            left_tail=_shift_tail(body.left_tail, a),
            right_tail=_shift_tail(body.right_tail, a),
        )
    return ConvexFnSpec(spec.domain.shifted(a), body)


def shift_v(spec: ConvexFnSpec, k) -> ConvexFnSpec:
    """``f + k`` for a rational constant ``k``."""
    k = Fraction(k)
    body = spec.body
    if isinstance(body, Improper):
        body = replace(
            body,
            left_edge_value=body.left_edge_value + k,
            right_edge_value=body.right_edge_value + k,
        )
    elif isinstance(body, Proper):
        over = [
            None if o is None else o + k
            for o in (body.left_endpoint_override, body.right_endpoint_override)
        ]
        body = replace(
            body,
            breakpoints=tuple((x, v + k) for x, v in body.breakpoints),
            left_endpoint_override=over[0],
            right_endpoint_override=over[1],
        )
    return ConvexFnSpec(spec.domain, body)


def add_pl(spec: ConvexFnSpec, g: PLView, weight=1) -> ConvexFnSpec:
    """``f + weight * g`` for a finite piecewise-linear ``g`` on the whole line."""
    if g.left_slope is None or g.right_slope is None:
        raise ValueError("g must be finite on the whole real line")
    w = Fraction(weight)
    body = spec.body
    if isinstance(body, EmptyDom):
        return spec
    if isinstance(body, Improper):
        r = body.minus_inf
        edges = []
        for end, edge in ((r.lo, body.left_edge_value), (r.hi, body.right_edge_value)):
            edges.append(edge + w * g.value(end.value) if edge.is_finite else edge)
        return ConvexFnSpec(spec.domain, Improper(r, edges[0], edges[1]))
    v = view(body)
    xs = set(v.xs)
    xs.update(x for x in g.xs if v.lo < x < v.hi)
    knots = tuple((x, v.value(x) + w * g.value(x)) for x in sorted(xs))
    overrides = []
    for end, o in ((v.lo, v.left_override), (v.hi, v.right_override)):
        overrides.append(o if o is None or not o.is_finite else o + w * g.value(end.value))
    out = PLView(
        knots,
        None if v.left_slope is None else v.left_slope + w * g.left_slope,
        None if v.right_slope is None else v.right_slope + w * g.right_slope,
        overrides[0],
        overrides[1],
    )
    return from_view(spec.domain, out)


def restrict(v: PLView, domain: Interval) -> ConvexFnSpec:
    """Restriction to ``domain`` of a function given on (at least) its closure."""
    if v.lo > domain.lo or v.hi < domain.hi:
        raise ValueError("view does not cover the requested domain")
    knots = []
    if domain.lo.is_finite:
        knots.append((domain.lo.value, v.value(domain.lo.value)))
    knots += [(x, val) for x, val in v.knots if domain.lo < x < domain.hi]
    if domain.hi.is_finite:
        knots.append((domain.hi.value, v.value(domain.hi.value)))
    if not knots:
        knots = [v.knots[0]]
    out = PLView(
        tuple(knots),
        v.left_slope if domain.lo.is_neg_inf else None,
        v.right_slope if domain.hi.is_pos_inf else None,
    )
    return from_view(domain, out)
