"""Curated truth table: one spec per endpoint case and behaviour class.

Expected verdicts are written out by hand, not computed; the table is the
fixed reference the predicate is graded against.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as F
from typing import List

from .convexfn import (
    REAL_LINE,
    ConvexFnSpec,
    CutOff,
    EmptyDom,
    Improper,
    Interval,
    Proper,
    Slope,
    validate,
)
from .extreal import NEG_INF, POS_INF, ExtReal
from .stability import Reason

__all__ = ["SuiteEntry", "SUITE", "stable_members", "unstable_members"]

R = Reason
BOUNDED = Interval.closed(0, 2)
HALF_OPEN_BOUNDED = Interval(ExtReal(0), False, ExtReal(2), True)
OPEN_BOUNDED = Interval.open(0, 2)
LEFT_RAY = Interval(NEG_INF, False, ExtReal(1), True)
OPEN_LEFT_RAY = Interval(NEG_INF, False, ExtReal(1), False)
RIGHT_RAY = Interval(ExtReal(0), True, POS_INF, False)
OPEN_RIGHT_RAY = Interval(ExtReal(0), False, POS_INF, False)


@dataclass(frozen=True)
class SuiteEntry:
    name: str
    case: str
    category: str
    spec: ConvexFnSpec
    stable: bool
    reason: Reason


def _e(name, case, category, domain, body, reason) -> SuiteEntry:
    spec = ConvexFnSpec(domain, body)
    validate(spec)
    return SuiteEntry(name, case, category, spec, reason.stable, reason)


def _pts(*pairs):
    return tuple((F(x), F(v)) for x, v in pairs)


def _line(s):
    return Slope(F(s), NEG_INF)


def _ray(s):
    return Slope(F(s), POS_INF)


SUITE: List[SuiteEntry] = [
    # whole line
    _e("line-empty", "theorem1", "empty", REAL_LINE, EmptyDom(), R.EMPTY_DOM_UNSTABLE),
    _e("line-singleton", "theorem1", "singleton", REAL_LINE, Proper(_pts((1, 3))),
       R.SINGLETON_DOM_FINITE_INF_UNSTABLE),
    _e("line-relu", "theorem1", "monotone", REAL_LINE, Proper(_pts((0, 0)), _line(0), _ray(1)),
       R.MONOTONE_FINITE_INF_UNSTABLE),
    _e("line-constant", "theorem1", "monotone", REAL_LINE, Proper(_pts((0, 2)), _line(0), _ray(0)),
       R.MONOTONE_FINITE_INF_UNSTABLE),
    _e("line-decreasing-floor", "theorem1", "monotone", REAL_LINE,
       Proper(_pts((-1, 1), (0, 0)), _line(-1), _ray(0)), R.MONOTONE_FINITE_INF_UNSTABLE),
    _e("line-absval", "theorem1", "non-monotonic", REAL_LINE, Proper(_pts((0, 0)), _line(-1), _ray(1)),
       R.NON_MONOTONIC_MANY_DOM),
    _e("line-ray-cutoff", "theorem1", "non-monotonic", REAL_LINE, Proper(_pts((0, 0)), CutOff(), _ray(1)),
       R.NON_MONOTONIC_MANY_DOM),
    _e("line-identity", "theorem1", "tail", REAL_LINE, Proper(_pts((0, 0)), _line(1), _ray(1)),
       R.INF_IS_MINUS_INFINITY),
    _e("line-improper", "theorem1", "improper", REAL_LINE, Improper(Interval.open(0, 1)),
       R.INF_IS_MINUS_INFINITY),
    _e("line-improper-point", "theorem1", "improper", REAL_LINE, Improper(Interval.point(1)),
       R.INF_IS_MINUS_INFINITY),
    _e("line-jump-segment", "theorem1", "jump", REAL_LINE,
       Proper(_pts((0, 0), (1, 0)), CutOff(), CutOff(), ExtReal(1), None), R.NON_MONOTONIC_MANY_DOM),
    _e("line-jump-monotone", "theorem1", "jump", REAL_LINE,
       Proper(_pts((0, 0)), _line(0), CutOff(), None, ExtReal(1)), R.MONOTONE_FINITE_INF_UNSTABLE),
    # bounded ambient interval
    _e("bounded-empty", "cor1", "empty", BOUNDED, EmptyDom(), R.EMPTY_DOM_UNSTABLE),
    _e("open-bounded-empty", "cor1", "empty", OPEN_BOUNDED, EmptyDom(), R.EMPTY_DOM_UNSTABLE),
    _e("bounded-singleton-end", "cor1", "singleton", BOUNDED, Proper(_pts((0, 5))),
       R.SINGLETON_DOM_FINITE_INF_UNSTABLE),
    _e("open-bounded-singleton", "cor1", "singleton", OPEN_BOUNDED, Proper(_pts((1, -2))),
       R.SINGLETON_DOM_FINITE_INF_UNSTABLE),
    _e("bounded-increasing", "cor1", "monotone", BOUNDED, Proper(_pts((0, 0), (2, 2))),
       R.MANY_DOM_BOUNDED_C),
    _e("half-open-decreasing", "cor1", "monotone", HALF_OPEN_BOUNDED,
       Proper(_pts((0, 4), (2, 0))), R.MANY_DOM_BOUNDED_C),
    _e("bounded-vee", "cor1", "non-monotonic", BOUNDED, Proper(_pts((0, 1), (1, 0), (2, 1))),
       R.MANY_DOM_BOUNDED_C),
    _e("open-bounded-partial", "cor1", "non-monotonic", OPEN_BOUNDED,
       Proper(_pts((1, 1), (2, 2))), R.MANY_DOM_BOUNDED_C),
    _e("bounded-improper", "cor1", "improper", BOUNDED,
       Improper(Interval.open(0, 1), ExtReal(3), POS_INF), R.INF_IS_MINUS_INFINITY),
    _e("bounded-improper-whole", "cor1", "improper", OPEN_BOUNDED, Improper(OPEN_BOUNDED),
       R.INF_IS_MINUS_INFINITY),
    _e("bounded-jump", "cor1", "jump", BOUNDED,
       Proper(_pts((0, 0), (2, 0)), CutOff(), CutOff(), None, ExtReal(4)), R.MANY_DOM_BOUNDED_C),
    _e("bounded-jump-infinite", "cor1", "jump", BOUNDED,
       Proper(_pts((0, 0), (2, 2)), CutOff(), CutOff(), POS_INF, POS_INF), R.MANY_DOM_BOUNDED_C),
    # left ray (-inf, 1]
    _e("left-ray-empty", "cor2", "empty", LEFT_RAY, EmptyDom(), R.EMPTY_DOM_UNSTABLE),
    _e("left-ray-singleton", "cor2", "singleton", LEFT_RAY, Proper(_pts((1, 0))),
       R.SINGLETON_DOM_FINITE_INF_UNSTABLE),
    _e("left-ray-relu", "cor2", "monotone", LEFT_RAY, Proper(_pts((0, 0), (1, 1)), _line(0)),
       R.MONOTONE_FINITE_INF_UNSTABLE),
    _e("left-ray-decreasing", "cor2", "monotone", LEFT_RAY, Proper(_pts((0, 0), (1, 0)), _line(-1)),
       R.MANY_DOM_NOT_NONDECREASING),
    _e("left-ray-absval", "cor2", "non-monotonic", LEFT_RAY, Proper(_pts((0, 0), (1, 1)), _line(-1)),
       R.MANY_DOM_NOT_NONDECREASING),
    _e("left-ray-identity", "cor2", "tail", LEFT_RAY, Proper(_pts((1, 1)), _line(1)),
       R.INF_IS_MINUS_INFINITY),
    _e("left-ray-improper", "cor2", "improper", LEFT_RAY, Improper(Interval.open(NEG_INF, 0)),
       R.INF_IS_MINUS_INFINITY),
    _e("left-ray-jump-flat", "cor2", "jump", LEFT_RAY,
       Proper(_pts((1, 0)), _line(0), CutOff(), None, ExtReal(2)), R.MONOTONE_FINITE_INF_UNSTABLE),
    _e("left-ray-jump-decreasing", "cor2", "jump", LEFT_RAY,
       Proper(_pts((1, -1)), _line(-1), CutOff(), None, ExtReal(5)), R.MANY_DOM_NOT_NONDECREASING),
    _e("open-left-ray-decreasing", "cor2", "monotone", OPEN_LEFT_RAY,
       Proper(_pts((1, -1)), _line(-1)), R.MANY_DOM_NOT_NONDECREASING),
    # right ray [0, +inf)
    _e("right-ray-empty", "cor3", "empty", RIGHT_RAY, EmptyDom(), R.EMPTY_DOM_UNSTABLE),
    _e("right-ray-singleton", "cor3", "singleton", RIGHT_RAY, Proper(_pts((0, 2))),
       R.SINGLETON_DOM_FINITE_INF_UNSTABLE),
    _e("right-ray-floor", "cor3", "monotone", RIGHT_RAY, Proper(_pts((0, 1), (1, 0)), CutOff(), _ray(0)),
       R.MONOTONE_FINITE_INF_UNSTABLE),
    _e("right-ray-increasing", "cor3", "monotone", RIGHT_RAY, Proper(_pts((0, 0)), CutOff(), _ray(1)),
       R.MANY_DOM_NOT_NONINCREASING),
    _e("right-ray-vee", "cor3", "non-monotonic", RIGHT_RAY,
       Proper(_pts((0, 1), (1, 0)), CutOff(), _ray(1)), R.MANY_DOM_NOT_NONINCREASING),
    _e("right-ray-negation", "cor3", "tail", RIGHT_RAY, Proper(_pts((0, 0)), CutOff(), _ray(-1)),
       R.INF_IS_MINUS_INFINITY),
    _e("right-ray-improper", "cor3", "improper", RIGHT_RAY,
       Improper(Interval.open(2, POS_INF), ExtReal(0), POS_INF), R.INF_IS_MINUS_INFINITY),
    _e("right-ray-jump-flat", "cor3", "jump", RIGHT_RAY,
       Proper(_pts((0, 0)), CutOff(), _ray(0), ExtReal(1), None), R.MONOTONE_FINITE_INF_UNSTABLE),
    _e("right-ray-jump-increasing", "cor3", "jump", RIGHT_RAY,
       Proper(_pts((0, 0)), CutOff(), _ray(1), ExtReal(3), None), R.MANY_DOM_NOT_NONINCREASING),
    _e("open-right-ray-floor", "cor3", "monotone", OPEN_RIGHT_RAY,
       Proper(_pts((0, 1), (1, 0)), CutOff(), _ray(0)), R.MONOTONE_FINITE_INF_UNSTABLE),
]


def stable_members() -> List[SuiteEntry]:
    return [e for e in SUITE if e.stable]


def unstable_members() -> List[SuiteEntry]:
    return [e for e in SUITE if not e.stable]
