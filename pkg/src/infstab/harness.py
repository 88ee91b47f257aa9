"""Stress tests for the stable direction, plus random specs and an infimum oracle.

A :class:`PerturbationFamily` is a seeded sequence of convex ``f_n`` that
converges pointwise to a stable base ``f``.  :func:`run_convergence_trial`
checks that ``inf f_n`` reaches ``inf f`` at the rate the family promises
and raises :class:`StabilityContractViolated` otherwise.
"""

from __future__ import annotations

import enum
import math
import random
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from . import convexfn as cf
from .convexfn import (
    REAL_LINE,
    ConvexFnSpec,
    CutOff,
    EmptyDom,
    Improper,
    Interval,
    PLView,
    Proper,
    Slope,
    ValidationError,
)
from .extreal import NEG_INF, POS_INF, ExtReal, ext_distance
from .stability import PreconditionViolated, check

__all__ = [
    "PerturbKind",
    "PerturbationFamily",
    "JitterBrokeConvexity",
    "StabilityContractViolated",
    "TrialReport",
    "perturb_member",
    "run_convergence_trial",
    "brute_force_inf_oracle",
    "random_spec",
    "random_finite_pl",
    "CASES",
]

CASES = ("theorem1", "cor1", "cor2", "cor3")

# Bounded retries keep the jitter backoff finite; 2**-256 is far below any
# slope gap produced by rationals with small denominators.
_MAX_BACKOFF = 256


class JitterBrokeConvexity(ValidationError):
    pass


class StabilityContractViolated(AssertionError):
    pass


class PerturbKind(enum.Enum):
    ADDITIVE_SHRINK = "AdditiveShrink"
    BREAKPOINT_JITTER = "BreakpointJitter"
    TAIL_STEEPEN = "TailSteepen"


def random_finite_pl(rng: random.Random) -> PLView:
    """A convex piecewise-linear function, finite on the whole line."""
    k = rng.randint(1, 3)
    xs = sorted(rng.sample(range(-3, 4), k))
    slopes = sorted(rng.randint(-2, 2) for _ in range(k + 1))
    v = Fraction(rng.randint(-3, 3))
    knots = [(Fraction(xs[0]), v)]
    for x_prev, x, s in zip(xs, xs[1:], slopes[1:]):
        v += s * (x - x_prev)
        knots.append((Fraction(x), v))
    return PLView(tuple(knots), Fraction(slopes[0]), Fraction(slopes[-1]))


@dataclass(frozen=True)
class PerturbationFamily:
    kind: PerturbKind
    seed: int
    base: ConvexFnSpec
    g: Optional[PLView] = None

    def shrink_function(self) -> PLView:
        return self.g if self.g is not None else random_finite_pl(random.Random(self.seed))

    def jitter_weights(self, count: int) -> Tuple[Fraction, ...]:
        rng = random.Random(self.seed)
        return tuple(Fraction(rng.randint(0, 8), 8) for _ in range(count))

    def member(self, n: int) -> ConvexFnSpec:
        return perturb_member(self, n)

    # -- declared rates -------------------------------------------------

    def bound_constant(self) -> Fraction:
        """``K`` with ``|inf f_n - inf f| <= K/n`` once the family has settled."""
        if self.kind is PerturbKind.BREAKPOINT_JITTER:
            return Fraction(1)
        body = self.base.body
        if self.kind is PerturbKind.TAIL_STEEPEN:
            if not isinstance(body, Proper):
                return Fraction(0)
            k = Fraction(0)
            lt, rt = body.left_tail, body.right_tail
            if isinstance(lt, Slope) and lt.extent.is_finite:
                k = max(k, body.breakpoints[0][0] - lt.extent.value)
            if isinstance(rt, Slope) and rt.extent.is_finite:
                k = max(k, rt.extent.value - body.breakpoints[-1][0])
            return k
        lim = _limiting_argmin(self.base)
        if lim is None:
            return Fraction(0)
        p, q = lim
        g = self.shrink_function()
        pts = [p, q] + [x for x in g.xs if p < x < q]
        return max(abs(g.value(x)) for x in pts)

    def settle_index(self) -> int:
        """First ``n`` from which the declared rate (or escape to -inf) holds."""
        body = self.base.body
        if self.kind is PerturbKind.BREAKPOINT_JITTER or not isinstance(body, Proper):
            return 1
        v = cf.view(body)
        base_inf = cf.infimum(self.base)
        if base_inf.is_neg_inf:
            if self.kind is PerturbKind.ADDITIVE_SHRINK:
                g = self.shrink_function()
                left_push, right_push = g.left_slope, -g.right_slope
            else:
                left_push = right_push = Fraction(-1)
            # (s, push): the side keeps escaping once n*s + push > 0
            sides = []
            if v.left_slope is not None and v.left_slope > 0:
                sides.append((v.left_slope, left_push))
            if v.right_slope is not None and v.right_slope < 0:
                sides.append((-v.right_slope, right_push))
            return min(_first_n_above(-push / s) for s, push in sides)
        if self.kind is PerturbKind.TAIL_STEEPEN:
            return 1
        lim = _limiting_argmin(self.base)
        if lim is None:
            return 1
        g = self.shrink_function()
        big = max(abs(s) for s in g.slope_sequence())
        if big == 0:
            return 1
        p, q = lim
        rates = []
        for side_slope in (_slope_left_of(v, p), _slope_right_of(v, q)):
            if side_slope is not None:
                rates.append(abs(side_slope))
        if not rates:
            return 1
        return max(1, math.ceil(big / min(rates)))


def _first_n_above(bound: Fraction) -> int:
    """Smallest positive integer strictly greater than ``bound``."""
    return max(1, math.floor(bound) + 1)


def _limiting_argmin(spec: ConvexFnSpec) -> Optional[Tuple[Fraction, Fraction]]:
    """``[p, q]``: where the closure of ``f`` attains a finite infimum."""
    body = spec.body
    if not isinstance(body, Proper) or cf.card_dom(spec).kind != "many":
        return None
    v = cf.view(body)
    if (v.left_slope is not None and v.left_slope >= 0) or (
        v.right_slope is not None and v.right_slope <= 0
    ):
        return None
    m = min(val for _, val in v.knots)
    hits = [x for x, val in v.knots if val == m]
    return hits[0], hits[-1]


def _slope_left_of(v: PLView, p: Fraction) -> Optional[Fraction]:
    xs = v.xs
    i = xs.index(p)
    if i == 0:
        return v.left_slope
    return (v.knots[i][1] - v.knots[i - 1][1]) / (xs[i] - xs[i - 1])


def _slope_right_of(v: PLView, q: Fraction) -> Optional[Fraction]:
    xs = v.xs
    i = xs.index(q)
    if i == len(xs) - 1:
        return v.right_slope
    return (v.knots[i + 1][1] - v.knots[i][1]) / (xs[i + 1] - xs[i])


# -- members --------------------------------------------------------------


def _jittered(base: ConvexFnSpec, weights, eps: Fraction) -> ConvexFnSpec:
    v = cf.view(base.body)
    knots = tuple((x, val + w * eps) for (x, val), w in zip(v.knots, weights))
    out = cf.from_view(base.domain, replace(v, knots=knots))
    try:
        cf.validate(out)
    except ValidationError as exc:
        raise JitterBrokeConvexity(str(exc)) from None
    return out


def _steepened(base: ConvexFnSpec, n: int) -> ConvexFnSpec:
    body = base.body
    h = Fraction(1, n)
    x0, xn = body.breakpoints[0][0], body.breakpoints[-1][0]
    lt, rt = body.left_tail, body.right_tail
    lo_over, hi_over = body.left_endpoint_override, body.right_endpoint_override
    if isinstance(lt, Slope):
        if lt.extent.is_finite and lo_over is not None:
            lo_over = lo_over + ExtReal((x0 - lt.extent.value) * h)
        lt = Slope(lt.slope - h, lt.extent)
    if isinstance(rt, Slope):
        if rt.extent.is_finite and hi_over is not None:
            hi_over = hi_over + ExtReal((rt.extent.value - xn) * h)
        rt = Slope(rt.slope + h, rt.extent)
    out = ConvexFnSpec(
        base.domain,
        replace(body, left_tail=lt, right_tail=rt,
                left_endpoint_override=lo_over, right_endpoint_override=hi_over),
    )
    cf.validate(out)
    return out


def perturb_member(family: PerturbationFamily, n: int) -> ConvexFnSpec:
    if n < 1:
        raise ValueError("n must be a positive integer")
    base = family.base
    if family.kind is PerturbKind.ADDITIVE_SHRINK:
        out = cf.add_pl(base, family.shrink_function(), Fraction(1, n))
        cf.validate(out)
        return out
    if not isinstance(base.body, Proper):
        return base
    if family.kind is PerturbKind.TAIL_STEEPEN:
        return _steepened(base, n)
    weights = family.jitter_weights(len(cf.view(base.body).knots))
    for k in range(_MAX_BACKOFF):
        try:
            return _jittered(base, weights, Fraction(1, n * 2**k))
        except JitterBrokeConvexity:
            continue
    # Collinear knots with unequal weights admit no positive jitter;
    # a uniform lift always does.
    return _jittered(base, [weights[0]] * len(weights), Fraction(1, n))


# -- trials ---------------------------------------------------------------


@dataclass
class TrialReport:
    kind: PerturbKind
    seed: int
    base_inf: ExtReal
    bound_constant: Fraction
    settle_index: int
    rows: List[dict] = field(default_factory=list)
    ok: bool = True
    failure: str = ""

    def to_json(self) -> dict:
        return {
            "kind": self.kind.value,
            "seed": self.seed,
            "base_inf": str(self.base_inf),
            "K": str(self.bound_constant),
            "settle_index": self.settle_index,
            "ok": self.ok,
            "failure": self.failure,
            "rows": self.rows,
        }


def run_convergence_trial(
    family: PerturbationFamily, n_schedule: Sequence[int], raise_on_failure: bool = True
) -> TrialReport:
    """Tabulate ``inf f_n`` along ``n_schedule`` and enforce the family's rate."""
    base = family.base
    if not check(base).stable:
        raise PreconditionViolated("convergence trials need a stable base; see the witness module")
    base_inf = cf.infimum(base)
    k_const = family.bound_constant()
    n_star = family.settle_index()
    report = TrialReport(family.kind, family.seed, base_inf, k_const, n_star)
    settled = []
    for n in sorted(n_schedule):
        inf_n = cf.infimum(family.member(n))
        gap = ext_distance(inf_n, base_inf)
        report.rows.append({"n": n, "inf": str(inf_n), "gap": str(gap), "settled": n >= n_star})
        if n >= n_star:
            settled.append((n, inf_n, gap))

    def fail(msg: str):
        report.ok, report.failure = False, msg

    if not settled:
        fail(f"schedule ends before the settle index {n_star}")
    elif base_inf.is_neg_inf:
        bad = [n for n, inf_n, _ in settled if not inf_n.is_neg_inf]
        if bad:
            fail(f"inf f_n is finite at n={bad[0]} although inf f = -inf")
    else:
        for (n0, _, g0), (n1, _, g1) in zip(settled, settled[1:]):
            if g1 > g0:
                fail(f"gap grew from {g0} to {g1} between n={n0} and n={n1}")
                break
        for n, _, gap in settled:
            if gap > ExtReal(k_const / n):
                fail(f"gap {gap} exceeds K/n = {k_const / n} at n={n}")
                break
        if report.ok and family.kind is PerturbKind.ADDITIVE_SHRINK:
            scaled = {gap.value * n for n, _, gap in settled}
            if len(scaled) != 1:
                fail("gap does not follow an exact c/n law")
    if not report.ok and raise_on_failure:
        raise StabilityContractViolated(report.failure)
    return report


# -- independent infimum oracle -----------------------------------------


def brute_force_inf_oracle(spec: ConvexFnSpec) -> ExtReal:
    """Infimum by enumerating candidate values straight from the spec fields."""
    c, body = spec.domain, spec.body
    if isinstance(body, EmptyDom):
        return POS_INF
    if isinstance(body, Improper):
        r = body.minus_inf
        if r.lo != r.hi or c.contains(r.lo):
            return NEG_INF
        return POS_INF
    pts = [tuple(bp) for bp in body.breakpoints]
    lt, rt = body.left_tail, body.right_tail
    unbounded_left = isinstance(lt, Slope) and lt.extent.is_neg_inf
    unbounded_right = isinstance(rt, Slope) and rt.extent.is_pos_inf
    if unbounded_left and lt.slope > 0:
        return NEG_INF
    if unbounded_right and rt.slope < 0:
        return NEG_INF
    if isinstance(lt, Slope) and lt.extent.is_finite:
        e = lt.extent.value
        pts.insert(0, (e, pts[0][1] + lt.slope * (e - pts[0][0])))
    if isinstance(rt, Slope) and rt.extent.is_finite:
        e = rt.extent.value
        pts.append((e, pts[-1][1] + rt.slope * (e - pts[-1][0])))

    candidates: List[ExtReal] = []
    if len(pts) == 1 and not unbounded_left and not unbounded_right:
        x0, v0 = pts[0]
        if not c.contains(x0):
            return POS_INF
        override = body.left_endpoint_override or body.right_endpoint_override
        return override if override is not None else ExtReal(v0)
    # interior exists: every knot is attained or a one-sided limit
    for (xa, va), (xb, vb) in zip(pts, pts[1:]):
        candidates += [ExtReal(va), ExtReal(vb), ExtReal((va + vb) / 2)]
    if len(pts) == 1:
        candidates.append(ExtReal(pts[0][1]))
    if unbounded_left:
        candidates.append(ExtReal(pts[0][1] - lt.slope))
    if unbounded_right:
        candidates.append(ExtReal(pts[-1][1] + rt.slope))
    return min(candidates)


# -- random specs ---------------------------------------------------------


def _inner_points(rng: random.Random, lo: Fraction, hi: Fraction, k: int) -> List[Fraction]:
    grid = [lo + (hi - lo) * j / 12 for j in range(1, 12)]
    return sorted(rng.sample(grid, k))


def random_domain(rng: random.Random, case: str) -> Interval:
    if case == "theorem1":
        return REAL_LINE
    a = Fraction(rng.randint(-6, 4), 2)
    b = a + Fraction(rng.randint(1, 6), 2)
    if case == "cor1":
        return Interval(ExtReal(a), rng.random() < 0.5, ExtReal(b), rng.random() < 0.5)
    if case == "cor2":
        return Interval(NEG_INF, False, ExtReal(b), rng.random() < 0.5)
    if case == "cor3":
        return Interval(ExtReal(a), rng.random() < 0.5, POS_INF, False)
    raise ValueError(f"unknown case {case!r}")


def _window(c: Interval) -> Tuple[Fraction, Fraction]:
    lo = c.lo.value if c.lo.is_finite else (c.hi.value - 6 if c.hi.is_finite else Fraction(-4))
    hi = c.hi.value if c.hi.is_finite else (lo + 8)
    return lo, hi


def _random_improper(rng: random.Random, c: Interval) -> Improper:
    lo_w, hi_w = _window(c)
    if rng.random() < 0.15:
        x = _inner_points(rng, lo_w, hi_w, 1)[0]
        return Improper(Interval.point(x))
    p, q = _inner_points(rng, lo_w, hi_w, 2)
    lo = c.lo if rng.random() < 0.3 else ExtReal(p)
    hi = c.hi if rng.random() < 0.3 else ExtReal(q)
    lo_closed = c.contains(lo) and rng.random() < 0.4
    hi_closed = c.contains(hi) and rng.random() < 0.4
    edges = []
    for end, closed in ((lo, lo_closed), (hi, hi_closed)):
        if not closed and c.contains(end) and rng.random() < 0.5:
            edges.append(ExtReal(Fraction(rng.randint(-8, 8), 4)))
        else:
            edges.append(POS_INF)
    return Improper(Interval(lo, lo_closed, hi, hi_closed), edges[0], edges[1])


def _random_slopes(rng: random.Random, count: int) -> List[Fraction]:
    return sorted(Fraction(rng.randint(-9, 9), rng.choice((1, 2, 3))) for _ in range(count))


def _random_proper(rng: random.Random, c: Interval) -> Proper:
    lo_w, hi_w = _window(c)
    if rng.random() < 0.1:
        x = rng.choice([e.value for e in (c.lo, c.hi) if c.contains(e)] + _inner_points(rng, lo_w, hi_w, 1))
        v0 = Fraction(rng.randint(-4, 4))
        over = ExtReal(v0 + rng.randint(1, 4)) if rng.random() < 0.2 else None
        return Proper(((x, v0),), CutOff(), CutOff(), over, None)

    inner = _inner_points(rng, lo_w, hi_w, rng.randint(2, 5))
    left_inf = c.lo.is_neg_inf and rng.random() < 0.6
    right_inf = c.hi.is_pos_inf and rng.random() < 0.6
    xs = inner[:]
    if not left_inf:
        if c.lo.is_finite and rng.random() < 0.5:
            xs[0] = c.lo.value
    else:
        xs = xs[1:]
    if not right_inf:
        if c.hi.is_finite and rng.random() < 0.5:
            xs[-1] = c.hi.value
    elif len(xs) > 1:
        xs = xs[:-1]
    slopes = _random_slopes(rng, len(xs) - 1 + left_inf + right_inf)
    chord = slopes[1:] if left_inf else slopes[:]
    val = Fraction(rng.randint(-8, 8), 2)
    knots = [(xs[0], val)]
    for x_prev, x, s in zip(xs, xs[1:], chord):
        val += s * (x - x_prev)
        knots.append((x, val))
    v = PLView(
        tuple(knots),
        slopes[0] if left_inf else None,
        slopes[-1] if right_inf else None,
    )
    tails = [Slope(v.left_slope, NEG_INF) if left_inf else CutOff(),
             Slope(v.right_slope, POS_INF) if right_inf else CutOff()]
    bps = list(v.knots)
    # finite ends sometimes written as finite-extent tails
    if not left_inf and len(bps) > 2 and rng.random() < 0.3:
        (e, ve), (x1, v1) = bps[0], bps[1]
        tails[0] = Slope((v1 - ve) / (x1 - e), ExtReal(e))
        bps = bps[1:]
    if not right_inf and len(bps) > 2 and rng.random() < 0.3:
        (x1, v1), (e, ve) = bps[-2], bps[-1]
        tails[1] = Slope((ve - v1) / (e - x1), ExtReal(e))
        bps = bps[:-1]
    overrides = []
    for end, limit in ((v.lo, v.knots[0][1]), (v.hi, v.knots[-1][1])):
        if end.is_finite and c.contains(end) and rng.random() < 0.25:
            overrides.append(POS_INF if rng.random() < 0.4 else ExtReal(limit + Fraction(rng.randint(1, 8), 4)))
        else:
            overrides.append(None)
    return Proper(tuple(bps), tails[0], tails[1], overrides[0], overrides[1])


def random_spec(rng: random.Random, case: Optional[str] = None, kind: Optional[str] = None) -> ConvexFnSpec:
    """A validated random spec; ``kind`` is "empty", "improper" or "proper"."""
    case = case or rng.choice(CASES)
    c = random_domain(rng, case)
    if kind is None:
        roll = rng.random()
        kind = "empty" if roll < 0.08 else "improper" if roll < 0.22 else "proper"
    if kind == "empty":
        body = EmptyDom()
    elif kind == "improper":
        body = _random_improper(rng, c)
    else:
        body = _random_proper(rng, c)
    spec = ConvexFnSpec(c, body)
    cf.validate(spec)
    return spec
