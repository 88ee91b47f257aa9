import random
import sys
from fractions import Fraction
from itertools import combinations

from hypothesis import HealthCheck, settings, strategies as st

from infstab.convexfn import EmptyDom, Improper, Proper, Slope
from infstab.extreal import NEG_INF, POS_INF, ExtReal
from infstab.harness import CASES, random_spec

settings.register_profile(
    "default", max_examples=150, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


seeds = st.integers(min_value=0, max_value=2**32 - 1)
cases = st.sampled_from(CASES)


@st.composite
def specs(draw, case=None, kind=None):
    seed = draw(seeds)
    return random_spec(random.Random(seed), case or draw(cases), kind)


def raw_eval(spec, x):
    """Value from the raw spec fields; shares no code with the library evaluator."""
    x = Fraction(x)
    body = spec.body
    if isinstance(body, EmptyDom):
        return POS_INF
    if isinstance(body, Improper):
        r = body.minus_inf
        lo, hi = r.lo, r.hi
        if (lo < ExtReal(x) < hi) or (r.lo_closed and lo == ExtReal(x)) or (r.hi_closed and hi == ExtReal(x)):
            return NEG_INF
        if lo == ExtReal(x):
            return body.left_edge_value
        if hi == ExtReal(x):
            return body.right_edge_value
        return POS_INF
    bps = list(body.breakpoints)
    segs = []  # (a, b, value_fn) with a, b extended reals
    lt, rt = body.left_tail, body.right_tail
    x0, v0 = bps[0]
    xn, vn = bps[-1]
    left_end, right_end = ExtReal(x0), ExtReal(xn)
    if isinstance(lt, Slope):
        left_end = lt.extent
        segs.append((lt.extent, ExtReal(x0), lambda t, s=lt.slope: v0 + s * (t - x0)))
    for (xa, va), (xb, vb) in zip(bps, bps[1:]):
        segs.append((ExtReal(xa), ExtReal(xb), lambda t, xa=xa, va=va, xb=xb, vb=vb: va + (vb - va) * (t - xa) / (xb - xa)))
    if isinstance(rt, Slope):
        right_end = rt.extent
        segs.append((ExtReal(xn), rt.extent, lambda t, s=rt.slope: vn + s * (t - xn)))
    X = ExtReal(x)
    if X < left_end or X > right_end:
        return POS_INF
    if X == left_end and body.left_endpoint_override is not None:
        return body.left_endpoint_override
    if X == right_end and body.right_endpoint_override is not None:
        return body.right_endpoint_override
    if not segs:
        return ExtReal(v0)
    for a, b, fn in segs:
        if a <= X <= b:
            return ExtReal(fn(x))
    raise AssertionError("unreachable")


def sample_points(spec, extra=()):
    """Points of C around every number appearing in the spec."""
    c = spec.domain
    marks = {Fraction(0), Fraction(1), Fraction(-1)}
    body = spec.body
    for e in (c.lo, c.hi):
        if e.is_finite:
            marks.add(e.value)
    if isinstance(body, Improper):
        for e in (body.minus_inf.lo, body.minus_inf.hi):
            if e.is_finite:
                marks.add(e.value)
    if isinstance(body, Proper):
        marks.update(x for x, _ in body.breakpoints)
        for t in (body.left_tail, body.right_tail):
            if isinstance(t, Slope) and t.extent.is_finite:
                marks.add(t.extent.value)
    marks.update(Fraction(e) for e in extra)
    base = sorted(marks)
    pts = set(base)
    for a, b in zip(base, base[1:]):
        pts.update((a + (b - a) / 3, (a + b) / 2, a + 2 * (b - a) / 3))
    pts.update((base[0] - 1, base[0] - 7, base[-1] + 1, base[-1] + 7))
    return sorted(p for p in pts if c.contains(p))


LAMBDAS = (Fraction(1, 4), Fraction(1, 3), Fraction(1, 2), Fraction(3, 4))


def convexity_counterexample(f, points):
    """First (x, y, lam) breaking f((1-lam)x + lam y) <= (1-lam)f(x) + lam f(y), or None.

    Pairs with values of opposite infinite sign impose nothing.
    """
    vals = {p: f(p) for p in points}
    for x, y in combinations(points, 2):
        fx, fy = vals[x], vals[y]
        if (fx.is_pos_inf and fy.is_neg_inf) or (fx.is_neg_inf and fy.is_pos_inf):
            continue
        for lam in LAMBDAS:
            z = (1 - lam) * x + lam * y
            fz = vals[z] if z in vals else f(z)
            if fx.is_neg_inf or fy.is_neg_inf:
                rhs = NEG_INF
            elif fx.is_pos_inf or fy.is_pos_inf:
                rhs = POS_INF
            else:
                rhs = ExtReal((1 - lam) * fx.value + lam * fy.value)
            if fz > rhs:
                return x, y, lam
    return None


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
