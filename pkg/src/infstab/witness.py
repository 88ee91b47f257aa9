"""Explicit destabilizing sequences for unstable convex functions.

Each :class:`WitnessFamily` is a closed-form sequence ``f_n`` of convex
functions on ``C`` that converges pointwise to the base ``f`` while
``inf_C f_n`` stays a fixed distance away from ``inf_C f``:

===============  ======================================  ====================
kind             member ``f_n(x)``                        used when
===============  ======================================  ====================
LinearDrift      ``s*x + n``                              dom f empty, C unbounded
SteepVee         ``f(x0) - 1 + |1 + s*n*(x - x0)|``       dom f = {x0}
ScaledVee        ``n * |1 + s*n*(x - x0)|``               dom f empty, C bounded
TiltedCopy       ``f(x) + s*x/n``                         f monotone, finite inf
===============  ======================================  ====================

``s`` is the orientation (``tilt_sign``), ``+1`` or ``-1``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence

from . import convexfn as cf
from .convexfn import ConvexFnSpec, PLView
from .extreal import NEG_INF, POS_INF, ExtReal, ext_distance
from .stability import Reason, StabilityVerdict, check

__all__ = [
    "Kind",
    "WitnessFamily",
    "NotUnstable",
    "GridOutsideC",
    "UnsupportedOrientation",
    "generate",
    "member",
    "verify_pointwise",
    "inf_gap",
    "default_grid",
    "doubling_schedule",
]


class NotUnstable(ValueError):
    pass


class GridOutsideC(ValueError):
    pass


class UnsupportedOrientation(ValueError):
    """The requested tilt or vee direction has no room inside ``C``."""


class Kind(enum.Enum):
    LINEAR_DRIFT = "LinearDrift"
    STEEP_VEE = "SteepVee"
    SCALED_VEE = "ScaledVee"
    TILTED_COPY = "TiltedCopy"


def doubling_schedule(n_max: int) -> List[int]:
    sched, n = [], 1
    while n <= n_max:
        sched.append(n)
        n *= 2
    return sched


@dataclass(frozen=True)
class WitnessFamily:
    kind: Kind
    base: ConvexFnSpec
    tilt_sign: int = 1
    anchor_x0: Optional[Fraction] = None
    anchor_value: Optional[Fraction] = None

    def _vertex(self, n: int) -> Fraction:
        return self.anchor_x0 - Fraction(self.tilt_sign, n)

    def member(self, n: int) -> ConvexFnSpec:
        if n < 1:
            raise ValueError("n must be a positive integer")
        s = self.tilt_sign
        c = self.base.domain
        if self.kind is Kind.LINEAR_DRIFT:
            return cf.restrict(PLView(((Fraction(0), Fraction(n)),), Fraction(s), Fraction(s)), c)
        if self.kind is Kind.STEEP_VEE:
            vee = PLView(((self._vertex(n), self.anchor_value - 1),), Fraction(-n), Fraction(n))
            return cf.restrict(vee, c)
        if self.kind is Kind.SCALED_VEE:
            vee = PLView(((self._vertex(n), Fraction(0)),), Fraction(-n * n), Fraction(n * n))
            return cf.restrict(vee, c)
        tilt = PLView(((Fraction(0), Fraction(0)),), Fraction(s), Fraction(s))
        return cf.add_pl(self.base, tilt, Fraction(1, n))

    def closed_form(self, x, n: int) -> ExtReal:
        """``f_n(x)`` straight from the family's formula."""
        x, s = Fraction(x), self.tilt_sign
        if self.kind is Kind.LINEAR_DRIFT:
            return ExtReal(s * x + n)
        if self.kind is Kind.STEEP_VEE:
            return ExtReal(self.anchor_value - 1 + abs(1 + s * n * (x - self.anchor_x0)))
        if self.kind is Kind.SCALED_VEE:
            return ExtReal(n * abs(1 + s * n * (x - self.anchor_x0)))
        return cf.eval_at(self.base, x) + ExtReal(Fraction(s * x, n))

    def limit(self, x) -> ExtReal:
        """Symbolic ``lim_n f_n(x)``."""
        x = Fraction(x)
        if self.kind is Kind.STEEP_VEE and x == self.anchor_x0:
            return ExtReal(self.anchor_value)
        if self.kind is Kind.TILTED_COPY:
            return cf.eval_at(self.base, x)
        return POS_INF

    def growth(self, x):
        """``(power, coefficient)`` of the dominant term in ``n``.

        ``None`` when the limit is finite.
        """
        x = Fraction(x)
        if self.kind is Kind.LINEAR_DRIFT:
            return 1, Fraction(1)
        if self.kind is Kind.STEEP_VEE:
            d = x - self.anchor_x0
            return None if d == 0 else (1, abs(d))
        if self.kind is Kind.SCALED_VEE:
            d = x - self.anchor_x0
            return (1, Fraction(1)) if d == 0 else (2, abs(d))
        return None

    @property
    def n_min(self) -> int:
        """Smallest ``n`` from which the declared infimum holds."""
        if self.kind not in (Kind.STEEP_VEE, Kind.SCALED_VEE):
            return 1
        c = self.base.domain
        end = c.lo if self.tilt_sign > 0 else c.hi
        if not end.is_finite:
            return 1
        # a vertex on an excluded end still gives the infimum as a limit
        room = abs(self.anchor_x0 - end.value)
        return max(math.ceil(1 / room), 1)

    @property
    def declared_inf(self) -> ExtReal:
        if self.kind is Kind.STEEP_VEE:
            return ExtReal(self.anchor_value - 1)
        if self.kind is Kind.SCALED_VEE:
            return ExtReal(0)
        return NEG_INF

    @property
    def declared_gap(self) -> ExtReal:
        return ExtReal(1) if self.kind is Kind.STEEP_VEE else POS_INF

    def flipped(self) -> "WitnessFamily":
        """The same construction for the mirror image of the base."""
        return WitnessFamily(
            self.kind,
            cf.flip(self.base),
            -self.tilt_sign,
            None if self.anchor_x0 is None else -self.anchor_x0,
            self.anchor_value,
        )


def member(family: WitnessFamily, n: int) -> ConvexFnSpec:
    return family.member(n)


def generate(
    spec: ConvexFnSpec,
    verdict: Optional[StabilityVerdict] = None,
    orientation: Optional[int] = None,
) -> WitnessFamily:
    """Build the destabilizing family for an unstable ``spec``.

    ``orientation`` forces the tilt/vee direction when more than one works.
    """
    if verdict is None:
        verdict = check(spec)
    if verdict.stable:
        raise NotUnstable(f"spec is stable ({verdict.reason.value}); no witness exists")
    if orientation not in (None, 1, -1):
        raise ValueError("orientation must be +1 or -1")
    c = spec.domain

    if verdict.reason is Reason.EMPTY_DOM_UNSTABLE:
        if c.is_bounded:
            mid = (c.lo.value + c.hi.value) / 2
            return WitnessFamily(Kind.SCALED_VEE, spec, orientation or 1, mid)
        allowed = [s for s, ok in ((1, c.lo.is_neg_inf), (-1, c.hi.is_pos_inf)) if ok]
        return WitnessFamily(Kind.LINEAR_DRIFT, spec, _pick(orientation, allowed))

    if verdict.reason is Reason.SINGLETON_DOM_FINITE_INF_UNSTABLE:
        x0 = cf.card_dom(spec).x0
        f0 = cf.eval_at(spec, x0).value
        # +1 opens the vee toward c_min, -1 toward c_max.
        allowed = [s for s, ok in ((1, c.lo < x0), (-1, c.hi > x0)) if ok]
        return WitnessFamily(Kind.STEEP_VEE, spec, _pick(orientation, allowed), x0, f0)

    mono = cf.monotonicity_class(spec)
    allowed = []
    if mono.nondecreasing and c.lo.is_neg_inf:
        allowed.append(1)
    if mono.nonincreasing and c.hi.is_pos_inf:
        allowed.append(-1)
    return WitnessFamily(Kind.TILTED_COPY, spec, _pick(orientation, allowed))


def _pick(orientation: Optional[int], allowed: Sequence[int]) -> int:
    if not allowed:
        raise UnsupportedOrientation("no orientation has room inside C")
    if orientation is None:
        return allowed[0]
    if orientation not in allowed:
        raise UnsupportedOrientation(f"orientation {orientation:+d} has no room inside C")
    return orientation


# -- certification --------------------------------------------------------


def default_grid(spec: ConvexFnSpec, count: int = 257, extra: Iterable = ()) -> List[Fraction]:
    """``count`` distinct points of ``C``: critical points, ``extra``, then uniform fill."""
    c = spec.domain
    required = {p for p in cf.critical_points(spec) if c.contains(p)}
    required.update(Fraction(p) for p in extra if c.contains(Fraction(p)))
    anchors = sorted(required) or [Fraction(0)]
    lo = c.lo.value if c.lo.is_finite else min(anchors) - 4
    hi = c.hi.value if c.hi.is_finite else max(anchors) + 4
    need = count - len(required)
    if need < 0:
        return sorted(required)[:count]
    m = count + len(required) + 1
    fill = [lo + (hi - lo) * k / (m + 1) for k in range(1, m + 1)]
    fill = [p for p in fill if p not in required and c.contains(p)]
    step = len(fill) / need if need else 1
    chosen = [fill[int(i * step)] for i in range(need)]
    return sorted(required.union(chosen))


@dataclass
class PointwiseReport:
    ok: bool
    rows: List[dict] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "converged_points": sum(r["ok"] for r in self.rows),
            "points": self.rows,
        }


def verify_pointwise(
    family: WitnessFamily, grid: Sequence, n_schedule: Sequence[int]
) -> PointwiseReport:
    """Check ``f_n -> f`` at every grid point along ``n_schedule``.

    Three things are checked exactly: member values match the closed form,
    the symbolic limit equals ``f(x)``, and the values move toward the limit
    (dominant term with positive coefficient for ``+inf`` limits, the
    declared gap for finite limits).
    """
    base = family.base
    sched = sorted(n_schedule)
    members = {n: family.member(n) for n in sched}
    rows, all_ok = [], True
    for x in grid:
        x = Fraction(x)
        if not base.domain.contains(x):
            raise GridOutsideC(f"{x} is not in {base.domain}")
        values = [cf.eval_at(members[n], x) for n in sched]
        formula_ok = all(v == family.closed_form(x, n) for v, n in zip(values, sched))
        lim = family.limit(x)
        target = cf.eval_at(base, x)
        ok = formula_ok and lim == target
        if lim.is_pos_inf and all(v.is_pos_inf for v in values):
            certificate = "identically +inf"
        elif lim.is_pos_inf:
            g = family.growth(x)
            grows = g is not None and g[1] > 0
            # once the sign inside |.| is fixed the values only increase
            tail = [v for v, n in zip(values, sched) if n * g[1] > 1] if grows else []
            ok = ok and grows and all(a < b for a, b in zip(tail, tail[1:]))
            certificate = f"dominant term {g[1]}*n^{g[0]}" if grows else "no growth"
        else:
            gaps = [ext_distance(v, target) for v in values]
            declared = [_declared_pointwise_gap(family, x, n) for n in sched]
            ok = ok and gaps == declared and all(a >= b for a, b in zip(gaps, gaps[1:]))
            certificate = "exact gap " + ", ".join(map(str, gaps[:3]))
        all_ok = all_ok and ok
        rows.append(
            {
                "x": str(x),
                "values": [str(v) for v in values],
                "limit": str(lim),
                "f": str(target),
                "certificate": certificate,
                "ok": ok,
            }
        )
    return PointwiseReport(all_ok, rows)


def _declared_pointwise_gap(family: WitnessFamily, x: Fraction, n: int) -> ExtReal:
    if family.kind is Kind.TILTED_COPY:
        if cf.eval_at(family.base, x).is_finite:
            return ExtReal(abs(x) / n)
        return ExtReal(0)
    return ExtReal(0)


@dataclass
class InfGapReport:
    kind: Kind
    base_inf: ExtReal
    declared_inf: ExtReal
    declared_gap: ExtReal
    n_min: int
    rows: List[dict]
    ok: bool

    def to_json(self) -> dict:
        return {
            "kind": self.kind.value,
            "base_inf": str(self.base_inf),
            "declared_inf": str(self.declared_inf),
            "declared_gap": str(self.declared_gap),
            "n_min": self.n_min,
            "ok": self.ok,
            "rows": self.rows,
        }


def inf_gap(family: WitnessFamily, n_schedule: Sequence[int]) -> InfGapReport:
    """Tabulate ``inf_C f_n`` and confirm it stays off ``inf_C f`` by the declared gap."""
    base_inf = cf.infimum(family.base)
    rows, ok = [], True
    for n in sorted(n_schedule):
        val = cf.infimum(family.member(n))
        settled = n >= family.n_min
        if settled:
            ok = ok and val == family.declared_inf
            ok = ok and ext_distance(val, base_inf) == family.declared_gap
        rows.append({"n": n, "inf": str(val), "settled": settled})
    return InfGapReport(
        family.kind,
        base_inf,
        family.declared_inf,
        family.declared_gap,
        family.n_min,
        rows,
        ok,
    )
