"""Decide infimum-stability of a convex function under pointwise convergence.

The four endpoint-finiteness cases collapse into one predicate.  ``f`` is
stable exactly when ``inf_C f = -inf``, or ``dom f`` has more than one point
and ``f`` is neither nondecreasing with ``C`` unbounded below nor
nonincreasing with ``C`` unbounded above.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from . import convexfn as cf
from .convexfn import ConvexFnSpec

__all__ = [
    "Reason",
    "StabilityVerdict",
    "PreconditionViolated",
    "specialization",
    "check",
    "check_bounded_real_valued",
]


class PreconditionViolated(ValueError):
    pass


class Reason(enum.Enum):
    INF_IS_MINUS_INFINITY = "InfIsMinusInfinity"
    NON_MONOTONIC_MANY_DOM = "NonMonotonicManyDom"
    MANY_DOM_BOUNDED_C = "ManyDomBoundedC"
    MANY_DOM_NOT_NONDECREASING = "ManyDomNotNondecreasing"
    MANY_DOM_NOT_NONINCREASING = "ManyDomNotNonincreasing"
    EMPTY_DOM_UNSTABLE = "EmptyDomUnstable"
    SINGLETON_DOM_FINITE_INF_UNSTABLE = "SingletonDomFiniteInfUnstable"
    MONOTONE_FINITE_INF_UNSTABLE = "MonotoneFiniteInfUnstable"

    @property
    def stable(self) -> bool:
        return self in _STABLE_REASONS


_STABLE_REASONS = frozenset(
    {
        Reason.INF_IS_MINUS_INFINITY,
        Reason.NON_MONOTONIC_MANY_DOM,
        Reason.MANY_DOM_BOUNDED_C,
        Reason.MANY_DOM_NOT_NONDECREASING,
        Reason.MANY_DOM_NOT_NONINCREASING,
    }
)


@dataclass(frozen=True)
class StabilityVerdict:
    stable: bool
    reason: Reason
    specialization: str

    def __post_init__(self):
        if self.stable != self.reason.stable:
            raise ValueError(f"reason {self.reason.value} contradicts stable={self.stable}")

    def to_json(self) -> dict:
        return {
            "stable": self.stable,
            "reason": self.reason.value,
            "specialization": self.specialization,
        }


def specialization(domain: cf.Interval) -> str:
    """Which of the four endpoint cases ``C`` falls into."""
    lo_inf, hi_inf = domain.lo.is_neg_inf, domain.hi.is_pos_inf
    if lo_inf and hi_inf:
        return "theorem1"
    if not lo_inf and not hi_inf:
        return "cor1"
    if lo_inf:
        return "cor2"
    return "cor3"


def check(spec: ConvexFnSpec) -> StabilityVerdict:
    case = specialization(spec.domain)

    def verdict(reason: Reason) -> StabilityVerdict:
        return StabilityVerdict(reason.stable, reason, case)

    if cf.infimum(spec).is_neg_inf:
        return verdict(Reason.INF_IS_MINUS_INFINITY)
    card = cf.card_dom(spec)
    if card.kind == "zero":
        return verdict(Reason.EMPTY_DOM_UNSTABLE)
    if card.kind == "one":
        return verdict(Reason.SINGLETON_DOM_FINITE_INF_UNSTABLE)

    mono = cf.monotonicity_class(spec)
    # A finite endpoint forgives monotonicity in the direction pointing at it.
    blocked_down = spec.domain.lo.is_neg_inf and mono.nondecreasing
    blocked_up = spec.domain.hi.is_pos_inf and mono.nonincreasing
    if blocked_down or blocked_up:
        return verdict(Reason.MONOTONE_FINITE_INF_UNSTABLE)
    return verdict(
        {
            "theorem1": Reason.NON_MONOTONIC_MANY_DOM,
            "cor1": Reason.MANY_DOM_BOUNDED_C,
            "cor2": Reason.MANY_DOM_NOT_NONDECREASING,
            "cor3": Reason.MANY_DOM_NOT_NONINCREASING,
        }[case]
    )


def check_bounded_real_valued(spec: ConvexFnSpec) -> StabilityVerdict:
    """Shortcut for bounded ``C`` and ``f > -inf``: stable iff ``dom f`` has many points."""
    if not spec.domain.is_bounded:
        raise PreconditionViolated(f"C must be bounded, got {spec.domain}")
    if isinstance(spec.body, cf.Improper):
        raise PreconditionViolated("f must stay above -inf on C")
    card = cf.card_dom(spec).kind
    reason = {
        "zero": Reason.EMPTY_DOM_UNSTABLE,
        "one": Reason.SINGLETON_DOM_FINITE_INF_UNSTABLE,
        "many": Reason.MANY_DOM_BOUNDED_C,
    }[card]
    return StabilityVerdict(reason.stable, reason, "cor1")
