"""Exact infimum-stability analysis for convex functions of one real variable.

Functions are piecewise-linear over rationals with extended-real values.
The main entry points are :func:`check` (the verdict), :func:`generate`
(a destabilizing sequence for unstable inputs), :func:`conjugate` and the
perturbation harness in :mod:`infstab.harness`.
"""

from .convexfn import (
    REAL_LINE,
    ConvexFnSpec,
    CutOff,
    EmptyDom,
    Improper,
    Interval,
    Proper,
    Slope,
    ValidationError,
    card_dom,
    eval_at,
    extend_to_line,
    infimum,
    monotonicity_class,
    validate,
)
from .extreal import NEG_INF, POS_INF, ExtReal, OppositeInfinities
from .fenchel import conjugate
from .specio import ParseError, dump_spec, load_spec, parse_spec
from .stability import Reason, StabilityVerdict, check, check_bounded_real_valued
from .witness import generate

__version__ = "0.1.0"

__all__ = [
    "REAL_LINE",
    "ConvexFnSpec",
    "CutOff",
    "EmptyDom",
    "Improper",
    "Interval",
    "Proper",
    "Slope",
    "ValidationError",
    "card_dom",
    "eval_at",
    "extend_to_line",
    "infimum",
    "monotonicity_class",
    "validate",
    "NEG_INF",
    "POS_INF",
    "ExtReal",
    "OppositeInfinities",
    "conjugate",
    "ParseError",
    "dump_spec",
    "load_spec",
    "parse_spec",
    "Reason",
    "StabilityVerdict",
    "check",
    "check_bounded_real_valued",
    "generate",
]
