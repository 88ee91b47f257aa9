"""The two-dimensional sequence ``f_n(x, y) = n|y + n x|``.

Its pointwise limit is 0 at the origin and ``+inf`` elsewhere, yet the
minimum over the compact segment ``K = [-1, 0] x {1}`` is 0 for every ``n``
(attained at ``x = -1/n``), so the values on ``K`` stay bounded.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List

from .extreal import POS_INF, ExtReal

__all__ = ["R2Point", "r2_eval", "r2_min_on_K", "r2_grid_min_on_K", "r2_limit", "r2_table"]

K_X = (Fraction(-1), Fraction(0))
K_Y = Fraction(1)


@dataclass(frozen=True)
class R2Point:
    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", Fraction(self.x))
        object.__setattr__(self, "y", Fraction(self.y))


def r2_eval(n: int, p: R2Point) -> ExtReal:
    if n < 1:
        raise ValueError("n must be a positive integer")
    return ExtReal(n * abs(p.y + n * p.x))


def r2_min_on_K(n: int) -> ExtReal:
    """``min_K f_n`` from the closed form: ``y + n x`` vanishes at ``x = -1/n``."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    x_star = Fraction(-1, n) * K_Y
    assert K_X[0] <= x_star <= K_X[1]
    return r2_eval(n, R2Point(x_star, K_Y))


def r2_grid_min_on_K(n: int, steps: int = 1000) -> ExtReal:
    """Minimum over the grid ``x = -1 + k/steps`` on ``K`` (an upper bound)."""
    return min(r2_eval(n, R2Point(K_X[0] + Fraction(k, steps), K_Y)) for k in range(steps + 1))


def r2_limit(p: R2Point) -> ExtReal:
    """``lim_n f_n(p)``: 0 at the origin, ``+inf`` elsewhere."""
    if p.x == 0 and p.y == 0:
        return ExtReal(0)
    return POS_INF


def r2_table(n_max: int) -> List[dict]:
    rows = []
    for n in range(1, n_max + 1):
        rows.append(
            {
                "n": n,
                "min_K": str(r2_min_on_K(n)),
                "argmin_x": str(Fraction(-1, n)),
                "f_n(0,0)": str(r2_eval(n, R2Point(0, 0))),
                "f_n(1/2,0)": str(r2_eval(n, R2Point(Fraction(1, 2), 0))),
            }
        )
    return rows
