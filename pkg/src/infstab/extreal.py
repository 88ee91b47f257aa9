"""Extended real numbers over exact rationals.

An :class:`ExtReal` is ``-inf``, a finite :class:`fractions.Fraction`, or
``+inf``.  Values are immutable and totally ordered.  The one undefined
sum, ``+inf + -inf``, raises :class:`OppositeInfinities` instead of producing
a NaN-like value.
"""

from __future__ import annotations

import functools
import re
from fractions import Fraction
from typing import Iterable, Union

__all__ = [
    "ExtReal",
    "NEG_INF",
    "POS_INF",
    "ZERO",
    "OppositeInfinities",
    "ext_add",
    "ext_scale",
    "ext_inf",
    "ext_sup",
    "ext_distance",
    "parse_rational",
    "format_rational",
]

Number = Union[int, Fraction]

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


class OppositeInfinities(ArithmeticError):
    """Raised for the forbidden form ``+inf + (-inf)``."""


def parse_rational(text) -> Fraction:
    """Parse ``"p/q"`` or an integer (string or int) into a Fraction.

    Floats, decimal strings and zero denominators are rejected with
    ``ValueError``.
    """
    if isinstance(text, bool):
        raise ValueError(f"not a rational: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str) or not _RATIONAL_RE.match(text.strip()):
        raise ValueError(f"not a rational: {text!r}")
    num, _, den = text.strip().partition("/")
    if den and int(den) == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


@functools.total_ordering
class ExtReal:
    """An element of [-inf, +inf] with exact rational finite part."""

    __slots__ = ("_sign", "_q")

    def __init__(self, value: Union[Number, "ExtReal"] = 0):
        if isinstance(value, ExtReal):
            self._sign, self._q = value._sign, value._q
        elif isinstance(value, (int, Fraction)) and not isinstance(value, bool):
            self._sign, self._q = 0, Fraction(value)
        else:
            raise TypeError(f"cannot make an ExtReal from {value!r}")

    @classmethod
    def _infinite(cls, sign: int) -> "ExtReal":
        obj = cls.__new__(cls)
        obj._sign, obj._q = sign, None
        return obj

    @classmethod
    def coerce(cls, value) -> "ExtReal":
        return value if isinstance(value, ExtReal) else cls(value)

    @classmethod
    def parse(cls, text) -> "ExtReal":
        """Inverse of :meth:`__str__`: ``"+inf"``, ``"-inf"``, ``"p/q"``, or an int."""
        if text == "+inf":
            return POS_INF
        if text == "-inf":
            return NEG_INF
        return cls(parse_rational(text))

    # -- inspection -------------------------------------------------------

    @property
    def is_finite(self) -> bool:
        return self._sign == 0

    @property
    def is_pos_inf(self) -> bool:
        return self._sign > 0

    @property
    def is_neg_inf(self) -> bool:
        return self._sign < 0

    @property
    def value(self) -> Fraction:
        """The finite rational value; ``ValueError`` for an infinity."""
        if self._sign:
            raise ValueError(f"{self} has no finite value")
        return self._q

    def _key(self):
        return (self._sign, self._q if self._sign == 0 else 0)

    # -- order ------------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            other = ExtReal(other)
        if not isinstance(other, ExtReal):
            return NotImplemented
        return self._key() == other._key()

    def __lt__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            other = ExtReal(other)
        if not isinstance(other, ExtReal):
            return NotImplemented
        return self._key() < other._key()

    def __hash__(self):
        return hash(self._key())

    # -- arithmetic -------------------------------------------------------

    def __neg__(self) -> "ExtReal":
        if self._sign:
            return ExtReal._infinite(-self._sign)
        return ExtReal(-self._q)

    def __add__(self, other) -> "ExtReal":
        try:
            other = ExtReal.coerce(other)
        except TypeError:
            return NotImplemented
        return ext_add(self, other)

    __radd__ = __add__

    def __sub__(self, other) -> "ExtReal":
        try:
            other = ExtReal.coerce(other)
        except TypeError:
            return NotImplemented
        return ext_add(self, -other)

    def __rsub__(self, other) -> "ExtReal":
        return ext_add(ExtReal.coerce(other), -self)

    def __mul__(self, c) -> "ExtReal":
        if isinstance(c, (int, Fraction)) and not isinstance(c, bool):
            return ext_scale(self, Fraction(c))
        return NotImplemented

    __rmul__ = __mul__

    def __str__(self) -> str:
        if self._sign > 0:
            return "+inf"
        if self._sign < 0:
            return "-inf"
        return format_rational(self._q)

    def __repr__(self) -> str:
        return f"ExtReal({str(self)!r})"


NEG_INF = ExtReal._infinite(-1)
POS_INF = ExtReal._infinite(1)
ZERO = ExtReal(0)


def ext_add(a: ExtReal, b: ExtReal) -> ExtReal:
    if a.is_finite and b.is_finite:
        return ExtReal(a.value + b.value)
    if (a.is_pos_inf and b.is_neg_inf) or (a.is_neg_inf and b.is_pos_inf):
        raise OppositeInfinities(f"{a} + {b} is undefined")
    return a if not a.is_finite else b


def ext_scale(a: ExtReal, c: Number) -> ExtReal:
    """``c * a`` with the convention ``0 * (+-inf) = 0``.

    Infinite ``a`` requires ``c >= 0``.
    """
    c = Fraction(c)
    if a.is_finite:
        return ExtReal(c * a.value)
    if c < 0:
        raise ValueError("negative weight on an infinite value")
    return ZERO if c == 0 else a


def ext_inf(values: Iterable[ExtReal]) -> ExtReal:
    """Minimum of a finite collection; ``+inf`` for an empty one."""
    return min((ExtReal.coerce(v) for v in values), default=POS_INF)


def ext_sup(values: Iterable[ExtReal]) -> ExtReal:
    """Maximum of a finite collection; ``-inf`` for an empty one."""
    return max((ExtReal.coerce(v) for v in values), default=NEG_INF)


def ext_distance(a: ExtReal, b: ExtReal) -> ExtReal:
    """``|a - b|``, taken as 0 when ``a == b`` (also for equal infinities)."""
    if a == b:
        return ZERO
    if a.is_finite and b.is_finite:
        return ExtReal(abs(a.value - b.value))
    return POS_INF
