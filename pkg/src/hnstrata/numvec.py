"""Exact rational tuples and the two partial-sum orders on them.

Rationals are :class:`fractions.Fraction` (always reduced, positive
denominator); a rational tuple is a plain ``tuple`` of them.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence, Tuple, Union

Rat = Fraction
RatTuple = Tuple[Fraction, ...]
RatLike = Union[Fraction, int, str]


class MalformedInstance(ValueError):
    """Raised when inputs violate a structural precondition (lengths, sortedness, ...)."""


def rat(value: RatLike) -> Fraction:
    """Parse ``"p/q"``, ``"p"``, an int or a Fraction into a Fraction.

    Floats are refused: they would smuggle binary rounding into exact data.
    """
    if isinstance(value, float):
        raise MalformedInstance(f"refusing float {value!r}; pass an exact 'p/q' string")
    if isinstance(value, str):
        text = value.strip()
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise MalformedInstance(f"not a rational number: {value!r}") from exc
    return Fraction(value)


def rtuple(values: Iterable[RatLike]) -> RatTuple:
    return tuple(rat(v) for v in values)


def fmt_rat(q: Fraction) -> str:
    """Serialize as ``"p/q"`` or ``"p"`` when the denominator is 1."""
    return str(Fraction(q))


def fmt_tuple(t: Sequence[Fraction]) -> str:
    return "(" + ", ".join(fmt_rat(q) for q in t) + ")"


def sort_desc(t: Sequence[Fraction]) -> RatTuple:
    return tuple(sorted(t, reverse=True))


def total(t: Sequence[Fraction]) -> Fraction:
    return Fraction(sum(t))


def shift(t: Sequence[Fraction], alpha: RatLike) -> RatTuple:
    a = rat(alpha)
    return tuple(q + a for q in t)


def common_scale(*tuples: Sequence[Fraction]) -> int:
    """Least common denominator of all entries; multiplying by it makes everything integral."""
    return lcm(1, *(Fraction(q).denominator for t in tuples for q in t))


def scaled(t: Sequence[Fraction], scale: int) -> Tuple[int, ...]:
    return tuple(int(q * scale) for q in t)


def is_nonincreasing(t: Sequence[Fraction]) -> bool:
    return all(t[i] >= t[i + 1] for i in range(len(t) - 1))


def _check_pair(a: Sequence[Fraction], b: Sequence[Fraction]) -> int:
    if len(a) != len(b):
        raise MalformedInstance(f"length mismatch: {len(a)} vs {len(b)}")
    if not a:
        raise MalformedInstance("order relations need tuples of length >= 1")
    return len(a)


def dominance_geq(a: Sequence[Fraction], b: Sequence[Fraction]) -> bool:
    """Normalized dominance ``a >= b``, insensitive to adding constants.

    For each k < d: ``sum(a[:k]) + k*|b|/d >= sum(b[:k]) + k*|a|/d``.
    Entries are taken in the given order; nothing is sorted.
    """
    d = _check_pair(a, b)
    ta, tb = sum(a), sum(b)
    # both sides scaled by d; works unchanged on integer-scaled data
    pa = pb = 0
    for k in range(1, d):
        pa += a[k - 1]
        pb += b[k - 1]
        if d * pa + k * tb < d * pb + k * ta:
            return False
    return True


def fr_geq(a: Sequence[Fraction], b: Sequence[Fraction]) -> bool:
    """Plain dominance: partial sums of ``a`` dominate those of ``b`` and totals agree."""
    d = _check_pair(a, b)
    if total(a) != total(b):
        return False
    pa = pb = Fraction(0)
    for k in range(d - 1):
        pa += a[k]
        pb += b[k]
        if pa < pb:
            return False
    return True
