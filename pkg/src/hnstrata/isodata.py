"""Newton and Hodge data of an isocrystal instance, plus the non-emptiness tests."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import groupby
from math import gcd
from typing import Iterable, Mapping, Sequence, Tuple

from .numvec import (MalformedInstance, RatLike, RatTuple, dominance_geq, fmt_rat,
                     fr_geq, is_nonincreasing, rtuple, sort_desc)
from .permcomb import Composition


def _group(values: Sequence[Fraction]) -> Tuple[RatTuple, Tuple[int, ...]]:
    groups = [(v, len(list(g))) for v, g in groupby(values)]
    return tuple(v for v, _ in groups), tuple(m for _, m in groups)


@dataclass(frozen=True)
class NewtonData:
    """Slopes of the simple summands, in non-increasing order.

    Everything else (block sizes, the d-tuple, value classes) is derived.
    """
    simple_slopes: RatTuple

    def __post_init__(self):
        if not self.simple_slopes:
            raise MalformedInstance("Newton data needs at least one slope")
        if not is_nonincreasing(self.simple_slopes):
            raise MalformedInstance(
                f"slopes must be non-increasing: {[fmt_rat(q) for q in self.simple_slopes]}")

    @property
    def l(self) -> int:
        return len(self.simple_slopes)

    @property
    def block_sizes(self) -> Tuple[int, ...]:
        return tuple(q.denominator for q in self.simple_slopes)

    @property
    def d(self) -> int:
        return sum(self.block_sizes)

    @property
    def nu_tuple(self) -> RatTuple:
        return tuple(q for q in self.simple_slopes for _ in range(q.denominator))

    @property
    def distinct_values(self) -> RatTuple:
        return _group(self.simple_slopes)[0]

    @property
    def class_mults(self) -> Tuple[int, ...]:
        return _group(self.simple_slopes)[1]

    @property
    def entry_mults(self) -> Tuple[int, ...]:
        return tuple(v.denominator * m for v, m in zip(self.distinct_values, self.class_mults))

    def to_json(self) -> dict:
        return {"slopes": [fmt_rat(q) for q in self.simple_slopes]}


@dataclass(frozen=True)
class HodgeData:
    mu_tuple: RatTuple

    def __post_init__(self):
        if not self.mu_tuple:
            raise MalformedInstance("Hodge vector must be non-empty")
        if not is_nonincreasing(self.mu_tuple):
            raise MalformedInstance("Hodge vector must be non-increasing; use hodge_from_tuple")

    @property
    def d(self) -> int:
        return len(self.mu_tuple)

    @property
    def distinct_values(self) -> RatTuple:
        return _group(self.mu_tuple)[0]

    @property
    def value_mults(self) -> Tuple[int, ...]:
        return _group(self.mu_tuple)[1]

    def to_json(self) -> list:
        return [fmt_rat(q) for q in self.mu_tuple]


def newton_from_slopes(slopes: Iterable[RatLike]) -> NewtonData:
    return NewtonData(rtuple(slopes))


def newton_from_tuple(t: Iterable[RatLike]) -> NewtonData:
    """Recover the simple summands from a Newton d-tuple.

    A value ``r/s`` occurring ``h`` times contributes ``h/s`` summands of
    size ``s``; ``s`` must divide ``h``.
    """
    t = rtuple(t)
    if not t:
        raise MalformedInstance("Newton vector must be non-empty")
    if not is_nonincreasing(t):
        raise MalformedInstance("Newton vector must be non-increasing")
    slopes = []
    for value, h in zip(*_group(t)):
        s = value.denominator
        if h % s:
            raise MalformedInstance(
                f"not a Newton vector of an isocrystal: value {fmt_rat(value)} occurs "
                f"{h} times, not a multiple of its denominator {s}")
        slopes.extend([value] * (h // s))
    return NewtonData(tuple(slopes))


def hodge_from_tuple(t: Iterable[RatLike]) -> HodgeData:
    t = rtuple(t)
    if not t:
        raise MalformedInstance("Hodge vector must be non-empty")
    return HodgeData(sort_desc(t))


def stab_mu(h: HodgeData) -> Composition:
    return h.value_mults


def stab_nu(n: NewtonData) -> Composition:
    return n.class_mults


def _same_d(h: HodgeData, n: NewtonData) -> None:
    if h.d != n.d:
        raise MalformedInstance(f"Hodge vector has length {h.d} but the isocrystal has dimension {n.d}")


def wa_nonempty(h: HodgeData, n: NewtonData) -> bool:
    """Weakly admissible filtrations of type mu exist."""
    _same_d(h, n)
    return fr_geq(h.mu_tuple, n.nu_tuple)


def ss_nonempty(h: HodgeData, n: NewtonData) -> bool:
    """Semistable filtrations of type mu exist."""
    _same_d(h, n)
    return dominance_geq(h.mu_tuple, n.nu_tuple)


# -- instance files ---------------------------------------------------------

def instance_from_dict(data: Mapping) -> Tuple[NewtonData, HodgeData]:
    """Parse ``{"newton": {"slopes": [...]} | {"tuple": [...]}, "hodge": [...]}``."""
    try:
        newton = data["newton"]
        hodge = data["hodge"]
    except (KeyError, TypeError) as exc:
        raise MalformedInstance("instance needs 'newton' and 'hodge' entries") from exc
    if not isinstance(newton, Mapping) or len(set(newton) & {"slopes", "tuple"}) != 1:
        raise MalformedInstance("'newton' must have exactly one of 'slopes' or 'tuple'")
    n = newton_from_slopes(newton["slopes"]) if "slopes" in newton else newton_from_tuple(newton["tuple"])
    h = hodge_from_tuple(hodge)
    _same_d(h, n)
    return n, h


def instance_to_dict(n: NewtonData, h: HodgeData) -> dict:
    return {"newton": n.to_json(), "hodge": h.to_json()}


def load_instance(path) -> Tuple[NewtonData, HodgeData]:
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise MalformedInstance(f"{path}: invalid JSON ({exc})") from exc
    return instance_from_dict(data)


def random_instance(rng: random.Random, max_d: int) -> Tuple[NewtonData, HodgeData]:
    """Draw a small random instance with ``1 <= d <= max_d``.

    Slopes are reduced fractions a/b with |a| <= 3 and 1 <= b <= 3, drawn
    until the block sizes fill d; Hodge entries are integers in [-5, 5].
    """
    d = rng.randint(1, max_d)
    slopes = []
    room = d
    while room:
        b = rng.randint(1, min(3, room))
        a = rng.choice([a for a in range(-3, 4) if gcd(a, b) == 1])
        slopes.append(Fraction(a, b))
        room -= b
    n = NewtonData(sort_desc(slopes))
    h = hodge_from_tuple(rng.randint(-5, 5) for _ in range(d))
    return n, h
