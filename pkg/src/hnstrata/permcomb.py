"""Permutations in one-line form, compositions, and Kostant double-coset representatives.

Conventions: permutations act on ``{1..n}``; ``(w*u)(j) = w(u(j))``; the
action on tuples is ``(w.v)[i] = v[w^-1(i)]``, i.e. the entry at position j
moves to position w(j).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator, List, Optional, Sequence, Tuple

from .numvec import MalformedInstance

Composition = Tuple[int, ...]
Table = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True, order=True)
class Perm:
    images: Tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(i) for i in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise MalformedInstance(f"not a permutation of 1..{len(images)}: {list(self.images)}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Sequence[Sequence[int]]) -> "Perm":
        """Build from disjoint cycles, e.g. ``[(2, 3, 4)]`` sends 2->3->4->2."""
        images = list(range(1, n + 1))
        seen = set()
        for cyc in cycles:
            for a in cyc:
                if not 1 <= a <= n or a in seen:
                    raise MalformedInstance(f"bad cycle {tuple(cycles)} for n={n}")
                seen.add(a)
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]] if cyc else []):
                images[a - 1] = b
        return cls(tuple(images))

    @classmethod
    def parse(cls, text: str, n: Optional[int] = None) -> "Perm":
        """Parse one-line ``[2,1,3]`` or cycle notation ``(1 2)(3 4)``; cycles need ``n``."""
        text = text.strip()
        if text.startswith("["):
            body = text.strip("[]").replace(",", " ").split()
            return cls(tuple(int(b) for b in body))
        cycles = [[int(a) for a in re.split(r"[,\s]+", c.strip()) if a]
                  for c in re.findall(r"\(([^)]*)\)", text)]
        if n is None:
            n = max((a for c in cycles for a in c), default=0)
        return cls.from_cycles(n, [c for c in cycles if c])

    def __len__(self) -> int:
        return len(self.images)

    def __call__(self, j: int) -> int:
        return self.images[j - 1]

    def __mul__(self, other: "Perm") -> "Perm":
        if len(self) != len(other):
            raise MalformedInstance("composing permutations of different degree")
        return Perm(tuple(self(other(j)) for j in range(1, len(other) + 1)))

    def inverse(self) -> "Perm":
        inv = [0] * len(self)
        for j, wj in enumerate(self.images, start=1):
            inv[wj - 1] = j
        return Perm(tuple(inv))

    def is_identity(self) -> bool:
        return all(w == j for j, w in enumerate(self.images, start=1))

    def one_line(self) -> str:
        return "[" + ",".join(map(str, self.images)) + "]"

    def __str__(self) -> str:
        return self.one_line()


def perm_act(w: Perm, v: Sequence) -> tuple:
    if len(w) != len(v):
        raise MalformedInstance(f"permutation of degree {len(w)} acting on a {len(v)}-tuple")
    winv = w.inverse()
    return tuple(v[winv(i) - 1] for i in range(1, len(v) + 1))


def perm_length(w: Perm) -> int:
    im = w.images
    return sum(1 for i in range(len(im)) for j in range(i + 1, len(im)) if im[i] > im[j])


def intervals(parts: Sequence[int]) -> List[range]:
    """The 1-based consecutive index ranges cut out by a composition."""
    out, start = [], 1
    for p in parts:
        out.append(range(start, start + p))
        start += p
    return out


def _check_composition(parts: Sequence[int], n: Optional[int] = None) -> Composition:
    parts = tuple(int(p) for p in parts)
    if any(p < 1 for p in parts):
        raise MalformedInstance(f"composition parts must be positive: {parts}")
    if n is not None and sum(parts) != n:
        raise MalformedInstance(f"composition {parts} does not sum to {n}")
    return parts


def block_embed(x: Perm, sizes: Sequence[int]) -> Perm:
    """Lift ``x`` in S_l to S_d by moving whole blocks of consecutive indices."""
    sizes = _check_composition(sizes)
    if len(sizes) != len(x):
        raise MalformedInstance(f"{len(sizes)} block sizes for a permutation of degree {len(x)}")
    blocks = intervals(sizes)
    xinv = x.inverse()
    # new start of block b is the total size of the blocks placed before it
    start = {}
    pos = 1
    for k in range(1, len(x) + 1):
        b = xinv(k)
        start[b] = pos
        pos += sizes[b - 1]
    images = [0] * sum(sizes)
    for b, rng in enumerate(blocks, start=1):
        for offset, j in enumerate(rng):
            images[j - 1] = start[b] + offset
    return Perm(tuple(images))


def _increasing_on(images: Sequence[int], parts: Sequence[int]) -> bool:
    return all(images[i - 1] < images[i] for rng in intervals(parts) for i in rng[:-1])


def is_kostant(x: Perm, left: Sequence[int], right: Sequence[int]) -> bool:
    """``x`` increasing on the right blocks and ``x^-1`` increasing on the left blocks."""
    n = len(x)
    left = _check_composition(left, n)
    right = _check_composition(right, n)
    return _increasing_on(x.images, right) and _increasing_on(x.inverse().images, left)


def compositions(n: int) -> List[Composition]:
    if n < 1:
        raise MalformedInstance("compositions need n >= 1")
    out: List[Composition] = []

    def rec(rest: int, prefix: Tuple[int, ...]):
        if rest == 0:
            out.append(prefix)
            return
        for p in range(1, rest + 1):
            rec(rest - p, prefix + (p,))

    rec(n, ())
    return out


@lru_cache(maxsize=65536)
def _rows(target: int, remaining: Tuple[int, ...]) -> Tuple[Tuple[int, ...], ...]:
    """All ways to write ``target`` as a sum of entries capped by ``remaining``."""
    if len(remaining) == 1:
        return ((target,),) if target <= remaining[0] else ()
    tail = sum(remaining[1:])
    out = []
    for v in range(max(0, target - tail), min(target, remaining[0]) + 1):
        out.extend((v,) + rest for rest in _rows(target - v, remaining[1:]))
    return tuple(out)


RowFilter = Callable[[Tuple[Tuple[int, ...], ...]], bool]


def contingency_tables(rows: Sequence[int], cols: Sequence[int],
                       accept: Optional[RowFilter] = None) -> Iterator[Table]:
    """Non-negative integer matrices with the given row and column sums.

    Built row by row; ``accept(prefix)`` is called after each completed row
    and may return False to cut every table extending ``prefix``.
    """
    rows, cols = tuple(rows), tuple(cols)
    if sum(rows) != sum(cols):
        return

    def rec(i: int, remaining: Tuple[int, ...], prefix: Tuple[Tuple[int, ...], ...]):
        if i == len(rows):
            yield prefix
            return
        for row in _rows(rows[i], remaining):
            new_prefix = prefix + (row,)
            if accept is not None and not accept(new_prefix):
                continue
            yield from rec(i + 1, tuple(r - v for r, v in zip(remaining, row)), new_prefix)

    if not cols:
        if not rows:
            yield ()
        return
    yield from rec(0, cols, ())


def coset_table(x: Perm, left: Sequence[int], right: Sequence[int]) -> Table:
    """Entry ``[a][b]`` counts j in right block b with x(j) in left block a."""
    L, R = intervals(left), intervals(right)
    return tuple(tuple(sum(1 for j in rb if x(j) in la) for rb in R) for la in L)


def rep_from_table(table: Table, left: Sequence[int], right: Sequence[int]) -> Perm:
    """Canonical filling: the Kostant representative with the given coset table.

    Each right block's indices, in increasing order, go to left blocks in
    increasing row order; each left block's positions are consumed in order.
    """
    L, R = intervals(left), intervals(right)
    next_free = [la.start for la in L]
    images = [0] * sum(right)
    for b, rb in enumerate(R):
        it = iter(rb)
        for a in range(len(L)):
            for _ in range(table[a][b]):
                j = next(it)
                images[j - 1] = next_free[a]
                next_free[a] += 1
    return Perm(tuple(images))


def kostant_reps(left: Sequence[int], right: Sequence[int]) -> List[Perm]:
    """One Kostant representative per double coset S_left \\ S_n / S_right, lexicographically sorted."""
    left = _check_composition(left)
    right = _check_composition(right, sum(left))
    reps = [rep_from_table(t, left, right) for t in contingency_tables(left, right)]
    assert all(is_kostant(x, left, right) for x in reps)
    reps.sort()
    return reps


def double_coset_rep(x: Perm, left: Sequence[int], right: Sequence[int]) -> Perm:
    left = _check_composition(left, len(x))
    right = _check_composition(right, len(x))
    return rep_from_table(coset_table(x, left, right), left, right)
