"""The index set of HN strata: triples (P, x, w) and their numerical data."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Sequence, Tuple

from .isodata import HodgeData, NewtonData, stab_mu, stab_nu
from .numvec import (MalformedInstance, RatTuple, common_scale, dominance_geq, fmt_rat,
                     is_nonincreasing, scaled, total)
from .permcomb import (Composition, Perm, block_embed, compositions, contingency_tables,
                       intervals, is_kostant, kostant_reps, perm_act, perm_length,
                       rep_from_table)


class NotInGamma(ValueError):
    """A stratum-only quantity was requested for a triple outside the index set."""


@dataclass(frozen=True)
class HNVector:
    entries: RatTuple

    def __post_init__(self):
        entries = tuple(Fraction(q) for q in self.entries)
        if not entries:
            raise MalformedInstance("HN-vector must be non-empty")
        if not is_nonincreasing(entries):
            raise MalformedInstance(
                "HN-vector must be non-increasing (blocks with strictly decreasing values), got "
                + "(" + ", ".join(map(fmt_rat, entries)) + ")")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_blocks(cls, values: Sequence[Fraction], sizes: Sequence[int]) -> "HNVector":
        if any(values[i] <= values[i + 1] for i in range(len(values) - 1)):
            raise MalformedInstance("HN block values must be strictly decreasing")
        return cls(tuple(v for v, s in zip(values, sizes) for _ in range(s)))

    def _blocks(self):
        vals, sizes = [], []
        for q in self.entries:
            if vals and vals[-1] == q:
                sizes[-1] += 1
            else:
                vals.append(q)
                sizes.append(1)
        return tuple(vals), tuple(sizes)

    @property
    def block_values(self) -> RatTuple:
        return self._blocks()[0]

    @property
    def block_sizes(self) -> Tuple[int, ...]:
        return self._blocks()[1]

    def __len__(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        return "(" + ", ".join(map(fmt_rat, self.entries)) + ")"


@dataclass(frozen=True)
class Stratum:
    P: Composition
    x: Perm
    w: Perm
    d_js: Tuple[int, ...]
    nu_blocks: Tuple[RatTuple, ...]
    mu_blocks: Tuple[RatTuple, ...]

    @property
    def r(self) -> int:
        return len(self.P)

    @property
    def d(self) -> int:
        return sum(self.d_js)

    @property
    def t_js(self) -> Tuple[int, ...]:
        """Cumulative dimensions t_0 = 0, t_1, ..., t_r = d."""
        out = [0]
        for dj in self.d_js:
            out.append(out[-1] + dj)
        return tuple(out)

    @property
    def lambda_blocks(self) -> Tuple[RatTuple, ...]:
        return tuple(tuple(m - v for m, v in zip(mb, nb))
                     for mb, nb in zip(self.mu_blocks, self.nu_blocks))

    @property
    def block_degrees(self) -> Tuple[Fraction, ...]:
        return tuple(total(mb) - total(nb) for mb, nb in zip(self.mu_blocks, self.nu_blocks))

    @property
    def avg_slopes(self) -> Tuple[Fraction, ...]:
        return tuple(deg / dj for deg, dj in zip(self.block_degrees, self.d_js))

    def sort_key(self):
        return (len(self.P), self.P, self.x.images, self.w.images)

    def label(self) -> str:
        return f"(P={self.P}, x={self.x}, w={self.w})"


def _split(t: Sequence, sizes: Sequence[int]) -> Tuple[tuple, ...]:
    return tuple(tuple(t[j - 1] for j in rng) for rng in intervals(sizes))


def group_dims(P: Sequence[int], x: Perm, n: NewtonData) -> Tuple[int, ...]:
    """d_j = sum of the block sizes of the summands x^-1 sends into group j."""
    xinv = x.inverse()
    s = n.block_sizes
    return tuple(sum(s[xinv(k) - 1] for k in rng) for rng in intervals(P))


def build_stratum(P: Sequence[int], x: Perm, w: Perm, n: NewtonData, h: HodgeData) -> Stratum:
    P = tuple(P)
    if sum(P) != n.l or any(p < 1 for p in P):
        raise MalformedInstance(f"P={P} is not a composition of l={n.l}")
    if len(x) != n.l or not is_kostant(x, P, stab_nu(n)):
        raise MalformedInstance(
            f"x={x} is not a Kostant representative for left={P}, right={stab_nu(n)}")
    d_js = group_dims(P, x, n)
    if len(w) != h.d or not is_kostant(w, d_js, stab_mu(h)):
        raise MalformedInstance(
            f"w={w} is not a Kostant representative for left={d_js}, right={stab_mu(h)}")
    if n.d != h.d:
        raise MalformedInstance("Newton and Hodge dimensions differ")
    nu_perm = perm_act(block_embed(x, n.block_sizes), n.nu_tuple)
    mu_perm = perm_act(w, h.mu_tuple)
    return Stratum(P, x, w, d_js, _split(nu_perm, d_js), _split(mu_perm, d_js))


def _block_ok(mu_block: RatTuple, nu_block: RatTuple) -> bool:
    ok = dominance_geq(mu_block, nu_block)
    # literal form on the unsorted difference must agree
    assert ok == dominance_geq(tuple(m - v for m, v in zip(mu_block, nu_block)),
                               (Fraction(0),) * len(mu_block))
    return ok


def in_gamma(s: Stratum) -> bool:
    if not all(_block_ok(mb, nb) for mb, nb in zip(s.mu_blocks, s.nu_blocks)):
        return False
    a = s.avg_slopes
    return all(a[i] > a[i + 1] for i in range(len(a) - 1))


def _canonical_compositions(l: int) -> List[Composition]:
    return sorted(compositions(l), key=lambda P: (len(P), P))


def iter_candidates(n: NewtonData, h: HodgeData) -> Iterator[Stratum]:
    """Every triple (P, x, w) with Kostant x and w, member of the index set or not."""
    g = stab_mu(h)
    for P in _canonical_compositions(n.l):
        for x in kostant_reps(P, stab_nu(n)):
            d_js = group_dims(P, x, n)
            for w in kostant_reps(d_js, g):
                yield build_stratum(P, x, w, n, h)


def enumerate_gamma(n: NewtonData, h: HodgeData) -> List[Stratum]:
    """All strata in canonical order (r, P, x, w).

    The w-loop walks Hodge contingency tables row by row and cuts a prefix as
    soon as a group fails dominance or breaks the strict slope decrease.
    """
    if n.d != h.d:
        raise MalformedInstance("Newton and Hodge dimensions differ")
    g = stab_mu(h)
    D = common_scale(h.mu_tuple, n.nu_tuple)
    mu_vals = scaled(h.distinct_values, D)
    out: List[Stratum] = []
    for P in _canonical_compositions(n.l):
        for x in kostant_reps(P, stab_nu(n)):
            d_js = group_dims(P, x, n)
            nu_blocks = [scaled(b, D) for b in
                         _split(perm_act(block_embed(x, n.block_sizes), n.nu_tuple), d_js)]
            nu_tot = [sum(b) for b in nu_blocks]

            def accept(prefix, nu_blocks=nu_blocks, nu_tot=nu_tot, d_js=d_js):
                i = len(prefix) - 1
                mu_block = tuple(v for v, c in zip(mu_vals, prefix[i]) for _ in range(c))
                if not dominance_geq(mu_block, nu_blocks[i]):
                    return False
                if i == 0:
                    return True
                prev_deg = sum(v * c for v, c in zip(mu_vals, prefix[i - 1])) - nu_tot[i - 1]
                cur_deg = sum(mu_block) - nu_tot[i]
                # strict decrease of average slopes, cross-multiplied
                return prev_deg * d_js[i] > cur_deg * d_js[i - 1]

            for table in contingency_tables(d_js, g, accept):
                w = rep_from_table(table, d_js, g)
                s = build_stratum(P, x, w, n, h)
                assert in_gamma(s), s.label()
                assert all(map(is_nonincreasing, s.nu_blocks + s.mu_blocks)), s.label()
                out.append(s)
    out.sort(key=Stratum.sort_key)
    return out


def enumerate_gamma_naive(n: NewtonData, h: HodgeData) -> List[Stratum]:
    return sorted((s for s in iter_candidates(n, h) if in_gamma(s)), key=Stratum.sort_key)


def hn_vector(s: Stratum) -> HNVector:
    if not in_gamma(s):
        raise NotInGamma(f"{s.label()} is not in the index set")
    return HNVector.from_blocks(s.avg_slopes, s.d_js)


def stratum_rank(s: Stratum) -> int:
    return perm_length(s.w)


def lambda_fibers(n: NewtonData, h: HodgeData) -> Dict[HNVector, List[Stratum]]:
    fibers: Dict[HNVector, List[Stratum]] = {}
    for s in enumerate_gamma(n, h):
        fibers.setdefault(hn_vector(s), []).append(s)
    return fibers


def stratum_record(s: Stratum) -> dict:
    """JSON-ready record of a stratum (rationals as "p/q" strings)."""
    return {
        "P": list(s.P),
        "x": s.x.one_line(),
        "w": s.w.one_line(),
        "d": list(s.d_js),
        "nu_blocks": [[fmt_rat(q) for q in b] for b in s.nu_blocks],
        "mu_blocks": [[fmt_rat(q) for q in b] for b in s.mu_blocks],
        "lambda": [[fmt_rat(q) for q in b] for b in s.lambda_blocks],
        "hn_vector": [fmt_rat(q) for q in hn_vector(s).entries],
        "rank": stratum_rank(s),
    }
