"""Partition witnesses (I, J) for HN-vectors, searched directly on index sets.

This route never touches Kostant representatives, so comparing it with the
stratum enumeration is a genuine cross-check.

Summands with equal slope are interchangeable, as are Hodge entries with
equal value. The search therefore fills each group with the lowest unused
indices of every class ("canonical" witnesses); every witness has exactly one
canonical counterpart with the same class counts per group.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterator, List, Optional, Sequence, Set, Tuple

from .isodata import HodgeData, NewtonData, stab_mu, stab_nu
from .numvec import (MalformedInstance, RatTuple, common_scale, dominance_geq, fmt_rat, scaled,
                     sort_desc, total)
from .permcomb import Perm, double_coset_rep, intervals
from .strata import (HNVector, NotInGamma, Stratum, build_stratum, enumerate_gamma,
                     hn_vector, in_gamma)

Block = Tuple[int, ...]


@dataclass(frozen=True)
class Witness:
    I_parts: Tuple[Block, ...]
    J_parts: Tuple[Block, ...]
    lambda_bars: RatTuple

    @property
    def r(self) -> int:
        return len(self.I_parts)

    def hn_vector(self) -> HNVector:
        return HNVector.from_blocks(self.lambda_bars, [len(J) for J in self.J_parts])

    def to_json(self) -> dict:
        return {"r": self.r,
                "I": [list(b) for b in self.I_parts],
                "J": [list(b) for b in self.J_parts],
                "lambda_bars": [fmt_rat(q) for q in self.lambda_bars]}


def group_nu(n: NewtonData, I: Sequence[int]) -> RatTuple:
    return sort_desc(n.simple_slopes[k - 1] for k in I for _ in range(n.block_sizes[k - 1]))


def group_mu(h: HodgeData, J: Sequence[int]) -> RatTuple:
    return sort_desc(h.mu_tuple[k - 1] for k in J)


def witness_violations(wit: Witness, n: NewtonData, h: HodgeData) -> List[str]:
    """Check all witness conditions from scratch; an empty list means valid."""
    bad = []
    r = wit.r
    if not (len(wit.J_parts) == len(wit.lambda_bars) == r >= 1):
        return [f"inconsistent group counts {r}, {len(wit.J_parts)}, {len(wit.lambda_bars)}"]
    I_all = [k for b in wit.I_parts for k in b]
    J_all = [k for b in wit.J_parts for k in b]
    if sorted(I_all) != list(range(1, n.l + 1)) or any(not b for b in wit.I_parts):
        bad.append("I is not a partition of [1,l] into non-empty parts")
    if sorted(J_all) != list(range(1, n.d + 1)) or any(not b for b in wit.J_parts):
        bad.append("J is not a partition of [1,d] into non-empty parts")
    if bad:
        return bad
    lb = wit.lambda_bars
    if any(lb[i] <= lb[i + 1] for i in range(r - 1)):
        bad.append("lambda_bars not strictly decreasing")
    for i, (I, J, lam) in enumerate(zip(wit.I_parts, wit.J_parts, lb), start=1):
        di = sum(n.block_sizes[k - 1] for k in I)
        if len(J) != di:
            bad.append(f"group {i}: |J| = {len(J)} but the summands have dimension {di}")
            continue
        nu_i, mu_i = group_nu(n, I), group_mu(h, J)
        if not dominance_geq(mu_i, nu_i):
            bad.append(f"group {i}: Hodge part does not dominate Newton part")
        if lam * di != total(mu_i) - total(nu_i):
            bad.append(f"group {i}: lambda_bar {fmt_rat(lam)} does not match the degree")
    return bad


def _subsets_by_class(classes: Sequence[List[int]], size: Optional[int]) -> List[Block]:
    """Canonical sub-blocks: the lowest ``c_a`` free indices of each class, all count vectors."""
    ranges = [range(len(c) + 1) for c in classes]
    out = []
    for counts in product(*ranges):
        picked = tuple(sorted(k for c, cnt in zip(classes, counts) for k in c[:cnt]))
        if not picked or (size is not None and len(picked) != size):
            continue
        out.append(picked)
    out.sort()
    return out


def _class_lists(values: Sequence[Fraction]) -> List[List[int]]:
    out: List[List[int]] = []
    for k, v in enumerate(values, start=1):
        if out and values[out[-1][0] - 1] == v:
            out[-1].append(k)
        else:
            out.append([k])
    return out


def _search(n: NewtonData, h: HodgeData, r: int,
            target: Optional[Tuple[Sequence[int], Sequence[Fraction]]] = None) -> Iterator[Witness]:
    """Depth-first over groups 1..r; group i fixes I_i, then J_i, then checks it.

    Arithmetic runs on integers: all slopes and Hodge values are multiplied
    by their common denominator first.
    """
    s = n.block_sizes
    D = common_scale(n.simple_slopes, h.mu_tuple)
    slope_int = scaled(n.simple_slopes, D)
    mu_int = scaled(h.mu_tuple, D)

    def rec(i, free_I, free_J, I_parts, J_parts, degs):
        if i == r:
            if not any(free_I) and not any(free_J):
                lams = tuple(Fraction(deg, len(J) * D) for deg, J in zip(degs, J_parts))
                yield Witness(tuple(I_parts), tuple(J_parts), lams)
            return
        groups_left = r - i
        n_free_I = sum(map(len, free_I))
        n_free_J = sum(map(len, free_J))
        for I in _subsets_by_class(free_I, None):
            if n_free_I - len(I) < groups_left - 1:
                continue
            di = sum(s[k - 1] for k in I)
            if target is not None and di != target[0][i]:
                continue
            if di > n_free_J:
                continue
            nu_i = sorted((slope_int[k - 1] for k in I for _ in range(s[k - 1])), reverse=True)
            nu_tot = sum(nu_i)
            rest_I = [[k for k in c if k not in I] for c in free_I]
            for J in _subsets_by_class(free_J, di):
                mu_i = sorted((mu_int[k - 1] for k in J), reverse=True)
                if not dominance_geq(mu_i, nu_i):
                    continue
                deg = sum(mu_i) - nu_tot
                if degs and not degs[-1] * di > deg * len(J_parts[-1]):
                    continue
                if target is not None and Fraction(deg, di * D) != target[1][i]:
                    continue
                rest_J = [[k for k in c if k not in J] for c in free_J]
                yield from rec(i + 1, rest_I, rest_J, I_parts + [I], J_parts + [J], degs + [deg])

    yield from rec(0, _class_lists(n.simple_slopes), _class_lists(h.mu_tuple), [], [], [])


def _as_hn_vector(lam) -> HNVector:
    return lam if isinstance(lam, HNVector) else HNVector(tuple(lam))


def check_hn_vector(lam, n: NewtonData, h: HodgeData) -> Optional[Witness]:
    """Return the first canonical witness realizing ``lam``, or None."""
    lam = _as_hn_vector(lam)
    if len(lam) != n.d or h.d != n.d:
        raise MalformedInstance(f"HN-vector has length {len(lam)}, instance has d={n.d}")
    sizes, values = lam.block_sizes, lam.block_values
    if len(sizes) > n.l:
        return None
    for wit in _search(n, h, len(sizes), (sizes, values)):
        assert not witness_violations(wit, n, h), wit
        return wit
    return None


def iter_witnesses(n: NewtonData, h: HodgeData) -> Iterator[Witness]:
    """All canonical witnesses, r ascending."""
    for r in range(1, min(n.l, n.d) + 1):
        yield from _search(n, h, r)


def enumerate_witness_lambdas(n: NewtonData, h: HodgeData) -> Set[HNVector]:
    if n.d != h.d:
        raise MalformedInstance("Newton and Hodge dimensions differ")
    return {wit.hn_vector() for wit in iter_witnesses(n, h)}


def witness_to_stratum(wit: Witness, n: NewtonData, h: HodgeData) -> Stratum:
    problems = witness_violations(wit, n, h)
    if problems:
        raise MalformedInstance("inconsistent witness: " + "; ".join(problems))
    P = tuple(len(I) for I in wit.I_parts)
    x = Perm(tuple(k for I in wit.I_parts for k in sorted(I))).inverse()
    x = double_coset_rep(x, P, stab_nu(n))
    d_js = tuple(len(J) for J in wit.J_parts)
    w = Perm(tuple(k for J in wit.J_parts for k in sorted(J))).inverse()
    w = double_coset_rep(w, d_js, stab_mu(h))
    s = build_stratum(P, x, w, n, h)
    if not in_gamma(s) or s.avg_slopes != tuple(wit.lambda_bars):
        raise MalformedInstance(f"witness maps to {s.label()}, which does not realize it")
    return s


def stratum_to_witness(s: Stratum) -> Witness:
    if not in_gamma(s):
        raise NotInGamma(f"{s.label()} is not in the index set")
    xinv, winv = s.x.inverse(), s.w.inverse()
    I_parts = tuple(tuple(sorted(xinv(k) for k in rng)) for rng in intervals(s.P))
    J_parts = tuple(tuple(sorted(winv(k) for k in rng)) for rng in intervals(s.d_js))
    return Witness(I_parts, J_parts, s.avg_slopes)


@dataclass
class EquivalenceReport:
    gamma_lambdas: Set[HNVector]
    witness_lambdas: Set[HNVector]
    n_strata: int
    roundtrip_failures: List[str] = field(default_factory=list)

    @property
    def only_gamma(self) -> Set[HNVector]:
        return self.gamma_lambdas - self.witness_lambdas

    @property
    def only_witness(self) -> Set[HNVector]:
        return self.witness_lambdas - self.gamma_lambdas

    @property
    def ok(self) -> bool:
        return not (self.only_gamma or self.only_witness or self.roundtrip_failures)

    def lines(self) -> List[str]:
        out = [f"strata: {self.n_strata}, |Lambda| via strata: {len(self.gamma_lambdas)}, "
               f"via witnesses: {len(self.witness_lambdas)}"]
        for lam in sorted(self.only_gamma, key=lambda v: v.entries, reverse=True):
            out.append(f"  only from strata: {lam}")
        for lam in sorted(self.only_witness, key=lambda v: v.entries, reverse=True):
            out.append(f"  only from witnesses: {lam}")
        out.extend("  round trip: " + msg for msg in self.roundtrip_failures)
        return out


def verify_equivalence(n: NewtonData, h: HodgeData) -> EquivalenceReport:
    strata = enumerate_gamma(n, h)
    report = EquivalenceReport({hn_vector(s) for s in strata}, set(), len(strata))
    for wit in iter_witnesses(n, h):
        report.witness_lambdas.add(wit.hn_vector())
        try:
            again = stratum_to_witness(witness_to_stratum(wit, n, h))
        except (MalformedInstance, NotInGamma) as exc:
            report.roundtrip_failures.append(f"witness {wit.to_json()}: {exc}")
            continue
        if again != wit:
            report.roundtrip_failures.append(f"witness {wit.to_json()} came back as {again.to_json()}")
    for s in strata:
        try:
            wit = stratum_to_witness(s)
            back = witness_to_stratum(wit, n, h)
        except (MalformedInstance, NotInGamma) as exc:
            report.roundtrip_failures.append(f"{s.label()}: {exc}")
            continue
        if back != s:
            report.roundtrip_failures.append(f"{s.label()} came back as {back.label()}")
        elif stratum_to_witness(back) != wit:
            report.roundtrip_failures.append(f"{s.label()}: witness not stable")
    return report
