"""Sweep Hodge triples for the isocrystal with slopes 1/2, 0 and tabulate the strata.

Prints one row per mu with |Gamma|, whether (P=(1,1), x=id, w=(2 3)) is present,
the predicted threshold mu1 + mu3 > 2 mu2 + 1, and any extra strata beyond the
four of the standard picture.
"""

import argparse
from dataclasses import dataclass
from itertools import combinations

from hnstrata import hodge_from_tuple, newton_from_slopes
from hnstrata.permcomb import Perm
from hnstrata.strata import enumerate_gamma, hn_vector


@dataclass
class SweepConfig:
    lo: int = -3
    hi: int = 6


def run(cfg: SweepConfig):
    n = newton_from_slopes(["1/2", "0"])
    known = {((2,), "[1,2]", "[1,2,3]"), ((1, 1), "[1,2]", "[1,2,3]"),
             ((1, 1), "[2,1]", "[1,2,3]"), ((1, 1), "[1,2]", "[1,3,2]")}
    gamma4 = ((1, 1), Perm.identity(2), Perm((1, 3, 2)))
    mismatches = 0
    print(f"{'mu':>14} {'|G|':>4} {'g4':>3} {'pred':>5}  extra strata")
    for mu in combinations(range(cfg.hi, cfg.lo - 1, -1), 3):
        strata = enumerate_gamma(n, hodge_from_tuple(mu))
        has4 = any((s.P, s.x, s.w) == gamma4 for s in strata)
        pred = mu[0] + mu[2] > 2 * mu[1] + 1
        mismatches += has4 != pred
        extra = [f"{s.label()} -> {hn_vector(s)}" for s in strata
                 if (s.P, str(s.x), str(s.w)) not in known]
        print(f"{str(mu):>14} {len(strata):>4} {int(has4):>3} {int(pred):>5}  {'; '.join(extra)}")
    print(f"threshold mismatches: {mismatches}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--lo", type=int, default=-3)
    ap.add_argument("--hi", type=int, default=6)
    a = ap.parse_args()
    run(SweepConfig(a.lo, a.hi))
