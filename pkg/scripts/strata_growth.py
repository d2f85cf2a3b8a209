"""How |Gamma| and |Lambda| grow with d for the trivial isocrystal and generic Hodge types."""

import argparse
import time

from hnstrata import hodge_from_tuple, newton_from_slopes
from hnstrata.strata import enumerate_gamma, hn_vector


def run(max_d: int):
    print(f"{'d':>2} {'|Gamma|':>8} {'|Lambda|':>9} {'max fiber':>9} {'sec':>7}")
    for d in range(1, max_d + 1):
        n = newton_from_slopes([0] * d)
        mu = list(range(d - 1, -1, -1))
        mu = [m * m for m in mu]  # spread out so few sums coincide
        t0 = time.perf_counter()
        strata = enumerate_gamma(n, hodge_from_tuple(mu))
        fibers = {}
        for s in strata:
            fibers.setdefault(hn_vector(s), []).append(s)
        dt = time.perf_counter() - t0
        print(f"{d:>2} {len(strata):>8} {len(fibers):>9} {max(map(len, fibers.values())):>9} {dt:>7.2f}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-d", type=int, default=6)
    run(ap.parse_args().max_d)
