"""Cross-check strata against witness search on seeded random instances, with timings."""

import argparse
import random
import time
from dataclasses import dataclass

from hnstrata.hncheck import verify_equivalence
from hnstrata.isodata import instance_to_dict, random_instance


@dataclass
class RunConfig:
    count: int = 100
    seed: int = 7
    max_d: int = 6


def run(cfg: RunConfig):
    rng = random.Random(cfg.seed)
    t_all = time.perf_counter()
    worst = (0.0, None)
    failures = 0
    total_strata = 0
    for _ in range(cfg.count):
        n, h = random_instance(rng, cfg.max_d)
        t0 = time.perf_counter()
        rep = verify_equivalence(n, h)
        dt = time.perf_counter() - t0
        total_strata += rep.n_strata
        if dt > worst[0]:
            worst = (dt, instance_to_dict(n, h))
        if not rep.ok:
            failures += 1
            print("MISMATCH", instance_to_dict(n, h))
            for line in rep.lines():
                print("  " + line)
    print(f"{cfg.count} instances, {total_strata} strata, {failures} mismatches, "
          f"{time.perf_counter() - t_all:.2f} s total")
    print(f"slowest instance ({worst[0]:.3f} s): {worst[1]}")
    return failures


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=100)
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--max-d", type=int, default=6)
    a = ap.parse_args()
    raise SystemExit(1 if run(RunConfig(a.count, a.seed, a.max_d)) else 0)
