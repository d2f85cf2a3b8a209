"""Command-line entry point: ``hnstrata {gamma,lambda,check,verify,polygons}``.

Exit codes: 0 ok, 1 negative answer, 2 invalid input, 3 size limits, 4 I/O.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from dataclasses import dataclass
from typing import List, Optional, Sequence

from .hncheck import check_hn_vector, verify_equivalence
from .isodata import (HodgeData, NewtonData, hodge_from_tuple, instance_to_dict, load_instance,
                      newton_from_slopes, newton_from_tuple, random_instance)
from .numvec import MalformedInstance, rtuple
from .polyio import export_csv, export_svg, is_convex, polygon_of
from .strata import HNVector, enumerate_gamma, hn_vector, lambda_fibers, stratum_rank, stratum_record

EXIT_OK, EXIT_NO, EXIT_INVALID, EXIT_LIMIT, EXIT_IO = 0, 1, 2, 3, 4

DEFAULT_MAX_D = 12
DEFAULT_MAX_L = 10


class LimitExceeded(Exception):
    pass


@dataclass
class InstanceConfig:
    newton: NewtonData
    hodge: HodgeData
    max_d: int = DEFAULT_MAX_D
    max_l: int = DEFAULT_MAX_L
    force: bool = False
    out_dir: str = "."

    def check_limits(self) -> None:
        if self.force:
            return
        if self.newton.d > self.max_d or self.newton.l > self.max_l:
            raise LimitExceeded(
                f"instance has d={self.newton.d}, l={self.newton.l}; limits are "
                f"d<={self.max_d}, l<={self.max_l} (use --force or raise --max-d/--max-l)")


def _split_list(text: str) -> List[str]:
    return [t for t in text.replace(";", ",").split(",") if t.strip()]


def load_config(args) -> InstanceConfig:
    if args.instance:
        if args.slopes or args.nu or args.mu:
            raise MalformedInstance("give either --instance or inline --slopes/--nu/--mu, not both")
        try:
            n, h = load_instance(args.instance)
        except OSError as exc:
            raise MalformedInstance(f"cannot read instance file: {exc}") from exc
    else:
        if bool(args.slopes) == bool(args.nu) or not args.mu:
            raise MalformedInstance("need --instance FILE, or --mu with exactly one of --slopes/--nu")
        n = newton_from_slopes(_split_list(args.slopes)) if args.slopes else newton_from_tuple(_split_list(args.nu))
        h = hodge_from_tuple(_split_list(args.mu))
        if n.d != h.d:
            raise MalformedInstance(f"Hodge vector has length {h.d} but the isocrystal has dimension {n.d}")
    return InstanceConfig(n, h, args.max_d, args.max_l, args.force, getattr(args, "out", ".") or ".")


def _instance_line(n: NewtonData, h: HodgeData) -> str:
    return json.dumps(instance_to_dict(n, h), sort_keys=True)


def cmd_gamma(cfg: InstanceConfig, out=None) -> int:
    out = out or sys.stdout
    strata = enumerate_gamma(cfg.newton, cfg.hodge)
    os.makedirs(cfg.out_dir, exist_ok=True)
    path = os.path.join(cfg.out_dir, "strata.jsonl")
    with open(path, "w") as fh:
        for s in strata:
            fh.write(json.dumps(stratum_record(s), sort_keys=True) + "\n")
    print(f"instance: {_instance_line(cfg.newton, cfg.hodge)}", file=out)
    print(f"|Gamma| = {len(strata)}", file=out)
    for i, s in enumerate(strata):
        print(f"  [{i}] r={s.r} {s.label()} lambda_gamma={hn_vector(s)} rank={stratum_rank(s)}", file=out)
    print(f"strata table: {path}", file=out)
    return EXIT_OK


def cmd_lambda(cfg: InstanceConfig, out=None) -> int:
    out = out or sys.stdout
    fibers = lambda_fibers(cfg.newton, cfg.hodge)
    print(f"instance: {_instance_line(cfg.newton, cfg.hodge)}", file=out)
    print(f"|Lambda| = {len(fibers)}", file=out)
    injective = True
    for lam, strata in fibers.items():
        flag = ""
        if len(strata) > 1:
            injective = False
            flag = "  non-injective"
        print(f"  {lam}  fiber size {len(strata)}{flag}", file=out)
        for s in strata:
            print(f"      {s.label()}", file=out)
    print("Gamma -> Lambda is " + ("injective" if injective else "non-injective"), file=out)
    return EXIT_OK


def parse_lambda(text: str, d: int) -> HNVector:
    lam = rtuple(_split_list(text.strip("()[] ")))
    if len(lam) != d:
        raise MalformedInstance(f"lambda has {len(lam)} entries, instance has d={d}")
    return HNVector(lam)


def cmd_check(cfg: InstanceConfig, lam_text: str, out=None) -> int:
    out = out or sys.stdout
    lam = parse_lambda(lam_text, cfg.newton.d)
    wit = check_hn_vector(lam, cfg.newton, cfg.hodge)
    if wit is None:
        print(f"{lam}: not an HN-vector", file=out)
        return EXIT_NO
    print(f"{lam}: HN-vector", file=out)
    print("witness: " + json.dumps(wit.to_json()), file=out)
    return EXIT_OK


def _verify_one(n, h, out) -> bool:
    report = verify_equivalence(n, h)
    if not report.ok:
        print("MISMATCH on instance " + _instance_line(n, h), file=out)
        for line in report.lines():
            print("  " + line, file=out)
    return report.ok


def cmd_verify(cfg: Optional[InstanceConfig], n_random: int = 0, seed: int = 0, max_d: int = 6,
               out=None) -> int:
    out = out or sys.stdout
    if n_random:
        rng = random.Random(seed)
        failures = 0
        for _ in range(n_random):
            n, h = random_instance(rng, max_d)
            failures += not _verify_one(n, h, out)
        print(f"verified {n_random} random instances (seed={seed}, max d={max_d}): "
              f"{failures} mismatches", file=out)
        return EXIT_OK if failures == 0 else EXIT_NO
    report = verify_equivalence(cfg.newton, cfg.hodge)
    print(f"instance: {_instance_line(cfg.newton, cfg.hodge)}", file=out)
    for line in report.lines():
        print(line, file=out)
    print("equal" if report.ok else "MISMATCH", file=out)
    return EXIT_OK if report.ok else EXIT_NO


def cmd_polygons(cfg: InstanceConfig, out=None) -> int:
    out = out or sys.stdout
    strata = enumerate_gamma(cfg.newton, cfg.hodge)
    written = 0
    try:
        os.makedirs(cfg.out_dir, exist_ok=True)
        for i, s in enumerate(strata):
            poly = polygon_of(s)
            if not is_convex(poly):
                print(f"warning: polygon of {s.label()} is not convex", file=out)
            stem = os.path.join(cfg.out_dir, f"stratum_{i:03d}")
            with open(stem + ".csv", "w") as fh:
                fh.write(export_csv(poly))
            with open(stem + ".svg", "w") as fh:
                fh.write(export_svg(poly, title=s.label()))
            written += 1
    except OSError as exc:
        print(f"error: cannot write polygons: {exc}", file=sys.stderr)
        return EXIT_IO
    print(f"wrote {written} CSV and {written} SVG files to {cfg.out_dir}", file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hnstrata", description=__doc__.splitlines()[0])
    parser.add_argument("--instance", help="instance JSON file")
    parser.add_argument("--slopes", help="simple-summand slopes, e.g. '1/2,0'")
    parser.add_argument("--nu", help="Newton d-tuple, e.g. '1/2,1/2,0'")
    parser.add_argument("--mu", help="Hodge tuple, e.g. '4,1,0'")
    parser.add_argument("--force", action="store_true", help="ignore size limits")
    parser.add_argument("--max-d", type=int, default=DEFAULT_MAX_D, dest="max_d")
    parser.add_argument("--max-l", type=int, default=DEFAULT_MAX_L, dest="max_l")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gamma", help="enumerate the strata")
    p.add_argument("--out", default=".", help="directory for strata.jsonl")
    sub.add_parser("lambda", help="list HN-vectors with their fibers")
    p = sub.add_parser("check", help="decide whether a tuple is an HN-vector")
    p.add_argument("--lambda", dest="lam", required=True, help="e.g. '3/2,3/2,1'")
    p = sub.add_parser("verify", help="cross-check strata against witnesses")
    p.add_argument("--random", type=int, default=0, dest="n_random", metavar="N")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-d", type=int, default=6, dest="random_max_d", metavar="D")
    p = sub.add_parser("polygons", help="write one CSV and SVG polygon per stratum")
    p.add_argument("--out", required=True)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify" and args.n_random:
            return cmd_verify(None, args.n_random, args.seed, args.random_max_d)
        cfg = load_config(args)
        cfg.check_limits()
        if args.command == "gamma":
            return cmd_gamma(cfg)
        if args.command == "lambda":
            return cmd_lambda(cfg)
        if args.command == "check":
            return cmd_check(cfg, args.lam)
        if args.command == "verify":
            return cmd_verify(cfg)
        return cmd_polygons(cfg)
    except MalformedInstance as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except LimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
