"""Randomised comparison of the specialised engine against the oracle.

For each random (presentation, Y) instance: saturate vs generic_saturate
(iso_rooted), and naive_member YES => submonoid_member.  Prints a summary
and optionally writes it as JSON.

    python3 scripts/oracle_sweep.py --instances 2000 --seed 3 --max-bl 5
"""
from __future__ import annotations

import argparse
import json
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path

from mxp import flower, iso_rooted, saturate, submonoid_member
from mxp.oracle import Evidence, generic_saturate, naive_member
from mxp.sampling import SamplingConfig


@dataclass
class SweepConfig:
    instances: int = 500
    len_bound: int = 2
    sampling: SamplingConfig = field(default_factory=SamplingConfig)


@dataclass
class SweepResult:
    instances: int = 0
    automaton_disagreements: int = 0
    membership_disagreements: int = 0
    naive_yes: int = 0
    engine_seconds: float = 0.0
    oracle_seconds: float = 0.0
    failures: list[str] = field(default_factory=list)


def sweep(cfg: SweepConfig) -> SweepResult:
    s = cfg.sampling
    rng = s.rng()
    out = SweepResult()
    for _ in range(cfg.instances):
        pres = s.presentation(rng)
        ys = s.generators(rng, pres)
        g = flower(ys, pres)
        t0 = time.perf_counter()
        ours = saturate(g).unwrap()
        t1 = time.perf_counter()
        ref = generic_saturate(g).unwrap()
        t2 = time.perf_counter()
        out.engine_seconds += t1 - t0
        out.oracle_seconds += t2 - t1
        out.instances += 1
        if not iso_rooted(ours, ref):
            out.automaton_disagreements += 1
            out.failures.append(f"{pres} | Y = {'; '.join(map(str, ys))}")
        w = s.word(rng, pres)
        if naive_member(w, ys, pres, cfg.len_bound) is Evidence.YES:
            out.naive_yes += 1
            if not submonoid_member(w, ys, pres):
                out.membership_disagreements += 1
                out.failures.append(f"{pres} | Y = {'; '.join(map(str, ys))} | w = {w}")
    return out


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--instances", type=int, default=500)
    ap.add_argument("--len-bound", type=int, default=2)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-x", type=int, default=2)
    ap.add_argument("--max-p", type=int, default=1)
    ap.add_argument("--max-bl", type=int, default=4)
    ap.add_argument("--max-gens", type=int, default=3)
    ap.add_argument("--max-len", type=int, default=6)
    ap.add_argument("--json", type=Path, help="write the summary here")
    args = ap.parse_args()
    cfg = SweepConfig(args.instances, args.len_bound,
                      SamplingConfig(args.seed, args.max_x, args.max_p, args.max_bl,
                                     args.max_gens, args.max_len))
    result = sweep(cfg)
    print(f"instances: {result.instances}")
    print(f"automaton disagreements: {result.automaton_disagreements}")
    print(f"naive YES: {result.naive_yes}, membership disagreements: {result.membership_disagreements}")
    print(f"engine {result.engine_seconds:.3f} s, oracle {result.oracle_seconds:.3f} s")
    for line in result.failures[:10]:
        print("  " + line)
    if args.json:
        args.json.write_text(json.dumps({"config": asdict(cfg), "result": asdict(result)}, indent=2))


if __name__ == "__main__":
    main()
