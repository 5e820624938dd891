#!/usr/bin/env python3
"""Run the standard census battery and write one JSON report per run.

    python3 scripts/run_census.py --outdir reports --jobs 1
"""

import argparse
import os
import sys
import time

from modcomp.census import CensusConfig, report_json, run_census, summarize

BATTERY = {
    "exhaustive_all_n1-6": CensusConfig(n_min=1, n_max=6),
    "exhaustive_bipartite_n1-7": CensusConfig(n_min=1, n_max=7, family="bipartite",
                                              classes=("bipartite", "hhdgFree", "dominoHoleFree", "chordal62",
                                                       "independentModuleComposed", "bdh")),
    "exhaustive_cograph_n1-7": CensusConfig(n_min=1, n_max=7, family="cograph",
                                            classes=("cograph", "co2C4free", "P4free", "C4free", "triviallyPerfect")),
    "random_n7-9": CensusConfig(mode="random", n_min=7, n_max=9, count=5000, seed=1),
}


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--outdir", default="reports")
    parser.add_argument("--jobs", type=int, default=1)
    parser.add_argument("--only", nargs="*", choices=sorted(BATTERY), help="run a subset")
    args = parser.parse_args()
    os.makedirs(args.outdir, exist_ok=True)
    violations = 0
    for name, cfg in BATTERY.items():
        if args.only and name not in args.only:
            continue
        cfg = CensusConfig(**{**cfg.__dict__, "jobs": args.jobs})
        started = time.perf_counter()
        report = run_census(cfg)
        path = os.path.join(args.outdir, f"{name}.json")
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(report_json(report))
        print(f"== {name} ({time.perf_counter() - started:.1f}s) -> {path}")
        print(summarize(report))
        violations += report["total_violations"] + report["recognize_vs_bruteforce"]["disagreements"]
    return 1 if violations else 0


if __name__ == "__main__":
    sys.exit(main())
