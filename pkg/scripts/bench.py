#!/usr/bin/env python3
"""Wall-clock scaling of the recognizer and the bipartite level test.

    python3 scripts/bench.py --seeds 3
"""

import argparse
import time

from modcomp.bdh import check_bdh, independent_module_sequence, lex_bfs
from modcomp.generators import random_bipartite_dh, random_module_composed
from modcomp.recognize import recognize


def timed(fn, *args):
    t = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - t


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--seeds", type=int, default=3)
    parser.add_argument("--mc-sizes", type=int, nargs="*", default=[50, 100, 200, 400, 800])
    parser.add_argument("--bdh-sizes", type=int, nargs="*", default=[1_000, 10_000, 100_000, 300_000])
    args = parser.parse_args()

    print(f"{'n':>8} {'m':>9} {'generate':>9} {'recognize':>10}")
    for n in args.mc_sizes:
        for seed in range(args.seeds):
            (g, _), gen = timed(random_module_composed, n, seed)
            result, rec = timed(recognize, g)
            assert result, "generated graph rejected"
            print(f"{n:>8} {g.m:>9} {gen:>8.2f}s {rec:>9.3f}s")

    print(f"\n{'n':>8} {'m':>9} {'check_bdh':>10} {'sequence':>9} {'lex_bfs':>8}")
    for n in args.bdh_sizes:
        g = random_bipartite_dh(n, 0)
        ok, t_check = timed(check_bdh, g)
        _, t_seq = timed(independent_module_sequence, g)
        _, t_lex = timed(lex_bfs, g, 0)
        assert ok
        print(f"{n:>8} {g.m:>9} {t_check:>9.2f}s {t_seq:>8.2f}s {t_lex:>7.2f}s")


if __name__ == "__main__":
    main()
