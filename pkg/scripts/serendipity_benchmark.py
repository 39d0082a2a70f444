#!/usr/bin/env python3
"""Time the closed-form serendipity counter against pairwise enumeration.

Random corpora grow in artwork count; each row reports both counts and the
wall time of each method. Pairwise enumeration is skipped once it would
exceed --brute-limit artworks.

    python scripts/serendipity_benchmark.py --seed 7 --sizes 100 1000 10000 100000
"""

from __future__ import annotations

import argparse
import random
import time
from itertools import combinations

from iiconforge.analytics import build_meaning_index, count_serendipity
from iiconforge.enricher import SymbolicInterpretation

EX = "http://example.org/"


def random_corpus(rng: random.Random, n_artworks: int, n_meanings: int, n_symbols: int, per_artwork: int):
    out = []
    for a in range(n_artworks):
        for _ in range(rng.randint(1, per_artwork)):
            s = rng.randrange(n_symbols)
            out.append(
                SymbolicInterpretation(
                    f"{EX}art/{a}", f"{EX}el/{s}", f"{EX}sym/{s}", f"{EX}mean/{rng.randrange(n_meanings)}", "Western"
                )
            )
    return out


def pairwise(index) -> int:
    total = 0
    for arts in index.values():
        for (_, sa), (_, sb) in combinations(arts.items(), 2):
            total += any(x != y for x in sa for y in sb)
    return total


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--sizes", type=int, nargs="+", default=[100, 1000, 10000])
    ap.add_argument("--meanings", type=int, default=50)
    ap.add_argument("--symbols", type=int, default=200)
    ap.add_argument("--per-artwork", type=int, default=8)
    ap.add_argument("--brute-limit", type=int, default=3000)
    args = ap.parse_args(argv)

    rng = random.Random(args.seed)
    print(f"{'artworks':>9} {'interps':>9} {'pair_meaning':>14} {'closed_s':>9} {'pairwise_s':>10}")
    for n in args.sizes:
        interps = random_corpus(rng, n, args.meanings, args.symbols, args.per_artwork)
        index = build_meaning_index(interps)
        start = time.perf_counter()
        result = count_serendipity(index, pair_cap=0)
        closed = time.perf_counter() - start
        brute = "-"
        if n <= args.brute_limit:
            start = time.perf_counter()
            if pairwise(index) != result.pair_meaning_count:
                raise SystemExit(f"mismatch at {n} artworks")
            brute = f"{time.perf_counter() - start:.3f}"
        print(f"{n:>9} {len(interps):>9} {result.pair_meaning_count:>14} {closed:>9.4f} {brute:>10}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
