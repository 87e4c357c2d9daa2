"""Exhaustive alternating-words campaign with crossing statistics.

For every n-tuple of words of length n with at most one sign change, run
the diagonal solver, confirm with the brute-force oracle and tally how
often the selected diagonal cycle is crossed 0 or 1 times.

    python3 scripts/words_campaign.py --n-max 5
"""

import argparse
import itertools
import time
from collections import Counter

from omkit.altwords import alternation_number, oracle_words, solve_words, words_with_alternation_at_most


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--n-max", type=int, default=5)
    ap.add_argument("--no-oracle", action="store_true")
    args = ap.parse_args()

    for n in range(1, args.n_max + 1):
        t = time.perf_counter()
        crossings = Counter()
        shifts = Counter()
        total = 0
        for combo in itertools.product(words_with_alternation_at_most(n, 2), repeat=n):
            sol = solve_words(combo)
            assert alternation_number(sol.result) <= 2
            if not args.no_oracle:
                assert oracle_words(combo, "matching") is not None
            crossings[sol.crossings] += 1
            shifts[sol.shift] += 1
            total += 1
        print(f"n={n}: {total} instances, crossings {dict(sorted(crossings.items()))}, "
              f"shifts {dict(sorted(shifts.items()))} ({time.perf_counter() - t:.1f}s)")


if __name__ == "__main__":
    main()
