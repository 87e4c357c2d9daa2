"""Search random uniform instances for topes without a transversal tope.

Hypotheses that force a transversal (agreement on an element, at most r
distinct topes, rank 2) are recorded per instance; a "none" outside all of
them is a genuine example for the open question, a "none" inside one would be
a bug.

    python3 scripts/explore_q14.py --grid 4:6 --ranks 3,4 --trials 300
"""

import argparse
import random
from collections import Counter

from omkit.chirotope import chirotope_from_matrix
from omkit.instances import random_topes, random_uniform_matrix
from omkit.transversal import common_elements, find_transversal


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--grid", default="4:6", help="range of n, inclusive, as lo:hi")
    ap.add_argument("--ranks", default="3,4")
    ap.add_argument("--trials", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--show", type=int, default=3, help="print this many examples per cell")
    args = ap.parse_args()
    lo, hi = (int(x) for x in args.grid.split(":"))
    rng = random.Random(args.seed)

    for n in range(lo, hi + 1):
        for r in (int(x) for x in args.ranks.split(",")):
            if r >= n:
                continue
            tally = Counter()
            shown = 0
            for _ in range(args.trials):
                chi = chirotope_from_matrix(random_uniform_matrix(r, n, rng))
                ts = random_topes(chi, n, rng)
                covered = bool(common_elements(ts)) or len(set(ts)) <= r
                found = find_transversal(chi, ts) is not None
                tally[("covered" if covered else "open", "found" if found else "none")] += 1
                if not found and shown < args.show:
                    print(f"  n={n} r={r} none: {' '.join(str(t) for t in ts)}")
                    shown += 1
            print(f"n={n} r={r}: " + ", ".join(f"{a}/{b} {c}" for (a, b), c in sorted(tally.items())))
            assert tally[("covered", "none")] == 0


if __name__ == "__main__":
    main()
