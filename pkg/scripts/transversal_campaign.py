"""Tope transversal campaigns.

Random realizable uniform instances with topes agreeing on one element, the
exhaustive partition check on the alternating matroid, and a pipeline
cross-check on small cases.

    python3 scripts/transversal_campaign.py --trials 200 --seed 3
"""

import argparse
import itertools
import random
import time

from omkit.chirotope import alternating_chirotope, chirotope_from_matrix
from omkit.covectors import topes
from omkit.instances import random_topes, random_uniform_matrix
from omkit.transversal import (
    find_partition_transversal,
    transversal_pipeline,
    verify_certificate,
    verify_common_element,
)


def common_element_campaign(trials, rng):
    ok = 0
    for _ in range(trials):
        r = rng.choice((2, 3))
        n = rng.randint(4, 7)
        chi = chirotope_from_matrix(random_uniform_matrix(r, n, rng))
        ts = random_topes(chi, n, rng, agree=(rng.randint(1, n), rng.choice((1, -1))))
        ok += verify_certificate(chi, ts, verify_common_element(chi, ts))
    return ok


def partition_exhaustive(n, r, mult):
    chi = alternating_chirotope(n, r)
    count = 0
    for combo in itertools.product(topes(chi), repeat=r):
        cert = find_partition_transversal(chi, list(combo), mult)
        count += verify_certificate(chi, list(combo), cert, mult)
    return count


def pipeline_crosscheck(trials, rng):
    agree = 0
    for _ in range(trials):
        r = rng.choice((2, 3))
        chi = alternating_chirotope(4, r)
        ts = random_topes(chi, 4, rng, agree=(rng.randint(1, 4), rng.choice((1, -1))))
        agree += verify_certificate(chi, ts, transversal_pipeline(chi, ts))
    return agree


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--trials", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--pipeline-trials", type=int, default=20)
    args = ap.parse_args()
    rng = random.Random(args.seed)

    t = time.perf_counter()
    ok = common_element_campaign(args.trials, rng)
    print(f"common element: {ok}/{args.trials} certified ({time.perf_counter() - t:.1f}s)")
    for n, r, mult in [(6, 3, (2, 2, 2)), (6, 2, (3, 3)), (7, 3, (1, 3, 3))]:
        t = time.perf_counter()
        count = partition_exhaustive(n, r, mult)
        print(f"partition n={n} r={r} mult={mult}: {count} tope tuples certified ({time.perf_counter() - t:.1f}s)")
    t = time.perf_counter()
    ok = pipeline_crosscheck(args.pipeline_trials, rng)
    print(f"pipeline n=4: {ok}/{args.pipeline_trials} verified ({time.perf_counter() - t:.1f}s)")


if __name__ == "__main__":
    main()
