"""Random colorful campaigns: conic and convex versions, search plus pipeline.

    python3 scripts/conic_campaign.py --trials 500 --seed 1 --n-max 8
"""

import argparse
import random
import time
from collections import Counter

from omkit.chirotope import chirotope_from_matrix
from omkit.colorful import conic_pipeline, find_rainbow_conic, find_rainbow_convex, verify_certificate
from omkit.instances import random_conic_instance, random_convex_instance


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--trials", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--n-max", type=int, default=8)
    ap.add_argument("--pipeline-n", type=int, default=6)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    stats = Counter()
    start = time.perf_counter()
    for _ in range(args.trials):
        r = rng.choice((2, 3))
        n = rng.randint(r + 1, args.n_max)
        m, e, circuits = random_conic_instance(r, n, rng, bound=rng.choice((1, 2, 10)))
        chi = chirotope_from_matrix(m)
        cert = find_rainbow_conic(chi, e, circuits)
        stats["conic certified"] += verify_certificate(chi, circuits, cert, e)
        stats[f"circuit size {len(cert.circuit.support())}"] += 1
        if n <= args.pipeline_n:
            pc = conic_pipeline(m, e, circuits)
            stats["pipeline certified"] += verify_certificate(chi, circuits, pc, e)
            stats["pipeline same circuit"] += pc.circuit == cert.circuit

        mc, cc = random_convex_instance(r, rng.randint(r, args.n_max), rng, bound=rng.choice((1, 2, 10)))
        chi_c = chirotope_from_matrix(mc)
        stats["convex certified"] += verify_certificate(chi_c, cc, find_rainbow_convex(chi_c, cc))

    print(f"trials {args.trials}, seed {args.seed}, {time.perf_counter() - start:.1f}s")
    for key in sorted(stats):
        print(f"  {key:<24} {stats[key]}")


if __name__ == "__main__":
    main()
