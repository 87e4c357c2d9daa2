"""Homology checks behind the connectivity lemmas, over small families.

    python3 scripts/lemma_checks.py
"""

import itertools
import random
import time

from omkit.chirotope import alternating_chirotope, chirotope_from_matrix
from omkit.covectors import topes
from omkit.instances import random_matrix
from omkit.lemmas import check_lemma_hh, check_lemma_jj, check_lemma_li


def covector_sets(n_max=6):
    done = 0
    for r in (2, 3):
        for n in range(r, n_max + 1):
            chi = alternating_chirotope(n, r)
            for signs in itertools.product((0, 1, -1), repeat=n):
                jp = [j + 1 for j, s in enumerate(signs) if s > 0]
                jm = [j + 1 for j, s in enumerate(signs) if s < 0]
                assert check_lemma_jj(chi, jp, jm).holds
                done += 1
    return done


def positive_vectors(trials=200, seed=0):
    rng = random.Random(seed)
    done = 0
    for _ in range(trials):
        r = rng.randint(1, 3)
        chi = chirotope_from_matrix(random_matrix(r, rng.randint(r + 1, 6), rng, bound=rng.choice((1, 2))))
        for e in range(1, chi.n + 1):
            for h in (1, 2, 3):
                assert check_lemma_hh(chi, e, h).holds
                done += 1
    return done


def box_complexes():
    done = 0
    for r in (2, 3):
        chi = alternating_chirotope(4, r)
        ts = topes(chi)
        for k in (1, 2, 3):
            for combo in itertools.combinations_with_replacement(ts, k):
                for res in check_lemma_li(chi, list(combo), [list(range(1, k + 1))]):
                    assert res.holds
                    done += 1
    return done


def main():
    for name, fn in [("covector sets", covector_sets), ("positive vectors", positive_vectors),
                     ("box complexes", box_complexes)]:
        t = time.perf_counter()
        print(f"{name}: {fn()} checks hold ({time.perf_counter() - t:.1f}s)")


if __name__ == "__main__":
    main()
