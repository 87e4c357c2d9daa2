"""Acceptance criteria, one test each, with a PASS/FAIL line per criterion.

Run under pytest (the lines appear in the terminal summary) or directly with
``python3 tests/test_acceptance.py``.
"""

import io
import itertools
import random
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from omkit import cli
from omkit.altwords import alternation_number, oracle_words, preceq_b, solve_words, words_with_alternation_at_most
from omkit.chirotope import Chirotope, alternating_chirotope, chirotope_from_matrix, circuits_from_chirotope, dual
from omkit.colorful import conic_pipeline, find_rainbow_conic, verify_certificate as verify_conic
from omkit.covectors import check_height_bound, cocircuits, positive_vectors_eh, topes
from omkit.exact import RationalMatrix
from omkit.instances import random_conic_instance, random_matrix, random_topes, random_uniform_matrix
from omkit.lemmas import check_lemma_hh, check_lemma_jj, check_lemma_li
from omkit.rainbow import (
    build_chain_family,
    find_rainbow_simplex,
    random_labeling,
    sperner_family,
    subdivided_simplex,
    verify_chain_family,
)
from omkit.signvec import SignVector
from omkit.simplicial import Z2Chain, barycentric_subdivision, betti_vector, boundary
from omkit.transversal import (
    composite,
    fI_member,
    find_partition_transversal,
    find_transversal,
    verify_certificate as verify_transversal,
    verify_common_element,
)

from conftest import ACCEPTANCE_LINES, FIXTURES
from oracles import alternation

sv = SignVector.parse
SEED = 20240601


def acc1():
    m = RationalMatrix(((1, 1, 1, 0), (0, 0, 0, 1)))
    chi = chirotope_from_matrix(m)
    assert {str(t) for t in topes(chi)} == {"++++", "----", "+++-", "---+"}
    ts = [sv("++++"), sv("++++"), sv("---+"), sv("---+")]
    assert find_transversal(chi, ts, force=True) is None
    return "4 topes exactly; forced search returns none"


def acc2():
    for n in (3, 4, 5):
        chi = alternating_chirotope(n, 1)
        ts = [sv("+" * n), sv("-" * n)] + [sv("+" * n)] * (n - 2)
        assert find_transversal(chi, ts) is None
    return "none for n = 3, 4, 5"


def acc3():
    rng = random.Random(SEED)
    ok = 0
    for _ in range(200):
        r = rng.choice((2, 3))
        n = rng.randint(4, 7)
        chi = chirotope_from_matrix(random_uniform_matrix(r, n, rng))
        e = rng.randint(1, n)
        ts = random_topes(chi, n, rng, agree=(e, rng.choice((1, -1))))
        cert = verify_common_element(chi, ts)
        assert verify_transversal(chi, ts, cert)
        ok += 1
    assert ok == 200
    return f"{ok}/200 certified and re-verified"


def acc4():
    chi = alternating_chirotope(6, 3)
    all_t = topes(chi)
    assert len(all_t) == 32
    count = 0
    for combo in itertools.product(all_t, repeat=3):
        ts = list(combo)
        cert = find_partition_transversal(chi, ts, (2, 2, 2))
        assert verify_transversal(chi, ts, cert, (2, 2, 2))
        count += 1
    assert count == 32**3
    return f"{count} triples certified"


def acc5():
    total = 0
    for n in (4, 5):
        ws = words_with_alternation_at_most(n, 2)
        for combo in itertools.product(ws, repeat=n):
            sol = solve_words(combo)
            assert alternation_number(sol.result) <= 2
            assert "".join(combo[p - 1][i] for i, p in enumerate(sol.permutation)) == sol.result
            assert oracle_words(combo, "matching") is not None
            total += 1
    assert total == 8**4 + 10**5
    return f"{total} word tuples solved, oracle agrees"


def acc6():
    rng = random.Random(SEED)
    ok = piped = 0
    for _ in range(200):
        r = rng.choice((2, 3))
        n = rng.randint(r + 1, 8)
        m, e, circuits = random_conic_instance(r, n, rng, bound=rng.choice((1, 2, 10)))
        chi = chirotope_from_matrix(m)
        cert = find_rainbow_conic(chi, e, circuits)
        assert verify_conic(chi, circuits, cert, e)
        ok += 1
        if n <= 6:
            pc = conic_pipeline(m, e, circuits)
            assert verify_conic(chi, circuits, pc, e)
            piped += 1
    assert ok == 200
    return f"{ok}/200 certified; pipeline valid on all {piped} instances with n <= 6"


def acc7():
    rng = random.Random(SEED)
    for levels in (1, 2):
        t, carriers = subdivided_simplex(3, levels)
        fam, allowed = sperner_family(t, carriers)
        for _ in range(50):
            labels = random_labeling(allowed, rng)
            chains = build_chain_family(fam)
            assert verify_chain_family(fam, chains)
            s = find_rainbow_simplex(fam, labels, chains)
            assert s in t and len({labels[v] for v in s}) == 3
    return "100 labelings, chain identities re-verified, rainbow found"


def acc8():
    count = 0
    for r in (2, 3):
        for n in range(r, 7):
            chi = alternating_chirotope(n, r)
            res = check_lemma_jj(chi, [], [])
            b = list(res.betti) + [0] * 8
            assert b[r] == 1 and not any(b[:r]) and not any(b[r + 1:])
            for signs in itertools.product((0, 1, -1), repeat=n):
                if not any(signs):
                    continue
                jp = [j + 1 for j, s in enumerate(signs) if s > 0]
                jm = [j + 1 for j, s in enumerate(signs) if s < 0]
                res = check_lemma_jj(chi, jp, jm)
                assert res.holds
                if res.expected != "no claim":
                    assert not any(res.betti)
                    count += 1
    return f"spheres in the empty case; {count} non-empty sets with a tope acyclic"


def acc9():
    rng = random.Random(SEED)
    instances = 0
    while instances < 50:
        r = rng.randint(1, 3)
        n = rng.randint(r + 1, 6)
        chi = chirotope_from_matrix(random_matrix(r, n, rng, bound=rng.choice((1, 2))))
        e = rng.randint(1, n)
        if not positive_vectors_eh(chi, e, 1):
            continue
        for h in (1, 2, 3):
            res = check_lemma_hh(chi, e, h)
            assert res.holds and not any(res.betti[:h])
        instances += 1
    return f"{instances} instances, h = 1, 2, 3"


def acc10():
    count = 0
    for r in (2, 3):
        chi = alternating_chirotope(4, r)
        all_t = topes(chi)
        for k in (1, 2, 3):
            for combo in itertools.combinations_with_replacement(range(len(all_t)), k):
                ts = [all_t[i] for i in combo]
                for res in check_lemma_li(chi, ts, [list(range(1, k + 1))]):
                    assert res.holds
                    count += 1
    fig = [sv(w) for w in (FIXTURES / "three_topes_n8.txt").read_text().split()]
    tup = (2, 3, 3, 1, 2, 3, 1, 2)
    assert fI_member(alternating_chirotope(8, 3), fig, {1, 2, 3}, tup)
    assert alternation(str(composite(fig, tup))) <= 3
    return f"{count} box complexes pass; membership example holds"


def acc11():
    chis = [alternating_chirotope(n, r) for n in range(1, 7) for r in range(1, n + 1)]
    chis.append(Chirotope.from_string(4, 2, "00+0++"))
    rng = random.Random(SEED)
    for _ in range(60):
        r = rng.randint(1, 4)
        chis.append(chirotope_from_matrix(random_matrix(r, rng.randint(r, 6), rng, bound=rng.choice((1, 2, 10)))))
    assert all(check_height_bound(chi) for chi in chis)
    return f"{len(chis)} instances"


def _run_cli(argv):
    buf = io.StringIO()
    code = cli.run(argv, buf)
    return code, buf.getvalue()


def acc12():
    for n in range(1, 9):
        ws = words_with_alternation_at_most(n, 2)
        for a in ws:
            for b in ws:
                assert preceq_b(a, b) or preceq_b(b, a)
                assert not (preceq_b(a, b) and preceq_b(b, a)) or a == b
                for c in ws:
                    assert not (preceq_b(a, b) and preceq_b(b, c)) or preceq_b(a, c)
    rng = random.Random(SEED)
    chis = [alternating_chirotope(n, r) for n in range(1, 7) for r in range(1, n + 1)]
    chis += [chirotope_from_matrix(random_matrix(r, n, rng, bound=2)) for r in (1, 2, 3) for n in range(r, 7)]
    chis.append(Chirotope.from_string(4, 2, "00+0++"))
    for chi in chis:
        assert dual(dual(chi)) in (chi, -chi)
        assert circuits_from_chirotope(dual(chi)) == cocircuits(chi)
    from test_simplicial import FIXTURES as COMPLEXES
    for k in COMPLEXES.values():
        for d in range(1, k.dimension + 1):
            c = Z2Chain(d, set(k.faces_of_dim(d)))
            assert not boundary(boundary(c, k), k)
        assert betti_vector(barycentric_subdivision(k)) == betti_vector(k)
    argv = ["verify", "conic", "--random", "--trials", "10", "--seed", "7", "--json", "--no-timing"]
    assert _run_cli(argv) == _run_cli(argv)
    argv = ["explore", "q14", "--n", "5", "--r", "3", "--trials", "10", "--seed", "7", "--json", "--no-timing"]
    assert _run_cli(argv) == _run_cli(argv)
    return f"order laws n <= 8; duality on {len(chis)} chirotopes; {len(COMPLEXES)} complexes; reports stable"


CRITERIA = [
    (1, "counterexample matrix", acc1, 1),
    (2, "rank-1 counterexample", acc2, 1),
    (3, "common-element campaign", acc3, 120),
    (4, "partition exhaustive n=6 r=3", acc4, 600),
    (5, "alternating words exhaustive n=4,5", acc5, 300),
    (6, "conic colorful campaign", acc6, 300),
    (7, "Sperner engine", acc7, 60),
    (8, "covector-set homology", acc8, 120),
    (9, "positive-vector homology", acc9, 120),
    (10, "box-complex homology", acc10, 120),
    (11, "height bound", acc11, 60),
    (12, "structural suites", acc12, 300),
]


def run_criterion(num, label, func, limit):
    start = time.perf_counter()
    detail, ok = "", False
    try:
        detail = func()
        ok = True
    except AssertionError as exc:
        detail = f"assertion failed {exc}".strip()
    elapsed = time.perf_counter() - start
    if ok and elapsed >= limit:
        ok = False
        detail += f"; over the {limit}s limit"
    line = f"ACC{num} {'PASS' if ok else 'FAIL'} {label}: {detail} ({elapsed:.1f}s)"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok, line


@pytest.mark.parametrize("num,label,func,limit", CRITERIA, ids=[f"ACC{c[0]}" for c in CRITERIA])
def test_acceptance(num, label, func, limit):
    ok, line = run_criterion(num, label, func, limit)
    assert ok, line


if __name__ == "__main__":
    results = [run_criterion(*c)[0] for c in CRITERIA]
    sys.exit(0 if all(results) else 1)
