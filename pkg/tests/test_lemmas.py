import itertools
import random

import pytest

from omkit.chirotope import Chirotope, alternating_chirotope, chirotope_from_matrix
from omkit.covectors import topes as all_topes
from omkit.instances import random_matrix, random_topes
from omkit.lemmas import check_lemma_hh, check_lemma_jj, check_lemma_li, hh_complex, jj_complex
from omkit.simplicial import betti_vector


def j_patterns(n):
    """All disjoint (J+, J-) pairs over [n]."""
    for signs in itertools.product((0, 1, -1), repeat=n):
        yield ([j + 1 for j, s in enumerate(signs) if s > 0],
               [j + 1 for j, s in enumerate(signs) if s < 0])


@pytest.mark.parametrize("n,r", [(n, r) for r in (2, 3) for n in range(r, 7)])
def test_empty_j_gives_sphere(n, r):
    chi = alternating_chirotope(n, r)
    res = check_lemma_jj(chi, [], [])
    assert res.holds
    b = list(res.betti)
    assert b[r] == 1 and not any(b[:r]) and not any(b[r + 1:])


@pytest.mark.parametrize("n,r", [(4, 2), (5, 2), (5, 3)])
def test_nonempty_j_with_tope_is_acyclic(n, r):
    chi = alternating_chirotope(n, r)
    for jp, jm in j_patterns(n):
        if not jp and not jm:
            continue
        res = check_lemma_jj(chi, jp, jm)
        assert res.holds, res
        if res.expected.startswith("acyclic"):
            assert not any(res.betti)


def test_jj_complex_direct():
    chi = Chirotope.from_string(4, 2, "00+0++")
    k = jj_complex(chi, [4], [])
    assert not any(betti_vector(k))


def test_hh_random_instances():
    rng = random.Random(9)
    checked = 0
    while checked < 25:
        r = rng.randint(2, 3)
        m = random_matrix(r, rng.randint(r + 1, 6), rng, bound=2)
        chi = chirotope_from_matrix(m)
        for e in range(1, chi.n + 1):
            for h in (1, 2, 3):
                res = check_lemma_hh(chi, e, h)
                assert res.holds, (m, e, h, res)
                if res.expected != "no claim":
                    checked += 1


def test_hh_empty_case():
    res = check_lemma_hh(alternating_chirotope(5, 2), 1, 2)
    assert res.holds and res.expected == "no claim"
    assert not hh_complex(alternating_chirotope(5, 2), 1, 2).faces


@pytest.mark.parametrize("r", [2, 3])
def test_li_alternating_n4(r):
    chi = alternating_chirotope(4, r)
    rng = random.Random(r)
    for _ in range(10):
        ts = random_topes(chi, 3, rng)
        for res in check_lemma_li(chi, ts):
            assert res.holds, res


def test_li_agreeing_topes_acyclic():
    chi = alternating_chirotope(4, 3)
    ts = [t for t in all_topes(chi) if t(2) == -1][:3]
    for res in check_lemma_li(chi, ts):
        assert res.expected.startswith("acyclic") and res.holds


def test_li_refuses_non_topes():
    from omkit.errors import PreconditionError
    from omkit.signvec import SignVector
    chi = alternating_chirotope(4, 2)
    with pytest.raises(PreconditionError):
        check_lemma_li(chi, [SignVector.parse("+-+-")] * 3)
