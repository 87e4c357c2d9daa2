import random

import pytest
from hypothesis import given, settings, strategies as st

from omkit.chirotope import Chirotope, alternating_chirotope, chirotope_from_matrix, circuits_from_chirotope
from omkit.config import use_limits
from omkit.covectors import (
    build_vector_poset,
    check_height_bound,
    cocircuits,
    covector_set_JJ,
    covectors,
    height,
    positive_vectors_eh,
    topes,
    vectors,
)
from omkit.errors import LimitExceeded, PreconditionError
from omkit.instances import random_matrix
from omkit.signvec import SignVector, compose, conforms

from oracles import alternating_topes, matrix_covectors, topes_from_covectors

sv = SignVector.parse
COUNTER = Chirotope.from_string(4, 2, "00+0++")


def matrices():
    return st.tuples(st.integers(1, 3), st.integers(0, 3), st.integers(0, 2**32)).map(
        lambda t: random_matrix(t[0], t[0] + t[1], random.Random(t[2]), bound=2))


def strs(vs):
    return {str(v) for v in vs}


def test_counterexample_topes_exact():
    assert strs(topes(COUNTER)) == {"++++", "----", "+++-", "---+"}
    # lexicographic with + before -
    assert [str(t) for t in topes(COUNTER)] == ["++++", "+++-", "---+", "----"]


@settings(max_examples=40)
@given(matrices())
def test_covectors_match_hyperplane_oracle(m):
    chi = chirotope_from_matrix(m)
    cov = matrix_covectors(m.rows)
    assert strs(covectors(chi)) == cov
    assert strs(topes(chi)) == topes_from_covectors(cov)


@pytest.mark.parametrize("n", range(2, 8))
def test_alternating_rank2_topes(n):
    ts = strs(topes(alternating_chirotope(n, 2)))
    assert ts == alternating_topes(n, 2)
    assert len(ts) == 2 * n


def test_alternating_rank3_n8_topes():
    assert strs(topes(alternating_chirotope(8, 3))) == alternating_topes(8, 3)


@pytest.mark.parametrize("chi", [COUNTER, alternating_chirotope(5, 2), alternating_chirotope(6, 3)], ids=str)
def test_basic_closure_facts(chi):
    z = SignVector.zero(chi.n)
    assert z in vectors(chi) and z in covectors(chi)
    assert len(topes(chi)) % 2 == 0
    cov = covectors(chi)
    sample = sorted(cov)[:25]
    assert all(compose(x, y) in cov for x in sample for y in sample)


def test_uniform_shapes():
    chi = alternating_chirotope(6, 3)
    assert all(list(c).count(0) == 2 for c in cocircuits(chi))
    assert all(0 not in t for t in topes(chi))


def test_conformal_order_is_partial_order_n4():
    import itertools
    allv = [SignVector(p) for p in itertools.product((-1, 0, 1), repeat=3)]
    for x in allv:
        assert conforms(x, x)
        for y in allv:
            if conforms(x, y) and conforms(y, x):
                assert x == y
            for z in allv:
                if conforms(x, y) and conforms(y, z):
                    assert conforms(x, z)


def test_heights():
    assert height(COUNTER, SignVector.zero(4)) == 0
    for c in circuits_from_chirotope(COUNTER):
        assert height(COUNTER, c) == 1
    x = sv("+-00")
    assert height(COUNTER, x) == 1 and len(x.support()) <= COUNTER.r + 1
    chi = alternating_chirotope(5, 2)
    cs = sorted(circuits_from_chirotope(chi))
    found = False
    for a in cs:
        for b in cs:
            sa, sb = a.support(), b.support()
            if not sa <= sb and not sb <= sa and sa & sb == set():
                pass
            if not sa <= sb and not sb <= sa:
                y = compose(a, b)
                if len(y.support()) == len(sa | sb) and y not in cs:
                    assert height(chi, y) >= 2
                    found = True
    assert found
    with pytest.raises(PreconditionError):
        height(COUNTER, sv("++00"))


def test_height_two_for_disjoint_circuits():
    # two disjoint circuits: composition sits exactly at height 2
    m = random_matrix(2, 4, random.Random(0))
    chi = chirotope_from_matrix(type(m)(((1, 1, 0, 0), (0, 0, 1, 1))))
    a, b = sv("+-00"), sv("00+-")
    assert a in circuits_from_chirotope(chi) and b in circuits_from_chirotope(chi)
    assert height(chi, compose(a, b)) == 2


def test_height_bound_examples():
    assert check_height_bound(COUNTER)
    assert check_height_bound(alternating_chirotope(6, 3))
    poset = build_vector_poset(COUNTER)
    assert poset.height(SignVector.zero(4)) == 0


@settings(max_examples=30)
@given(matrices())
def test_height_bound_random(m):
    assert check_height_bound(chirotope_from_matrix(m))


def test_positive_vectors_eh():
    m = type(random_matrix(1, 1, random.Random(0)))(((1, 0, -1, 1), (0, 1, -1, 1)))
    chi = chirotope_from_matrix(m)
    pcs = {c for c in circuits_from_chirotope(chi) if c.is_positive()}
    assert strs(pcs) == {"+++0", "00++"}
    v1 = positive_vectors_eh(chi, 3, 1)
    assert strs(v1) == {"+++0", "00++"}
    for x in positive_vectors_eh(chi, 3, 2):
        assert x(3) == 1
    assert positive_vectors_eh(alternating_chirotope(5, 2), 1, 3) == frozenset()
    # element 2 lies only in +++0, so 00++ is excluded at h = 1
    assert strs(positive_vectors_eh(chi, 2, 1)) == {"+++0"}


def test_covector_set_jj():
    assert covector_set_JJ(COUNTER, [], []) == covectors(COUNTER) - {SignVector.zero(4)}
    assert sv("++++") in covector_set_JJ(COUNTER, [4], [])
    with pytest.raises(PreconditionError):
        covector_set_JJ(COUNTER, [2], [2])


def test_enumeration_limit():
    with use_limits(max_n=5):
        with pytest.raises(LimitExceeded):
            covectors(alternating_chirotope(6, 2))
