import itertools
import random
from collections import Counter

import pytest
from hypothesis import given, strategies as st

from omkit.altwords import (
    DiagonalCycle,
    GridWalk,
    alternation_number,
    b_key,
    build_grid_walk,
    crossings,
    find_diagonal_cycle,
    marked_arcs,
    oracle_words,
    parse_words,
    preceq_b,
    solve_words,
    words_with_alternation_at_most,
)
from omkit.errors import ParseError, PreconditionError

from conftest import FIXTURES
from oracles import words_permutation_exists


def longest_alternating_subword(w: str) -> int:
    """DP over subsequences: best[c] = longest alternating subsequence ending in symbol c."""
    best = {"+": 0, "-": 0}
    for c in w:
        other = "-" if c == "+" else "+"
        best[c] = max(best[c], best[other] + 1)
    return max(best.values())


def drawn_walk() -> GridWalk:
    arcs = [("V", 1, 1)]
    arcs += [("H", i, 2) for i in range(1, 4)] + [("V", 4, 2), ("V", 4, 3)]
    arcs += [("H", i, 4) for i in range(4, 10)] + [("V", 1, 4)]
    arcs += [("H", 1, 5), ("H", 2, 5), ("V", 3, 5), ("V", 3, 6)]
    arcs += [("H", i, 7) for i in range(3, 7)] + [("V", 7, 7), ("V", 7, 8)]
    arcs += [("H", i, 9) for i in range(7, 10)] + [("V", 1, 9)]
    return GridWalk(9, tuple(arcs))


def sorted_words(ws):
    return sorted(ws, key=b_key)


def test_alternation_examples():
    assert alternation_number("+") == 1
    assert alternation_number("++--+") == 3
    assert alternation_number("+-+-") == 4
    with pytest.raises(PreconditionError):
        alternation_number("")


@pytest.mark.parametrize("n", range(1, 13))
def test_run_count_identity(n):
    for w in map("".join, itertools.product("+-", repeat=n)):
        runs = sum(1 for _ in itertools.groupby(w))
        assert alternation_number(w) == runs
        if n <= 10:
            assert runs == longest_alternating_subword(w)


def test_preceq_examples():
    assert preceq_b("++", "+-")
    assert preceq_b("++", "-+")
    assert not preceq_b("-+", "++")
    with pytest.raises(PreconditionError):
        preceq_b("+-+", "+++")


@pytest.mark.parametrize("n", range(1, 9))
def test_preceq_total_order_laws(n):
    ws = words_with_alternation_at_most(n, 2)
    assert len(ws) == 2 * n
    for a in ws:
        assert preceq_b(a, a)
        for b in ws:
            assert preceq_b(a, b) or preceq_b(b, a)
            if preceq_b(a, b) and preceq_b(b, a):
                assert a == b
            assert preceq_b(a, b) == (b_key(a) <= b_key(b))
            for c in ws:
                if preceq_b(a, b) and preceq_b(b, c):
                    assert preceq_b(a, c)


def check_walk(walk, n):
    c = walk.counts()
    assert c["V"] == n and c["H"] <= 2 * n and not c["D"]
    assert not walk.check_invariants()


def test_words_n9_instance():
    ws = parse_words((FIXTURES / "words_n9.txt").read_text())
    assert len(ws) == 9 and all(len(w) == 9 for w in ws)
    walk = build_grid_walk(sorted_words(ws))
    check_walk(walk, 9)
    sol = solve_words(ws)
    assert alternation_number(sol.result) <= 2
    assert sorted(sol.permutation) == list(range(1, 10))
    assert "".join(ws[p - 1][i] for i, p in enumerate(sol.permutation)) == sol.result
    assert oracle_words(ws) is not None
    assert sol.crossings <= 1


def test_two_word_alphabet_example():
    ws = sorted_words(["++-", "+--", "---"])
    walk = build_grid_walk(ws)
    check_walk(walk, 3)
    assert alternation_number(solve_words(["++-", "+--", "---"]).result) <= 2


def test_identical_words():
    for n in range(1, 7):
        for w in words_with_alternation_at_most(n, 2):
            sol = solve_words([w] * n)
            assert sol.result == w
            assert sol.crossings == 0


def test_all_plus_walk_repair_case_b():
    n = 5
    arcs, case = marked_arcs(["+" * n] * n)
    # degrees already balance: n constant-word vertical arcs, nothing to repair
    assert case == "none" and not any(a[0] == "H" for a in arcs)
    walk = build_grid_walk(["+" * n] * n)
    check_walk(walk, n)
    assert sum(1 for a in walk.arcs if a[0] == "V" and a[1] == 1) == n
    _, count = find_diagonal_cycle(walk)
    assert count <= 1


def test_walk_without_horizontal_arcs():
    walk = GridWalk(4, tuple(("V", 1, j) for j in range(1, 5)))
    cycle, count = find_diagonal_cycle(walk)
    assert cycle.offset == 0 and count <= 1
    assert len(cycle.arcs) == 4 and all(a[0] == "D" for a in cycle.arcs)


def test_drawn_walk_fixture():
    walk = drawn_walk()
    check_walk(walk, 9)
    assert crossings(walk, 4) == [(9, 4)]
    cycle, count = find_diagonal_cycle(walk)
    assert count <= 1
    assert len(crossings(walk, cycle.offset)) == count
    assert all(((j - i) % 9) == 4 for i, j in DiagonalCycle(9, 4).vertices())


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_exhaustive_small_n_with_oracle(n):
    ws_all = words_with_alternation_at_most(n, 2)
    for combo in itertools.product(ws_all, repeat=n):
        sol = solve_words(list(combo))
        assert alternation_number(sol.result) <= 2
        assert sorted(sol.permutation) == list(range(1, n + 1))
        assert "".join(combo[p - 1][i] for i, p in enumerate(sol.permutation)) == sol.result
        assert words_permutation_exists(list(combo))
        assert sol.crossings <= 1


def test_oracle_modes_agree_sampled_n5():
    rng = random.Random(5)
    ws_all = words_with_alternation_at_most(5, 2)
    for _ in range(300):
        combo = [rng.choice(ws_all) for _ in range(5)]
        a = oracle_words(combo, "permutation")
        b = oracle_words(combo, "matching")
        assert (a is None) == (b is None)


def test_oracle_finds_none_when_alternation_exceeds():
    # words with three runs are outside the theorem; the oracle may legitimately say none
    assert oracle_words(["+-+", "+-+", "+-+"]) is None
    assert oracle_words(["+" * 4] * 4) == (1, 2, 3, 4)


@given(st.integers(2, 7).flatmap(lambda n: st.lists(
    st.sampled_from(words_with_alternation_at_most(n, 2)), min_size=n, max_size=n)))
def test_solver_random(ws):
    sol = solve_words(ws)
    assert alternation_number(sol.result) <= 2
    assert sorted(sol.permutation) == list(range(1, len(ws) + 1))


def test_input_errors():
    with pytest.raises(PreconditionError):
        solve_words(["+-+", "+++", "+++"])
    with pytest.raises(PreconditionError):
        solve_words(["++", "++", "++"])
    with pytest.raises(PreconditionError):
        build_grid_walk(["--", "++"])
    with pytest.raises(ParseError):
        parse_words("++\n+")
    with pytest.raises(ParseError):
        parse_words("+a")
