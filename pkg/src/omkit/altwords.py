"""Binary words with alternation number at most two, and the diagonal solver.

Given n words w^1..w^n of length n over {+, -}, each with at most one sign
change, `solve_words` finds a shift k such that the diagonal word
w_1^{1+k} w_2^{2+k} ... w_n^{n+k} (row indices mod n) also has at most one
sign change.  The construction:

1. sort the words by the total order `preceq_b`;
2. mark the +/- boundary of the n x n sign matrix as arcs of the toroidal
   grid digraph (one vertical arc per row, horizontal arcs between rows),
   doubling a horizontal run to repair the single imbalanced vertex pair;
3. traverse the marked arcs as one closed walk (Hierholzer);
4. take the diagonal cycle with the smallest offset that the walk never
   crosses at the head of a vertical arc; the walk crosses it at most once,
   and every sign change of the diagonal word needs a crossing.

Grid conventions: vertex (i, j) has column i and row j, both in 1..n with
n + 1 identified with 1.  Horizontal arcs go (i, j) -> (i + 1, j), vertical
arcs (i, j) -> (i, j + 1), diagonal arcs (i, j) -> (i + 1, j + 1).  Cell
(i, j) holds w_i^j and has vertex (i, j) as its upper-left corner.  The
diagonal cycle with offset k runs through the vertices with j - i = k mod n,
so it cuts through the cells of the diagonal word for shift k.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass

from .errors import LimitExceeded, OMError, ParseError, PreconditionError, TheoremViolation
from .matching import saturating_matching

PLUS, MINUS = "+", "-"


def as_word(w) -> str:
    if isinstance(w, str):
        word = w
    else:
        word = "".join(PLUS if s > 0 else MINUS for s in w)
    if not word:
        raise PreconditionError("empty word")
    if set(word) - {PLUS, MINUS}:
        raise PreconditionError(f"word {word!r} must use only '+' and '-'")
    return word


def alternation_number(w) -> int:
    """Length of the longest alternating subword, i.e. the number of maximal runs."""
    word = as_word(w)
    return 1 + sum(1 for a, b in zip(word, word[1:]) if a != b)


def preceq_b(w, w2) -> bool:
    """The total order on words of equal length with alternation number <= 2."""
    w, w2 = as_word(w), as_word(w2)
    if len(w) != len(w2):
        raise PreconditionError("words of different lengths")
    if alternation_number(w) > 2 or alternation_number(w2) > 2:
        raise PreconditionError("preceq_b is only defined for alternation number <= 2")
    if w[-1] == PLUS and w2[-1] == MINUS:
        return True
    if w[-1] == w2[-1] == PLUS:
        return all(b == MINUS for a, b in zip(w, w2) if a == MINUS)
    if w[-1] == w2[-1] == MINUS:
        return all(b == PLUS for a, b in zip(w, w2) if a == PLUS)
    return False


def b_key(w: str) -> tuple[int, int]:
    """Sort key realizing preceq_b: words ending in + first, then by nested sign sets."""
    if w[-1] == PLUS:
        return 0, w.count(MINUS)
    return 1, w.count(PLUS)


def words_with_alternation_at_most(n: int, a: int) -> list[str]:
    return ["".join(p) for p in itertools.product((PLUS, MINUS), repeat=n)
            if alternation_number("".join(p)) <= a]


# grid walks -----------------------------------------------------------------

# arcs are (kind, i, j) with kind in "H", "V", "D" and (i, j) the tail
Arc = tuple[str, int, int]


def arc_head(arc: Arc, n: int) -> tuple[int, int]:
    kind, i, j = arc
    if kind == "H":
        return i % n + 1, j
    if kind == "V":
        return i, j % n + 1
    return i % n + 1, j % n + 1


def diagonal_offset(vertex: tuple[int, int], n: int) -> int:
    i, j = vertex
    return (j - i) % n


@dataclass(frozen=True)
class GridWalk:
    """A closed walk of horizontal and vertical arcs on the toroidal grid.

    ``arcs`` is the cyclic traversal order; the multiset of arcs is
    ``Counter(arcs)``.
    """

    n: int
    arcs: tuple[Arc, ...]

    def __post_init__(self):
        n = self.n
        for a, b in zip(self.arcs, self.arcs[1:] + self.arcs[:1]):
            if a[0] not in "HVD" or not (1 <= a[1] <= n and 1 <= a[2] <= n):
                raise PreconditionError(f"bad arc {a!r}")
            if arc_head(a, n) != (b[1], b[2]):
                raise PreconditionError(f"arcs {a!r} and {b!r} are not consecutive")

    def counts(self) -> Counter:
        return Counter(a[0] for a in self.arcs)

    def multiset(self) -> Counter:
        return Counter(self.arcs)

    def turns(self):
        """(incoming arc, outgoing arc, vertex) for every consecutive pair, cyclically."""
        arcs = self.arcs
        for a, b in zip(arcs, arcs[1:] + arcs[:1]):
            yield a, b, (b[1], b[2])

    def check_invariants(self) -> list[str]:
        problems = []
        c = self.counts()
        if c["V"] != self.n:
            problems.append(f"{c['V']} vertical arcs, expected {self.n}")
        if c["H"] > 2 * self.n:
            problems.append(f"{c['H']} horizontal arcs exceed {2 * self.n}")
        if c["D"]:
            problems.append("walk uses diagonal arcs")
        indeg, outdeg = _degrees(self.arcs, self.n)
        if indeg != outdeg:
            problems.append("unbalanced degrees")
        return problems


@dataclass(frozen=True)
class DiagonalCycle:
    n: int
    offset: int

    @property
    def arcs(self) -> tuple[Arc, ...]:
        return tuple(("D", i, (i - 1 + self.offset) % self.n + 1) for i in range(1, self.n + 1))

    def vertices(self) -> frozenset[tuple[int, int]]:
        return frozenset((a[1], a[2]) for a in self.arcs)


def crossings(walk: GridWalk, offset: int) -> list[tuple[int, int]]:
    """Vertices (with multiplicity) where the walk crosses the diagonal cycle ``offset``.

    Around a grid vertex the diagonal cycle enters from the north-west and
    leaves to the south-east.  That splits the other directions into
    {north, north-east, east} and {south, south-west, west}.  A walk
    entering from the west (horizontal arc) and leaving east, or entering
    from the north (vertical arc) and leaving south, passes from one side to
    the other: a crossing.  Horizontal-then-vertical and
    vertical-then-horizontal turns stay on one side.
    """
    n = walk.n
    return [v for a, b, v in walk.turns()
            if a[0] == b[0] and a[0] in "HV" and diagonal_offset(v, n) == offset]


def _degrees(arcs, n):
    indeg: Counter = Counter()
    outdeg: Counter = Counter()
    for a in arcs:
        outdeg[(a[1], a[2])] += 1
        indeg[arc_head(a, n)] += 1
    return +indeg, +outdeg


def _check_words(words) -> list[str]:
    ws = [as_word(w) for w in words]
    if not ws:
        raise PreconditionError("no words given")
    n = len(ws)
    for w in ws:
        if len(w) != n:
            raise PreconditionError(f"need {n} words of length {n}; got a word of length {len(w)}")
        if alternation_number(w) > 2:
            raise PreconditionError(f"word {w} has alternation number {alternation_number(w)} > 2")
    return ws


def marked_arcs(words) -> tuple[Counter, str]:
    """Marked boundary arcs of the sorted sign matrix, after degree repair.

    Returns the arc multiset and which repair case applied: "none", "a"
    (an all-minus column exists) or "b" (an all-plus column, no all-minus one).
    """
    ws = list(words)
    n = len(ws)
    arcs: Counter = Counter()

    def w(i, j):  # w_i^j, 1-based, rows cyclic
        return ws[(j - 1) % n][i - 1]

    for j in range(2, n + 2):
        jj = (j - 1) % n + 1
        for i in range(1, n + 1):
            if w(i, j - 1) != w(i, jj):
                arcs[("H", i, jj)] += 1
    for j in range(1, n + 1):
        changed = False
        for i in range(2, n + 1):
            if w(i - 1, j) != w(i, j):
                arcs[("V", i, j)] += 1
                changed = True
        if not changed:
            arcs[("V", 1, j)] += 1

    indeg, outdeg = _degrees(arcs.elements(), n)
    vertices = set(indeg) | set(outdeg)
    off = sorted(v for v in vertices if indeg[v] != outdeg[v])
    if not off:
        return arcs, "none"
    sinks = [v for v in off if indeg[v] - outdeg[v] == 2 and outdeg[v] == 0]
    sources = [v for v in off if outdeg[v] - indeg[v] == 2 and indeg[v] == 0]
    instance = "\n".join(ws)
    if len(off) != 2 or len(sinks) != 1 or len(sources) != 1 or sinks[0][1] != sources[0][1]:
        raise TheoremViolation(
            f"unexpected degree imbalance at {off}; expected one sink/source pair in one row",
            instance=instance)
    (i, j), (i2, _) = sinks[0], sources[0]
    all_minus = any(all(w(c, r) == MINUS for r in range(1, n + 1)) for c in range(1, n + 1))
    all_plus = any(all(w(c, r) == PLUS for r in range(1, n + 1)) for c in range(1, n + 1))
    if all_minus:
        case = "a"
        if j != 1:
            raise TheoremViolation(f"all-minus column present but imbalance in row {j}", instance=instance)
    elif all_plus:
        case = "b"
    else:
        raise TheoremViolation("degree imbalance without a constant column", instance=instance)
    steps = (i2 - i) % n
    if steps == 0:
        raise TheoremViolation("sink and source coincide", instance=instance)
    for s in range(steps):
        arcs[("H", (i - 1 + s) % n + 1, j)] += 2
    return arcs, case


def eulerian_walk(arcs: Counter, n: int) -> tuple[Arc, ...]:
    """Hierholzer traversal from the least vertex with an outgoing arc.

    Outgoing arcs are taken horizontal before vertical.  Raises when the
    arcs are not balanced or not weakly connected.
    """
    indeg, outdeg = _degrees(arcs.elements(), n)
    if indeg != outdeg:
        raise OMError("arc multiset is not balanced")
    total = sum(arcs.values())
    if not total:
        return ()
    out: dict = {}
    for a in sorted(arcs.elements(), reverse=True):
        out.setdefault((a[1], a[2]), []).append(a)
    start = min(out)
    stack = [start]
    pending: list[Arc] = []
    circuit: list[Arc] = []
    while stack:
        v = stack[-1]
        if out.get(v):
            a = out[v].pop()
            pending.append(a)
            stack.append(arc_head(a, n))
        else:
            stack.pop()
            if pending:
                circuit.append(pending.pop())
    circuit.reverse()
    if len(circuit) != total:
        raise OMError("marked arcs are not weakly connected")
    return tuple(circuit)


def build_grid_walk(words) -> GridWalk:
    """Closed walk along the marked +/- boundary of already-sorted words."""
    ws = _check_words(words)
    for a, b in zip(ws, ws[1:]):
        if not preceq_b(a, b):
            raise PreconditionError("words must be sorted non-decreasingly by preceq_b")
    arcs, _ = marked_arcs(ws)
    walk = GridWalk(len(ws), eulerian_walk(arcs, len(ws)))
    problems = walk.check_invariants()
    if problems:
        raise TheoremViolation("; ".join(problems), instance="\n".join(ws))
    return walk


def find_diagonal_cycle(walk: GridWalk) -> tuple[DiagonalCycle, int]:
    """Smallest-offset diagonal cycle avoiding vertical-vertical crossings, and its crossing count.

    A walk without horizontal arcs takes offset 0.
    """
    n = walk.n
    hit = {diagonal_offset(v, n) for a, b, v in walk.turns() if a[0] == b[0] == "V"}
    if walk.counts()["H"] == 0:
        offset = 0
    else:
        free = [k for k in range(n) if k not in hit]
        if not free:
            raise TheoremViolation("every diagonal cycle is crossed at the head of a vertical arc")
        offset = free[0]
    count = len(crossings(walk, offset))
    if count > 1:
        raise TheoremViolation(f"diagonal cycle {offset} is crossed {count} times")
    return DiagonalCycle(n, offset), count


# solver ---------------------------------------------------------------------

@dataclass(frozen=True)
class WordsSolution:
    shift: int
    permutation: tuple[int, ...]  # permutation[i - 1] = index of the word used at position i
    result: str
    crossings: int = 0


def diagonal_word(sorted_words, k: int) -> str:
    n = len(sorted_words)
    return "".join(sorted_words[(i + k) % n][i] for i in range(n))


def solve_words(words) -> WordsSolution:
    """Shift k and permutation with alternation(w_1^{π(1)} ... w_n^{π(n)}) <= 2."""
    ws = _check_words(words)
    n = len(ws)
    order = sorted(range(n), key=lambda p: b_key(ws[p]))  # stable
    sorted_ws = [ws[p] for p in order]
    if len(set(ws)) == 1:
        k, count = 0, 0
    else:
        walk = build_grid_walk(sorted_ws)
        cycle, count = find_diagonal_cycle(walk)
        k = cycle.offset
    perm = tuple(order[(i + k) % n] + 1 for i in range(n))
    result = "".join(ws[perm[i] - 1][i] for i in range(n))
    if alternation_number(result) > 2:
        raise TheoremViolation(f"diagonal word {result} for shift {k} has alternation "
                               f"{alternation_number(result)}", instance="\n".join(ws))
    return WordsSolution(k, perm, result, count)


def oracle_words(words, mode: str = "auto") -> tuple[int, ...] | None:
    """Brute-force search for a permutation with alternation number <= 2, or None.

    ``mode="permutation"`` tries all n! permutations (n <= 7);
    ``mode="matching"`` tries each candidate result word and matches
    positions to words.  ``auto`` picks permutations for n <= 7.
    """
    ws = [as_word(w) for w in words]
    n = len(ws)
    if any(len(w) != n for w in ws):
        raise PreconditionError(f"need {n} words of length {n}")
    if mode == "auto":
        mode = "permutation" if n <= 7 else "matching"
    if mode == "permutation":
        if n > 7:
            raise LimitExceeded(f"permutation oracle refused for n = {n} > 7")
        for perm in itertools.permutations(range(n)):
            if alternation_number("".join(ws[p][i] for i, p in enumerate(perm))) <= 2:
                return tuple(p + 1 for p in perm)
        return None
    if mode != "matching":
        raise PreconditionError(f"unknown oracle mode {mode!r}")
    positions = range(n)
    for cand in words_with_alternation_at_most(n, 2):
        adj = {i: [p for p in range(n) if ws[p][i] == cand[i]] for i in positions}
        m = saturating_matching(positions, adj)
        if m is not None:
            return tuple(m[i] + 1 for i in positions)
    return None


def parse_words(text: str) -> list[str]:
    ws = [line.strip() for line in text.splitlines() if line.strip()]
    if not ws:
        raise ParseError("no words")
    for w in ws:
        if set(w) - {PLUS, MINUS}:
            raise ParseError(f"word {w!r} must use only '+' and '-'")
    if len({len(w) for w in ws}) != 1:
        raise ParseError("words have different lengths")
    return ws
