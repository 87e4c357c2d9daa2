"""Chirotopes: the canonical encoding of an oriented matroid of rank r on [n].

Values are stored for the sorted r-subsets of [n] in lexicographic order,
so ``Chirotope(4, 2, (0, 0, 1, 0, 1, 1))`` assigns 0 to {1,2}, 0 to {1,3},
+ to {1,4}, and so on.  The same order is used by the ``.chi`` file format.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from math import comb

from .config import current_limits
from .errors import LimitExceeded, ParseError, PreconditionError
from .exact import RationalMatrix, det_sign, rank
from .signvec import SignVector

_CHARS = {1: "+", -1: "-", 0: "0"}
_SIGNS = {"+": 1, "-": -1, "0": 0}


@functools.lru_cache(maxsize=None)
def subsets(n: int, r: int) -> tuple[tuple[int, ...], ...]:
    """Sorted r-subsets of [n] in lexicographic order (1-based)."""
    return tuple(itertools.combinations(range(1, n + 1), r))


@functools.lru_cache(maxsize=None)
def _subset_index(n: int, r: int) -> dict[tuple[int, ...], int]:
    return {b: i for i, b in enumerate(subsets(n, r))}


def _sort_sign(seq) -> tuple[int, tuple[int, ...]]:
    """Sign of the sorting permutation of ``seq`` (0 on repeats) and the sorted tuple."""
    seq = list(seq)
    if len(set(seq)) != len(seq):
        return 0, tuple(sorted(seq))
    inversions = sum(1 for a, b in itertools.combinations(seq, 2) if a > b)
    return (-1 if inversions % 2 else 1), tuple(sorted(seq))


@dataclass(frozen=True)
class Chirotope:
    n: int
    r: int
    values: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.r <= self.n:
            raise PreconditionError(f"rank {self.r} outside 0..{self.n}")
        values = tuple(int(v) for v in self.values)
        if len(values) != comb(self.n, self.r):
            raise PreconditionError(f"expected {comb(self.n, self.r)} values, got {len(values)}")
        if any(v not in (-1, 0, 1) for v in values):
            raise PreconditionError("chirotope values must be -1, 0 or 1")
        if not any(values):
            raise PreconditionError("chirotope is identically zero")
        object.__setattr__(self, "values", values)

    def bases(self):
        return subsets(self.n, self.r)

    def __call__(self, *elements) -> int:
        """chi(b1, ..., br) for any ordering of distinct elements; alternating."""
        if len(elements) == 1 and not isinstance(elements[0], int):
            elements = tuple(elements[0])
        s, key = _sort_sign(elements)
        if s == 0:
            return 0
        return s * self.values[_subset_index(self.n, self.r)[key]]

    def __neg__(self) -> "Chirotope":
        return Chirotope(self.n, self.r, tuple(-v for v in self.values))

    def __str__(self) -> str:
        return "".join(_CHARS[v] for v in self.values)

    def dumps(self) -> str:
        return f"{self.n} {self.r}\n{self}\n"

    @classmethod
    def parse(cls, text: str) -> "Chirotope":
        """Parse the two-line ``.chi`` format, strictly."""
        if text.endswith("\n"):
            text = text[:-1]
        lines = text.split("\n")
        if len(lines) != 2:
            raise ParseError("a .chi file has exactly two lines")
        head = lines[0].split(" ")
        if len(head) != 2 or not all(h.isdigit() and h.isascii() for h in head):
            raise ParseError(f"bad header {lines[0]!r}; expected 'n r'")
        n, r = int(head[0]), int(head[1])
        if r > n:
            raise ParseError(f"rank {r} exceeds n = {n}")
        body = lines[1]
        if len(body) != comb(n, r):
            raise ParseError(f"expected {comb(n, r)} sign characters, got {len(body)}")
        bad = set(body) - set(_SIGNS)
        if bad:
            raise ParseError(f"invalid characters {sorted(bad)!r} in chirotope values")
        try:
            return cls(n, r, tuple(_SIGNS[c] for c in body))
        except PreconditionError as exc:
            raise ParseError(str(exc)) from None

    @classmethod
    def from_string(cls, n: int, r: int, values: str) -> "Chirotope":
        return cls(n, r, tuple(_SIGNS[c] for c in values))


def chirotope_from_matrix(m: RationalMatrix) -> Chirotope:
    """Signs of the maximal minors of an r x n matrix of full row rank."""
    rk = rank(m)
    if rk < m.r:
        raise PreconditionError(f"matrix has rank {rk} < {m.r} rows")
    cols = [m.column(j) for j in range(1, m.n + 1)]
    values = []
    for b in subsets(m.n, m.r):
        square = [[cols[j - 1][i] for j in b] for i in range(m.r)]
        values.append(det_sign(square))
    return Chirotope(m.n, m.r, tuple(values))


def alternating_chirotope(n: int, r: int) -> Chirotope:
    if not 1 <= r <= n:
        raise PreconditionError(f"need 1 <= r <= n, got r={r}, n={n}")
    return Chirotope(n, r, (1,) * comb(n, r))


def reorient(chi: Chirotope, elements) -> Chirotope:
    """Reverse the sign of every element in ``elements``."""
    flip = frozenset(elements)
    return Chirotope(chi.n, chi.r, tuple(
        v * (-1) ** len(flip.intersection(b)) for v, b in zip(chi.values, chi.bases())))


def is_uniform(chi: Chirotope) -> bool:
    return all(chi.values)


@functools.lru_cache(maxsize=256)
def dual(chi: Chirotope) -> Chirotope:
    """chi*(x) = chi(y) * sign(x, y) with y the sorted complement of x."""
    n, r = chi.n, chi.r
    ground = range(1, n + 1)
    values = []
    for x in subsets(n, n - r):
        xs = set(x)
        y = tuple(j for j in ground if j not in xs)
        inversions = sum(1 for a in x for b in y if b < a)
        values.append(chi(y) * (-1) ** (inversions % 2))
    return Chirotope(n, n - r, tuple(values))


@functools.lru_cache(maxsize=256)
def circuit_masks(chi: Chirotope) -> tuple[tuple[int, int], ...]:
    """Circuits as sorted ``(pos, neg)`` bitmask pairs, closed under negation."""
    n, r = chi.n, chi.r
    candidates = set()
    for lam in itertools.combinations(range(1, n + 1), r + 1):
        pos = neg = 0
        for i, e in enumerate(lam):
            s = chi(lam[:i] + lam[i + 1:])
            if i % 2:
                s = -s
            if s > 0:
                pos |= 1 << (e - 1)
            elif s < 0:
                neg |= 1 << (e - 1)
        if pos | neg:
            candidates.add((pos, neg))
            candidates.add((neg, pos))
    supports = {p | q for p, q in candidates}
    minimal = {s for s in supports if not any(t != s and t & s == t for t in supports)}
    return tuple(sorted(c for c in candidates if c[0] | c[1] in minimal))


def circuits_from_chirotope(chi: Chirotope) -> frozenset[SignVector]:
    return frozenset(SignVector.from_masks(chi.n, p, q) for p, q in circuit_masks(chi))


def circuit_axioms_hold(n: int, circuits) -> bool:
    """Exhaustive check of the signed circuit axioms on ``(pos, neg)`` pairs.

    Checks emptiness, symmetry, incomparability of supports and weak signed
    elimination.
    """
    cs = set(circuits)
    if any(not (p | q) for p, q in cs):
        return False
    if any((q, p) not in cs for p, q in cs):
        return False
    items = sorted(cs)
    for x in items:
        sx = x[0] | x[1]
        for y in items:
            sy = y[0] | y[1]
            if sx & sy == sx and x != y and x != (y[1], y[0]):
                return False
    for x in items:
        for y in items:
            if x == (y[1], y[0]):
                continue
            common = x[0] & y[1]
            while common:
                e = common & -common
                common ^= e
                allow_p = (x[0] | y[0]) & ~e
                allow_n = (x[1] | y[1]) & ~e
                if not any(not (zp & ~allow_p) and not (zn & ~allow_n) for zp, zn in items):
                    return False
    return True


def check_chirotope(chi: Chirotope) -> bool:
    """Validity gate: derived circuits satisfy the circuit axioms."""
    bound = current_limits().max_axiom_n
    if chi.n > bound:
        raise LimitExceeded(f"axiom check refused: n = {chi.n} exceeds limit {bound}")
    return circuit_axioms_hold(chi.n, circuit_masks(chi))
