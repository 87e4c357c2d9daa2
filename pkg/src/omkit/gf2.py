"""Dense GF(2) elimination on bit-packed vectors.

A vector is a Python int whose bit i is the i-th coordinate; XOR is
addition.  Python ints are arbitrary-width word arrays, so this is the
usual word-packed elimination without fixing a width.
"""

from __future__ import annotations


def rank(vectors) -> int:
    pivots: dict[int, int] = {}
    for v in vectors:
        while v:
            top = v.bit_length() - 1
            p = pivots.get(top)
            if p is None:
                pivots[top] = v
                break
            v ^= p
    return len(pivots)


def solve(columns, target: int) -> list[int] | None:
    """Indices of a set of columns summing to ``target``, or None if unsolvable.

    Columns are processed in order and the first solution the elimination
    produces is returned, so the answer is deterministic.
    """
    pivots: dict[int, tuple[int, int]] = {}
    for idx, col in enumerate(columns):
        combo = 1 << idx
        v = col
        while v:
            top = v.bit_length() - 1
            p = pivots.get(top)
            if p is None:
                pivots[top] = (v, combo)
                break
            v ^= p[0]
            combo ^= p[1]
    v, combo = target, 0
    while v:
        top = v.bit_length() - 1
        p = pivots.get(top)
        if p is None:
            return None
        v ^= p[0]
        combo ^= p[1]
    return [i for i in range(combo.bit_length()) if combo >> i & 1]


def reduce(columns, target: int) -> int:
    """Residue of ``target`` modulo the span of ``columns`` (0 iff solvable)."""
    pivots: dict[int, int] = {}
    for v in columns:
        while v:
            top = v.bit_length() - 1
            p = pivots.get(top)
            if p is None:
                pivots[top] = v
                break
            v ^= p
    while target:
        top = target.bit_length() - 1
        p = pivots.get(top)
        if p is None:
            break
        target ^= p
    return target
