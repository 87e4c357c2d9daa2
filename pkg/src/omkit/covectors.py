"""Enumeration of cocircuits, covectors, vectors and topes, plus vector heights.

Covectors are the closure of the cocircuits (and 0) under composition, and
vectors the closure of the circuits.  Both closures are exponential in n and
refuse ground sets larger than ``current_limits().max_n``.

The mask-level functions (``*_masks``) are cached per chirotope; chirotopes
are immutable, so sharing the cached tuples is safe.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .chirotope import Chirotope, circuit_masks, dual
from .config import current_limits
from .errors import LimitExceeded, PreconditionError
from .signvec import SignVector

Mask = tuple[int, int]


def _compose(a: Mask, b: Mask) -> Mask:
    free = ~(a[0] | a[1])
    return a[0] | (b[0] & free), a[1] | (b[1] & free)


def _below(a: Mask, b: Mask) -> bool:
    return not (a[0] & ~b[0]) and not (a[1] & ~b[1])


def _check_bound(chi: Chirotope, what: str):
    bound = current_limits().max_n
    if chi.n > bound:
        raise LimitExceeded(f"{what} enumeration refused: n = {chi.n} exceeds limit {bound}")


def composition_closure(generators) -> frozenset[Mask]:
    """All compositions of generators, including the empty composition 0."""
    gens = sorted(set(generators))
    seen = {(0, 0)}
    frontier = [(0, 0)]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                z = _compose(x, g)
                if z not in seen:
                    seen.add(z)
                    nxt.append(z)
        frontier = nxt
    return frozenset(seen)


def cocircuit_masks(chi: Chirotope) -> tuple[Mask, ...]:
    return circuit_masks(dual(chi))


# the limit is checked outside the caches so a tightened limit still refuses

@functools.lru_cache(maxsize=128)
def _covector_closure(chi: Chirotope) -> frozenset[Mask]:
    return composition_closure(cocircuit_masks(chi))


@functools.lru_cache(maxsize=128)
def _vector_closure(chi: Chirotope) -> frozenset[Mask]:
    return composition_closure(circuit_masks(chi))


def covector_masks(chi: Chirotope) -> frozenset[Mask]:
    _check_bound(chi, "covector")
    return _covector_closure(chi)


def vector_masks(chi: Chirotope) -> frozenset[Mask]:
    _check_bound(chi, "vector")
    return _vector_closure(chi)


def tope_sort_key(x) -> tuple[int, ...]:
    """Lexicographic order with + before -."""
    return tuple(0 if s > 0 else (1 if s < 0 else -1) for s in x)


def tope_masks(chi: Chirotope) -> tuple[Mask, ...]:
    """Maximal covectors, in lexicographic order with + < -."""
    _check_bound(chi, "tope")
    return _tope_masks(chi)


@functools.lru_cache(maxsize=128)
def _tope_masks(chi: Chirotope) -> tuple[Mask, ...]:
    full = 0
    for p, q in cocircuit_masks(chi):
        full |= p | q
    found = [x for x in covector_masks(chi) if (x[0] | x[1]) == full]
    n = chi.n
    return tuple(sorted(found, key=lambda m: tuple(
        0 if m[0] >> j & 1 else (1 if m[1] >> j & 1 else -1) for j in range(n))))


def _to_vectors(n: int, masks) -> frozenset[SignVector]:
    return frozenset(SignVector.from_masks(n, p, q) for p, q in masks)


def cocircuits(chi: Chirotope) -> frozenset[SignVector]:
    return _to_vectors(chi.n, cocircuit_masks(chi))


def covectors(chi: Chirotope) -> frozenset[SignVector]:
    return _to_vectors(chi.n, covector_masks(chi))


def vectors(chi: Chirotope) -> frozenset[SignVector]:
    return _to_vectors(chi.n, vector_masks(chi))


def topes(chi: Chirotope) -> list[SignVector]:
    """Topes in the deterministic search order (lexicographic, + before -)."""
    return [SignVector.from_masks(chi.n, p, q) for p, q in tope_masks(chi)]


def loops(chi: Chirotope) -> frozenset[int]:
    """Elements that are zero in every cocircuit."""
    used = 0
    for p, q in cocircuit_masks(chi):
        used |= p | q
    return frozenset(j for j in range(1, chi.n + 1) if not used >> (j - 1) & 1)


def coloops(chi: Chirotope) -> frozenset[int]:
    """Elements that are zero in every circuit."""
    used = 0
    for p, q in circuit_masks(chi):
        used |= p | q
    return frozenset(j for j in range(1, chi.n + 1) if not used >> (j - 1) & 1)


def poset_heights(elements) -> dict[Mask, int]:
    """Longest chain length from 0 in a family of sign vectors ordered by conformity.

    ``elements`` must contain the zero vector and be closed downward in the
    sense that matters here: every element's lower interval lies in it.
    """
    by_size = sorted(elements, key=lambda m: (m[0] | m[1]).bit_count())
    heights: dict[Mask, int] = {}
    done: list[tuple[Mask, int, int]] = []
    for x in by_size:
        size = (x[0] | x[1]).bit_count()
        best = -1
        for y, ysize, hy in done:
            if ysize < size and hy > best and _below(y, x):
                best = hy
        heights[x] = best + 1
        done.append((x, size, best + 1))
    return heights


@dataclass(frozen=True)
class VectorPoset:
    """Vectors of an oriented matroid with their heights; the order is conformity."""

    n: int
    heights: dict

    @property
    def elements(self) -> frozenset[SignVector]:
        return frozenset(self.heights)

    def height(self, x: SignVector) -> int:
        try:
            return self.heights[x]
        except KeyError:
            raise PreconditionError(f"{x} is not a vector") from None


def _vector_heights(chi: Chirotope) -> dict[Mask, int]:
    _check_bound(chi, "vector")
    return _vector_heights_cached(chi)


@functools.lru_cache(maxsize=64)
def _vector_heights_cached(chi: Chirotope) -> dict[Mask, int]:
    return poset_heights(vector_masks(chi))


def build_vector_poset(chi: Chirotope) -> VectorPoset:
    hs = _vector_heights(chi)
    return VectorPoset(chi.n, {SignVector.from_masks(chi.n, p, q): h for (p, q), h in hs.items()})


def height(chi: Chirotope, x: SignVector) -> int:
    if len(x) != chi.n:
        raise PreconditionError("sign vector length differs from n")
    try:
        return _vector_heights(chi)[x.masks()]
    except KeyError:
        raise PreconditionError(f"{x} is not a vector") from None


def check_height_bound(chi: Chirotope) -> bool:
    """|support(X)| <= rank + height(X) for every vector X."""
    return all((p | q).bit_count() <= chi.r + h for (p, q), h in _vector_heights(chi).items())


def positive_circuit_masks(chi: Chirotope) -> tuple[Mask, ...]:
    return tuple(c for c in circuit_masks(chi) if not c[1])


@functools.lru_cache(maxsize=64)
def positive_vector_heights(chi: Chirotope) -> dict[Mask, int]:
    """Heights of the positive vectors.

    Positive vectors are exactly the compositions of positive circuits, and
    the interval below a positive vector only holds positive vectors, so the
    heights agree with those of the full vector poset.
    """
    return poset_heights(composition_closure(positive_circuit_masks(chi)))


def positive_vectors_eh_masks(chi: Chirotope, e: int, h: int) -> dict[Mask, int]:
    if not 1 <= e <= chi.n:
        raise PreconditionError(f"element {e} outside [1, {chi.n}]")
    if h < 1:
        raise PreconditionError("h must be at least 1")
    ebit = 1 << (e - 1)
    pcs = positive_circuit_masks(chi)
    out = {}
    for x, hx in positive_vector_heights(chi).items():
        if not 1 <= hx <= h:
            continue
        sx = x[0]
        if all(c[0] & ebit for c in pcs if c[0] & sx == c[0]):
            out[x] = hx
    return out


def positive_vectors_eh(chi: Chirotope, e: int, h: int) -> frozenset[SignVector]:
    """Positive vectors X of height 1..h all of whose circuits C <= X contain e positively."""
    return _to_vectors(chi.n, positive_vectors_eh_masks(chi, e, h))


def _element_mask(elements, n: int) -> int:
    m = 0
    for j in elements:
        if not 1 <= j <= n:
            raise PreconditionError(f"element {j} outside [1, {n}]")
        m |= 1 << (j - 1)
    return m


def covector_set_jj_masks(chi: Chirotope, jplus, jminus) -> frozenset[Mask]:
    jp = _element_mask(jplus, chi.n)
    jm = _element_mask(jminus, chi.n)
    if jp & jm:
        raise PreconditionError("J+ and J- must be disjoint")
    return frozenset(x for x in covector_masks(chi)
                     if (x[0] | x[1]) and not (x[1] & jp) and not (x[0] & jm))


def covector_set_JJ(chi: Chirotope, jplus, jminus) -> frozenset[SignVector]:
    """Nonzero covectors that are nonnegative on J+ and nonpositive on J-."""
    return _to_vectors(chi.n, covector_set_jj_masks(chi, jplus, jminus))
