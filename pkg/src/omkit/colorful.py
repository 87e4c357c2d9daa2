"""Colorful Carathéodory searches for oriented matroids.

Conic version: for r positive circuits C_1..C_r of a rank-r oriented matroid
sharing an element e, some positive circuit C̃ ∋ e uses at most one element
of each C_i \\ {e}.  Convex version: in rank r - 1, r positive circuits
yield a positive circuit using at most one element of each C_i.

`find_rainbow_conic` and `find_rainbow_convex` search positive circuits in
lexicographic order of their supports and test each with a bipartite
matching.  `conic_pipeline` instead runs the topological argument: parallel
copies make the circuits meet only in e, complexes of positive vectors are
fed to the rainbow engine, and the bottom of the rainbow chain is the
answer.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .chirotope import Chirotope, chirotope_from_matrix, circuit_masks, circuits_from_chirotope
from .covectors import positive_circuit_masks, positive_vector_heights
from .errors import PreconditionError, TheoremViolation
from .exact import RationalMatrix, row_basis
from .matching import saturating_matching
from .rainbow import ComplexFamily, find_rainbow_simplex, nonempty_subsets
from .signvec import SignVector
from .simplicial import Poset, order_complex


@dataclass(frozen=True)
class RainbowCertificate:
    circuit: SignVector
    assignment: dict = field(hash=False)  # element -> circuit index (1-based)

    def render(self) -> dict:
        return {"circuit": str(self.circuit),
                "assignment": {str(f): i for f, i in sorted(self.assignment.items())}}


def _support_order(mask: tuple[int, int]) -> tuple[int, ...]:
    m = mask[0] | mask[1]
    return tuple(j + 1 for j in range(m.bit_length()) if m >> j & 1)


def _dump(chi: Chirotope, circuits, e=None) -> str:
    head = chi.dumps()
    if e is not None:
        head += f"e = {e}\n"
    return head + "".join(f"{c}\n" for c in circuits)


def _check_positive_circuits(chi: Chirotope, circuits):
    known = set(circuit_masks(chi))
    for c in circuits:
        if len(c) != chi.n:
            raise PreconditionError(f"circuit {c} has length {len(c)}, expected {chi.n}")
        if not c.is_positive() or c.masks() not in known:
            raise PreconditionError(f"{c} is not a positive circuit")


def sorted_positive_circuits(chi: Chirotope) -> list[tuple[int, int]]:
    """Positive circuits in lexicographic order of their supports."""
    return sorted(positive_circuit_masks(chi), key=_support_order)


def _match(elements, circuits) -> dict | None:
    supports = [c.support() for c in circuits]
    adj = {f: [i for i, s in enumerate(supports, 1) if f in s] for f in elements}
    return saturating_matching(elements, adj)


def validate_conic_instance(chi: Chirotope, e: int, circuits):
    circuits = [SignVector(c) for c in circuits]
    if len(circuits) != chi.r:
        raise PreconditionError(f"need rank = {chi.r} circuits, got {len(circuits)}")
    if not 1 <= e <= chi.n:
        raise PreconditionError(f"element {e} outside [1, {chi.n}]")
    _check_positive_circuits(chi, circuits)
    for c in circuits:
        if c(e) != 1:
            raise PreconditionError(f"circuit {c} does not contain e = {e}")
    return circuits


def find_rainbow_conic(chi: Chirotope, e: int, circuits) -> RainbowCertificate:
    circuits = validate_conic_instance(chi, e, circuits)
    ebit = 1 << (e - 1)
    if (ebit, 0) in set(circuit_masks(chi)):
        # e is a loop: {e} alone is a positive circuit
        return RainbowCertificate(SignVector.from_masks(chi.n, ebit, 0), {})
    for mask in sorted_positive_circuits(chi):
        if not mask[0] & ebit:
            continue
        elements = [f for f in _support_order(mask) if f != e]
        m = _match(elements, circuits)
        if m is not None:
            return RainbowCertificate(SignVector.from_masks(chi.n, *mask), m)
    raise TheoremViolation("no rainbow positive circuit through e", instance=_dump(chi, circuits, e))


def find_rainbow_convex(chi: Chirotope, circuits) -> RainbowCertificate:
    circuits = [SignVector(c) for c in circuits]
    if len(circuits) != chi.r + 1:
        raise PreconditionError(f"need rank + 1 = {chi.r + 1} circuits, got {len(circuits)}")
    _check_positive_circuits(chi, circuits)
    for mask in sorted_positive_circuits(chi):
        m = _match(list(_support_order(mask)), circuits)
        if m is not None:
            return RainbowCertificate(SignVector.from_masks(chi.n, *mask), m)
    raise TheoremViolation("no rainbow positive circuit", instance=_dump(chi, circuits))


def verify_certificate(chi: Chirotope, circuits, cert: RainbowCertificate, e: int | None = None) -> bool:
    """Re-check a certificate from scratch; ``e`` given means the conic version."""
    c = cert.circuit
    if c not in circuits_from_chirotope(chi) or not c.is_positive():
        return False
    support = c.support()
    if e is not None:
        if c(e) != 1:
            return False
        support = support - {e}
    if set(cert.assignment) != set(support):
        return False
    indices = list(cert.assignment.values())
    if len(set(indices)) != len(indices):
        return False
    return all(1 <= i <= len(circuits) and circuits[i - 1](f) != 0 for f, i in cert.assignment.items())


# the topological pipeline -------------------------------------------------------

@dataclass
class ConicPipelineRun:
    """Intermediate objects of `conic_pipeline`, kept for inspection."""

    certificate: RainbowCertificate
    family: ComplexFamily
    chain: tuple  # the rainbow chain X_1 < ... < X_r, as masks over the copied ground set
    copies: list  # copied element -> (original element, color); index 0 is e


def conic_pipeline(m: RationalMatrix, e: int, circuits, keep: bool = False):
    """Theorem-level construction of a conic rainbow certificate for a realizable instance."""
    chi = chirotope_from_matrix(m)
    circuits = validate_conic_instance(chi, e, circuits)
    r = len(circuits)
    if all(x == 0 for x in m.column(e)):
        cert = RainbowCertificate(SignVector.from_masks(chi.n, 1 << (e - 1), 0), {})
        return ConicPipelineRun(cert, ComplexFamily(r, {}), (), [(e, 0)]) if keep else cert

    # parallel copies: the circuits then pairwise meet only in e; new element 1 is e
    copies = [(e, 0)]
    for i, c in enumerate(circuits, 1):
        copies += [(f, i) for f in sorted(c.support()) if f != e]
    mp = row_basis(m.select_columns([f for f, _ in copies]))
    chi2 = chirotope_from_matrix(mp)
    n2 = len(copies)
    color_masks = [0] * (r + 1)
    for t, (_, i) in enumerate(copies):
        if i:
            color_masks[i] |= 1 << t
    known = set(positive_circuit_masks(chi2))
    for i in range(1, r + 1):
        if (1 | color_masks[i], 0) not in known:
            raise TheoremViolation(f"copied circuit {i} is not a positive circuit", instance=_dump(chi, circuits, e))

    heights = positive_vector_heights(chi2)
    pcs = positive_circuit_masks(chi2)
    good = {x: h for x, h in heights.items()
            if h >= 1 and all(c[0] & 1 for c in pcs if c[0] & x[0] == c[0])}

    def label(x) -> int:
        counts = [(x[0] & color_masks[i]).bit_count() for i in range(1, r + 1)]
        return counts.index(max(counts)) + 1

    complexes = {}
    for sub in nonempty_subsets(r):
        allowed = 1 | sum(color_masks[i] for i in sub)
        elems = [x for x, h in good.items() if h <= len(sub) and not x[0] & ~allowed]
        up = {x: {y for y in elems if y != x and x[0] & y[0] == x[0]} for x in elems}
        complexes[sub] = order_complex(Poset.from_up_sets(up))
    family = ComplexFamily(r, complexes)
    labeling = {x: label(x) for x in family[frozenset(range(1, r + 1))].vertices}
    simplex = find_rainbow_simplex(family, labeling)
    chain = tuple(sorted(simplex, key=lambda x: heights[x]))
    bottom = chain[0]
    if heights[bottom] != 1:
        raise TheoremViolation("rainbow chain does not start at a circuit", instance=_dump(chi, circuits, e))

    pos = 0
    assignment = {}
    for t in range(n2):
        if bottom[0] >> t & 1:
            f, i = copies[t]
            pos |= 1 << (f - 1)
            if i:
                if f in assignment:
                    raise TheoremViolation("two copies of one element in the rainbow circuit",
                                           instance=_dump(chi, circuits, e))
                assignment[f] = i
    cert = RainbowCertificate(SignVector.from_masks(chi.n, pos, 0), assignment)
    if not verify_certificate(chi, circuits, cert, e):
        raise TheoremViolation(f"pipeline certificate {cert.render()} fails verification",
                               instance=_dump(chi, circuits, e))
    if keep:
        return ConicPipelineRun(cert, family, chain, copies)
    return cert
