"""Tope transversals in uniform oriented matroids.

Given topes T_1..T_n that agree on some element, some tope T̃ agrees with
each T_i on a distinct element; given r topes and multiplicities n_i summing
to n, some tope T̃ and partition [n] = J_1 ∪ ... ∪ J_r with |J_i| = n_i have
T̃(j) = T_i(j) for j ∈ J_i.

Direct searches walk the topes in lexicographic order (+ before -) and test
a bipartite matching.  The pipelines instead build the box complexes L^I
(cells τ_1 × ... × τ_n of the simplotope whose vertex tuples all compose to
covectors) and run the rainbow engine on barycentric subdivisions of their
skeletons.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import gf2
from .chirotope import Chirotope, is_uniform
from .config import current_limits
from .covectors import covector_masks, tope_masks
from .errors import ConnectivityError, LimitExceeded, PreconditionError, TheoremViolation
from .matching import saturating_matching
from .rainbow import ComplexFamily, find_rainbow_simplex, nonempty_subsets
from .signvec import SignVector
from .simplicial import Poset, SimplicialComplex, order_complex


@dataclass(frozen=True)
class TransversalCertificate:
    tope: SignVector
    assignment: dict = field(hash=False)  # element j -> tope index i (1-based)

    def parts(self, k: int) -> list[list[int]]:
        """The partition J_1..J_k of the ground set induced by the assignment."""
        out: list[list[int]] = [[] for _ in range(k)]
        for j, i in sorted(self.assignment.items()):
            out[i - 1].append(j)
        return out

    def render(self) -> dict:
        return {"tope": str(self.tope),
                "assignment": {str(j): i for j, i in sorted(self.assignment.items())}}


def _dump(chi: Chirotope, topes, mult=None) -> str:
    out = chi.dumps() + "".join(f"{t}\n" for t in topes)
    if mult is not None:
        out += "mult " + ",".join(str(m) for m in mult) + "\n"
    return out


def _validate(chi: Chirotope, topes, force: bool) -> list[SignVector]:
    topes = [SignVector(t) for t in topes]
    if not force and not is_uniform(chi):
        raise PreconditionError("the chirotope is not uniform; uniformity is required (use force to search anyway)")
    known = set(tope_masks(chi))
    for t in topes:
        if len(t) != chi.n:
            raise PreconditionError(f"tope {t} has length {len(t)}, expected {chi.n}")
        if t.masks() not in known:
            raise PreconditionError(f"{t} is not a tope")
    return topes


def _search(chi: Chirotope, topes, capacity=None) -> TransversalCertificate | None:
    n = chi.n
    masks = [t.masks() for t in topes]
    for tp, tn in tope_masks(chi):
        adj = {}
        for j in range(n):
            bit = 1 << j
            adj[j + 1] = [i for i, (p, q) in enumerate(masks, 1) if (tp & p | tn & q) & bit]
        if capacity is None:
            # one element per tope: match tope indices to elements
            by_index = {i: [j for j in range(1, n + 1) if i in adj[j]] for i in range(1, len(topes) + 1)}
            m = saturating_matching(list(by_index), by_index)
            if m is not None:
                return TransversalCertificate(SignVector.from_masks(n, tp, tn), {j: i for i, j in m.items()})
        else:
            m = saturating_matching(list(range(1, n + 1)), adj, capacity)
            if m is not None:
                return TransversalCertificate(SignVector.from_masks(n, tp, tn), m)
    return None


def find_transversal(chi: Chirotope, topes, force: bool = False) -> TransversalCertificate | None:
    """First tope (in + < - order) agreeing with each T_i on a distinct element, or None."""
    topes = _validate(chi, topes, force)
    if len(topes) != chi.n:
        raise PreconditionError(f"need n = {chi.n} topes, got {len(topes)}")
    return _search(chi, topes)


def common_elements(topes) -> list[tuple[int, int]]:
    """Pairs (e, s) with T(e) = s for every tope T."""
    n = len(topes[0])
    return [(j, topes[0](j)) for j in range(1, n + 1) if len({t(j) for t in topes}) == 1]


def verify_common_element(chi: Chirotope, topes) -> TransversalCertificate:
    topes = _validate(chi, topes, force=False)
    if not topes or not common_elements(topes):
        detail = ", ".join(f"{j}: {''.join(sorted({str(SignVector((t(j),))) for t in topes}))}"
                           for j in range(1, chi.n + 1))
        raise PreconditionError(f"the topes agree on no element (signs seen per element: {detail})")
    cert = find_transversal(chi, topes)
    if cert is None:
        raise TheoremViolation("topes agreeing on an element admit no transversal tope",
                               instance=_dump(chi, topes))
    return cert


def find_partition_transversal(chi: Chirotope, topes, mult) -> TransversalCertificate:
    topes = _validate(chi, topes, force=False)
    mult = list(mult)
    if len(topes) != chi.r:
        raise PreconditionError(f"need r = {chi.r} topes, got {len(topes)}")
    if len(mult) != len(topes) or any(m < 1 for m in mult) or sum(mult) != chi.n:
        raise PreconditionError(f"multiplicities {mult} must be {len(topes)} positive integers summing to {chi.n}")
    cert = _search(chi, topes, capacity={i: m for i, m in enumerate(mult, 1)})
    if cert is None:
        raise TheoremViolation("no partition transversal exists", instance=_dump(chi, topes, mult))
    return cert


def verify_certificate(chi: Chirotope, topes, cert: TransversalCertificate, mult=None) -> bool:
    """Independent re-check: tope membership, agreements and bijection/partition sizes."""
    t = cert.tope
    if len(t) != chi.n or 0 in t or t.masks() not in covector_masks(chi):
        return False
    if set(cert.assignment) != set(range(1, chi.n + 1)):
        return False
    if any(not 1 <= i <= len(topes) or topes[i - 1](j) != t(j) for j, i in cert.assignment.items()):
        return False
    sizes = [len(p) for p in cert.parts(len(topes))]
    if mult is None:
        return sizes == [1] * len(topes)
    return sizes == list(mult)


# F^I and the box complexes L^I ---------------------------------------------

def composite(topes, tup) -> SignVector:
    """(T_{i_1}(1), ..., T_{i_n}(n))."""
    return SignVector(topes[i - 1](j) for j, i in enumerate(tup, 1))


def fI_member(chi: Chirotope, topes, I, tup) -> bool:
    """Whether the tuple (i_1..i_n) ∈ I^n composes the topes into a covector."""
    I = frozenset(I)
    if len(tup) != chi.n:
        raise PreconditionError(f"tuple has length {len(tup)}, expected {chi.n}")
    for i in I:
        if not 1 <= i <= len(topes):
            raise PreconditionError(f"index {i} outside [1, {len(topes)}]")
    for i in tup:
        if i not in I:
            raise PreconditionError(f"tuple entry {i} is not in I = {sorted(I)}")
    return composite(topes, tup).masks() in covector_masks(chi)


def box_dim(box) -> int:
    return sum(len(t) - 1 for t in box)


def _facets(box):
    for j, t in enumerate(box):
        if len(t) > 1:
            for x in range(len(t)):
                yield box[:j] + (t[:x] + t[x + 1:],) + box[j + 1:]


def li_boxes(chi: Chirotope, topes, I, max_dim: int | None = None) -> list[list[tuple]]:
    """Cells of L^I grouped by dimension.

    A box is a tuple (τ_1..τ_n) of sorted index tuples; it is a cell when all
    its vertex tuples lie in F^I, equivalently when all its facets are cells.
    """
    I = sorted(set(I))
    n = chi.n
    if len(I) ** n > current_limits().max_faces:
        raise LimitExceeded(f"|I|^n = {len(I) ** n} exceeds the face limit")
    cov = covector_masks(chi)
    masks = [topes[i - 1].masks() for i in I]
    # per element j, the bit contributed by choosing index I[x]
    level = []
    for tup in itertools.product(range(len(I)), repeat=n):
        p = q = 0
        for j, x in enumerate(tup):
            p |= masks[x][0] & (1 << j)
            q |= masks[x][1] & (1 << j)
        if (p, q) in cov:
            level.append(tuple((I[x],) for x in tup))
    levels = [sorted(level)]
    top = n * (len(I) - 1)
    if max_dim is not None:
        top = min(top, max_dim)
    limit = current_limits().max_faces
    total = len(level)
    for _ in range(top):
        current = set(levels[-1])
        nxt = set()
        for box in levels[-1]:
            for j, t in enumerate(box):
                for i in I:
                    if i in t:
                        continue
                    cand = box[:j] + (tuple(sorted(t + (i,))),) + box[j + 1:]
                    if cand not in nxt and all(f in current for f in _facets(cand)):
                        nxt.add(cand)
        if not nxt:
            break
        total += len(nxt)
        if total > limit:
            raise LimitExceeded(f"L^I has more than {limit} cells")
        levels.append(sorted(nxt))
    return levels


def box_poset(levels) -> Poset:
    """Cells of a box complex ordered by componentwise inclusion."""
    up: dict = {}
    cofaces: dict = {}
    for lev in levels:
        for box in lev:
            up[box] = set()
            cofaces[box] = []
    for lev in levels[1:]:
        for box in lev:
            for f in _facets(box):
                cofaces[f].append(box)
    for lev in reversed(levels):
        for box in lev:
            for g in cofaces[box]:
                up[box].add(g)
                up[box] |= up[g]
    return Poset.from_up_sets(up)


def build_LI(chi: Chirotope, topes, I, max_dim: int | None = None) -> SimplicialComplex:
    """L^I as a simplicial complex: the order complex of its cell poset.

    ``max_dim`` keeps only cells of dimension at most max_dim, which gives the
    barycentric subdivision of that skeleton.
    """
    return order_complex(box_poset(li_boxes(chi, topes, I, max_dim)))


def box_betti(levels) -> list[int]:
    """Reduced Z/2 Betti numbers (dimensions -1 .. top) of a box complex, cellularly.

    Over Z/2 the cellular boundary of a product of simplices is the sum of
    its facets, and the boundary of a vertex is the augmentation.
    """
    counts = [1] + [len(lev) for lev in levels]
    ranks = [0]  # rank of the map from (-1)-chains
    for d, lev in enumerate(levels):
        if d == 0:
            ranks.append(1 if lev else 0)
            continue
        index = {b: x for x, b in enumerate(levels[d - 1])}
        cols = []
        for box in lev:
            mask = 0
            for f in _facets(box):
                mask ^= 1 << index[f]
            cols.append(mask)
        ranks.append(gf2.rank(cols))
    ranks.append(0)
    return [counts[q] - ranks[q] - ranks[q + 1] for q in range(len(counts))]


# pipelines -------------------------------------------------------------------

def _label(box, mult) -> int:
    singles: dict[int, int] = {}
    for t in box:
        if len(t) == 1:
            singles[t[0]] = singles.get(t[0], 0) + 1
    for i in sorted(singles):
        if singles[i] >= (1 if mult is None else mult[i - 1]):
            return i
    raise TheoremViolation(f"cell {box} has no admissible label")


def transversal_family(chi: Chirotope, topes, mult=None) -> ComplexFamily:
    k = len(topes)
    complexes = {}
    for sub in nonempty_subsets(k):
        complexes[sub] = build_LI(chi, topes, sub, max_dim=len(sub) - 1)
    return ComplexFamily(k, complexes)


def _cellular_chains(cells: dict, k: int) -> dict:
    """Chains c^I on the cells of the skeleta, as sets of boxes.

    ``cells[I]`` holds the levels of the (|I|-1)-skeleton of L^I.  Same
    induction as the simplicial engine, with the cellular boundary.
    """
    chains: dict = {frozenset(): None}
    for sub in nonempty_subsets(k):
        levels = cells[sub]
        s = len(sub)
        betti = box_betti(levels)[:s]  # dimensions -1 .. |I|-2
        if any(betti):
            raise ConnectivityError(
                f"L^{sorted(sub)} is not homologically {s - 2}-connected (reduced Betti numbers {betti})",
                subset=sub, obstruction=betti)
        if s == 1:
            chains[sub] = frozenset({levels[0][0]})
            continue
        target: frozenset = frozenset()
        for i in sub:
            target ^= chains[sub - {i}]
        rows = {b: x for x, b in enumerate(levels[s - 2])}
        tmask = sum(1 << rows[b] for b in target)
        top = levels[s - 1] if len(levels) >= s else []
        cols = []
        for box in top:
            mask = 0
            for f in _facets(box):
                mask ^= 1 << rows[f]
            cols.append(mask)
        picked = gf2.solve(cols, tmask)
        if picked is None:
            raise ConnectivityError(f"no chain in L^{sorted(sub)} bounds the required cycle", subset=sub)
        chains[sub] = frozenset(top[c] for c in picked)
    return chains


def _flags(box):
    """Full flags v ⊂ ... ⊂ box, listed bottom first, in a fixed order."""
    if box_dim(box) == 0:
        yield (box,)
        return
    for f in sorted(set(_facets(box))):
        for flag in _flags(f):
            yield flag + (box,)


def transversal_pipeline(chi: Chirotope, topes, mult=None, method: str = "auto", keep: bool = False):
    """Certificate from the rainbow chain τ^1 ⊂ ... ⊂ τ^k of the box-complex family.

    Without ``mult`` this is the n-topes version (k = n); with it, the
    partition version (k = r).  ``method="simplicial"`` runs the rainbow
    engine on the barycentric subdivisions K^I of the skeleta.
    ``method="cellular"`` solves for the chains c^I on the cells of the
    skeleta instead and subdivides only at the end: mapping a cell to the sum
    of its full flags is a chain map into K^I, so the subdivided chains obey
    the same boundary identities and their top chain carries an odd number of
    rainbow flags.  "auto" picks simplicial for k <= 3.
    """
    topes = _validate(chi, topes, force=False)
    k = len(topes)
    if mult is None:
        if k != chi.n:
            raise PreconditionError(f"need n = {chi.n} topes, got {k}")
        if not common_elements(topes):
            raise PreconditionError("the topes agree on no element")
    else:
        mult = list(mult)
        if k != chi.r or len(mult) != k or any(m < 1 for m in mult) or sum(mult) != chi.n:
            raise PreconditionError("need r topes and r positive multiplicities summing to n")
    if method == "auto":
        method = "simplicial" if k <= 3 else "cellular"
    if method == "simplicial":
        family = transversal_family(chi, topes, mult)
        full = family[frozenset(range(1, k + 1))]
        labeling = {box: _label(box, mult) for box in full.vertices}
        simplex = find_rainbow_simplex(family, labeling)
        chain = tuple(sorted(simplex, key=box_dim))
    elif method == "cellular":
        family = {sub: li_boxes(chi, topes, sub, max_dim=len(sub) - 1) for sub in nonempty_subsets(k)}
        chains = _cellular_chains(family, k)
        rainbow = [flag for cell in sorted(chains[frozenset(range(1, k + 1))]) for flag in _flags(cell)
                   if len({_label(b, mult) for b in flag}) == k]
        if len(rainbow) % 2 == 0:
            raise TheoremViolation("the top chain carries an even number of rainbow flags",
                                   instance=_dump(chi, topes, mult))
        chain = rainbow[0]
    else:
        raise PreconditionError(f"unknown method {method!r}")
    bottom = chain[0]
    if box_dim(bottom) != 0:
        raise TheoremViolation("rainbow chain does not start at a vertex", instance=_dump(chi, topes, mult))
    tup = tuple(t[0] for t in bottom)
    cert = TransversalCertificate(composite(topes, tup), {j: i for j, i in enumerate(tup, 1)})
    if not verify_certificate(chi, topes, cert, mult):
        raise TheoremViolation(f"pipeline certificate {cert.render()} fails verification",
                               instance=_dump(chi, topes, mult))
    if keep:
        return cert, family, chain
    return cert
