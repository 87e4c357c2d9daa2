"""Rainbow simplices from families of highly connected complexes.

Given complexes K^I for I ⊆ [k] (monotone in I, K^I homologically
(|I|-2)-connected) and a labeling with labels of K^I vertices in I, there is
a (k-1)-simplex of K^[k] whose vertices carry k distinct labels.  The
engine builds chains c^I with

    c^∅ = 1,   ∂c^I = Σ_{i∈I} c^{I∖{i}},   c^I supported by K^I,

by induction on |I| (one GF(2) linear solve per subset), then reads a
rainbow simplex off the support of c^[k].  Pushing c^I forward through the
labeling gives exactly the top simplex on I, so an odd number of rainbow
simplices sits in that support.

Sperner's lemma and Meshulam's lemma are the two special families built by
`sperner_family` and `meshulam_family`.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from . import gf2
from .errors import ConnectivityError, OMError, ParseError, PreconditionError
from .simplicial import (
    SimplicialComplex,
    Z2Chain,
    barycentric_subdivision,
    betti_z2,
    boundary,
    full_simplex,
    parse_cpx,
)


def nonempty_subsets(k: int):
    """Non-empty subsets of [k] by size, then lexicographically."""
    for s in range(1, k + 1):
        for c in itertools.combinations(range(1, k + 1), s):
            yield frozenset(c)


@dataclass(frozen=True)
class ComplexFamily:
    k: int
    complexes: dict = field(hash=False)

    def __getitem__(self, subset) -> SimplicialComplex:
        subset = frozenset(subset)
        if not subset:
            return SimplicialComplex.empty()
        return self.complexes[subset]

    def check_monotone(self) -> list[tuple[frozenset, frozenset]]:
        """Pairs (I, I ∪ {j}) violating K^I ⊆ K^{I∪{j}}; empty when monotone."""
        bad = []
        for sub in nonempty_subsets(self.k):
            for j in range(1, self.k + 1):
                if j in sub:
                    continue
                sup = sub | {j}
                if not self[sub].is_subcomplex_of(self[sup]):
                    bad.append((sub, sup))
        return bad

    def connectivity_failures(self) -> list[frozenset]:
        """Subsets I whose complex is not homologically (|I|-2)-connected."""
        bad = []
        for sub in nonempty_subsets(self.k):
            kk = self[sub]
            if any(betti_z2(kk, q) for q in range(-1, len(sub) - 1)):
                bad.append(sub)
        return bad

    def check(self):
        """Raise unless the family is monotone and passes its connectivity certificate."""
        missing = [s for s in nonempty_subsets(self.k) if s not in self.complexes]
        if missing:
            raise PreconditionError(f"family lacks complexes for {[sorted(s) for s in missing]}")
        bad = self.check_monotone()
        if bad:
            a, b = bad[0]
            raise PreconditionError(f"K^{sorted(a)} is not a subcomplex of K^{sorted(b)}")
        fails = self.connectivity_failures()
        if fails:
            sub = fails[0]
            kk = self[sub]
            bettis = {q: betti_z2(kk, q) for q in range(-1, len(sub) - 1)}
            raise ConnectivityError(
                f"K^{sorted(sub)} is not homologically {len(sub) - 2}-connected "
                f"(reduced Betti numbers {bettis})", subset=sub, obstruction=bettis)


def check_labeling(family: ComplexFamily, labeling: dict):
    """Raise unless labeling(v) ∈ I for every vertex v of every K^I."""
    for sub in nonempty_subsets(family.k):
        for v in family[sub].vertices:
            if v not in labeling:
                raise PreconditionError(f"vertex {v!r} has no label")
            if labeling[v] not in sub:
                raise PreconditionError(
                    f"vertex {v!r} of K^{sorted(sub)} has label {labeling[v]} outside the subset")


def build_chain_family(family: ComplexFamily, check: bool = True) -> dict:
    """Chains c^I for all I ⊆ [k], keyed by frozenset."""
    if check:
        family.check()
    chains: dict = {frozenset(): Z2Chain.one()}
    for i in range(1, family.k + 1):
        kk = family[{i}]
        if not kk.vertices:
            raise ConnectivityError(f"K^{{{i}}} is empty", subset=frozenset({i}))
        chains[frozenset({i})] = Z2Chain(0, frozenset({(kk.vertices[0],)}))
    for s in range(2, family.k + 1):
        for combo in itertools.combinations(range(1, family.k + 1), s):
            sub = frozenset(combo)
            kk = family[sub]
            target = Z2Chain(s - 2)
            for i in combo:
                target = target + chains[sub - {i}].canonical(kk)
            rows = kk.face_index(s - 2)
            try:
                tmask = sum(1 << rows[f] for f in target.simplices)
            except KeyError:
                raise ConnectivityError(f"chains below K^{sorted(sub)} leave the complex", subset=sub) from None
            cols = kk.boundary_columns(s - 1)
            picked = gf2.solve(cols, tmask)
            if picked is None:
                residue = gf2.reduce(cols, tmask)
                faces = kk.faces_of_dim(s - 2)
                cycle = frozenset(faces[b] for b in range(residue.bit_length()) if residue >> b & 1)
                raise ConnectivityError(
                    f"no chain in K^{sorted(sub)} bounds the required cycle; "
                    f"H_{s - 2} of K^{sorted(sub)} is nonzero",
                    subset=sub, obstruction=cycle)
            top = kk.faces_of_dim(s - 1)
            chains[sub] = Z2Chain(s - 1, frozenset(top[c] for c in picked))
    return chains


def verify_chain_family(family: ComplexFamily, chains: dict) -> bool:
    """Recompute every boundary from scratch and check support and the ∂ identities."""
    if chains.get(frozenset()) != Z2Chain.one():
        return False
    for sub in nonempty_subsets(family.k):
        kk = family[sub]
        c = chains[sub]
        if c.dim != len(sub) - 1 or any(s not in kk for s in c.simplices):
            return False
        expected = Z2Chain(len(sub) - 2)
        for i in sub:
            expected = expected + chains[sub - {i}].canonical(kk)
        if boundary(c, kk).canonical(kk) != expected:
            return False
    return True


def pushforward_coefficient(chain: Z2Chain, labeling: dict, subset) -> int:
    """Coefficient of the simplex on ``subset`` in the image of ``chain`` under the labeling.

    Simplices whose labels repeat map to degenerate simplices and are dropped.
    """
    target = frozenset(subset)
    hits = sum(1 for s in chain.simplices if frozenset(labeling[v] for v in s) == target
               and len(s) == len(target))
    return hits % 2


def find_rainbow_simplex(family: ComplexFamily, labeling: dict, chains: dict | None = None) -> tuple:
    """A (k-1)-simplex of K^[k] with k distinct labels, from the support of c^[k]."""
    check_labeling(family, labeling)
    if chains is None:
        chains = build_chain_family(family)
    full = frozenset(range(1, family.k + 1))
    top = family[full]
    for s in sorted(chains[full].simplices, key=lambda f: [top.order[v] for v in f]):
        if len({labeling[v] for v in s}) == family.k:
            return s
    raise OMError("invariant violation: the top chain carries no rainbow simplex")


# special families -----------------------------------------------------------

def sperner_family(triangulation: SimplicialComplex, facemap: dict, k: int | None = None):
    """Family for Sperner's lemma on a triangulated simplex with vertex set [k].

    ``facemap[v]`` is the carrier of v: the smallest face of the standard
    simplex whose triangulation contains v.  K^I is the subcomplex induced on
    the vertices carried by I.  Returns the family together with the
    admissible label sets (a Sperner labeling picks labeling[v] ∈ facemap[v]).
    """
    carriers = {v: frozenset(facemap[v]) for v in triangulation.vertices if v in facemap}
    missing = [v for v in triangulation.vertices if v not in carriers]
    if missing:
        raise PreconditionError(f"facemap lacks vertices {missing[:5]!r}")
    if k is None:
        k = max(max(c) for c in carriers.values())
    for v, c in carriers.items():
        if not c or not c <= frozenset(range(1, k + 1)):
            raise PreconditionError(f"carrier of {v!r} is not a non-empty subset of [{k}]")
    for i in range(1, k + 1):
        if not any(c == {i} for c in carriers.values()):
            raise PreconditionError(f"no vertex is carried by the corner {i}")
    complexes = {sub: triangulation.induced(v for v, c in carriers.items() if c <= sub)
                 for sub in nonempty_subsets(k)}
    return ComplexFamily(k, complexes), carriers


def meshulam_family(complex_: SimplicialComplex, labeling: dict, k: int) -> ComplexFamily:
    """K^I = subcomplex induced by the vertices whose labels lie in I."""
    complexes = {sub: complex_.induced(v for v in complex_.vertices if labeling[v] in sub)
                 for sub in nonempty_subsets(k)}
    return ComplexFamily(k, complexes)


def subdivided_simplex(k: int, levels: int) -> tuple[SimplicialComplex, dict]:
    """Iterated barycentric subdivision of the simplex on [k] with vertex carriers."""
    t = full_simplex(range(1, k + 1))
    carriers = {i: frozenset({i}) for i in range(1, k + 1)}
    for _ in range(levels):
        t = barycentric_subdivision(t)
        carriers = {face: frozenset().union(*(carriers[v] for v in face)) for face in t.vertices}
    return t, carriers


def random_labeling(allowed: dict, rng: random.Random) -> dict:
    """Uniform choice of labeling[v] ∈ allowed[v], in vertex order."""
    return {v: rng.choice(sorted(allowed[v])) for v in sorted(allowed, key=repr)}


# family directory format ------------------------------------------------------

def parse_subset_name(stem: str) -> frozenset:
    try:
        sub = frozenset(int(t) for t in stem.split("-"))
    except ValueError:
        raise ParseError(f"bad family file name {stem!r}; expected e.g. '1-3-4'") from None
    return sub


def load_family(directory) -> ComplexFamily:
    from pathlib import Path

    complexes = {}
    for path in sorted(Path(directory).glob("*.cpx")):
        complexes[parse_subset_name(path.stem)] = parse_cpx(path.read_text())
    if not complexes:
        raise ParseError(f"no .cpx files in {directory}")
    k = max(max(s) for s in complexes)
    return ComplexFamily(k, complexes)


def parse_labels(text: str) -> dict:
    labels = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        toks = s.split()
        if len(toks) != 2:
            raise ParseError(f"labels line {lineno}: expected 'vertex label'")
        try:
            labels[toks[0]] = int(toks[1])
        except ValueError:
            raise ParseError(f"labels line {lineno}: label must be an integer") from None
    return labels
