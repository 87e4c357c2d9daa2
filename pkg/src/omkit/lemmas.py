"""Statement-level homology checks for the connectivity lemmas.

Each check builds the relevant complex, computes reduced Z/2 Betti numbers
and compares them with what the lemma asserts:

* covector sets L_{J+,J-}: a sphere of dimension rank - 1 when both sets
  are empty, otherwise a ball as soon as the set contains a tope;
* positive vector sets V+_{e,h}: homologically (h-2)-connected when non-empty;
* box complexes L^I of a uniform oriented matroid: (r-2)-connected, and
  contractible when the topes agree on an element.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chirotope import Chirotope
from .covectors import covector_set_jj_masks, positive_vectors_eh_masks, tope_masks
from .errors import PreconditionError
from .rainbow import nonempty_subsets
from .signvec import conforms_masks
from .simplicial import Poset, SimplicialComplex, betti_vector, order_complex
from .transversal import box_betti, common_elements, li_boxes


@dataclass(frozen=True)
class LemmaCheck:
    name: str
    holds: bool
    betti: tuple  # reduced Betti numbers from dimension -1 upward
    expected: str
    note: str = ""

    def render(self) -> dict:
        return {"name": self.name, "holds": self.holds, "betti": list(self.betti),
                "expected": self.expected, "note": self.note}


def _mask_poset(masks) -> Poset:
    elems = list(masks)
    up = {x: {y for y in elems if y != x and conforms_masks(x, y)} for x in elems}
    return Poset.from_up_sets(up)


def jj_complex(chi: Chirotope, jplus, jminus) -> SimplicialComplex:
    """Order complex of L_{J+,J-} under conformity."""
    return order_complex(_mask_poset(covector_set_jj_masks(chi, jplus, jminus)))


def hh_complex(chi: Chirotope, e: int, h: int) -> SimplicialComplex:
    """Order complex of V+_{e,h} under conformity."""
    return order_complex(_mask_poset(positive_vectors_eh_masks(chi, e, h)))


def check_lemma_jj(chi: Chirotope, jplus, jminus) -> LemmaCheck:
    jplus, jminus = sorted(set(jplus)), sorted(set(jminus))
    masks = covector_set_jj_masks(chi, jplus, jminus)
    name = f"L_{{J+={jplus}, J-={jminus}}}"
    betti = tuple(betti_vector(order_complex(_mask_poset(masks))))
    if not jplus and not jminus:
        want = [0] * (chi.r + 1)
        want[chi.r] = 1  # index 0 is dimension -1
        padded = list(betti) + [0] * max(0, len(want) - len(betti))
        return LemmaCheck(name, padded == want + [0] * (len(padded) - len(want)), betti,
                          f"sphere of dimension {chi.r - 1}")
    topes = set(tope_masks(chi))
    if not masks & topes:
        return LemmaCheck(name, True, betti, "no claim", "the set contains no tope")
    return LemmaCheck(name, not any(betti), betti, "acyclic (ball)")


def check_lemma_hh(chi: Chirotope, e: int, h: int) -> LemmaCheck:
    masks = positive_vectors_eh_masks(chi, e, h)
    name = f"V+_{{e={e}, h={h}}}"
    if not masks:
        return LemmaCheck(name, True, (1,), "no claim", "the set is empty")
    betti = tuple(betti_vector(order_complex(_mask_poset(masks))))
    return LemmaCheck(name, not any(betti[:h]), betti, f"homologically {h - 2}-connected")


def check_lemma_li(chi: Chirotope, topes, subsets=None) -> list[LemmaCheck]:
    """Check every non-empty I (or the given ones) cellularly on the box complex L^I."""
    known = set(tope_masks(chi))
    for t in topes:
        if len(t) != chi.n or t.masks() not in known:
            raise PreconditionError(f"{t} is not a tope")
    if subsets is None:
        subsets = list(nonempty_subsets(len(topes)))
    out = []
    for sub in subsets:
        sub = sorted(set(sub))
        betti = tuple(box_betti(li_boxes(chi, topes, sub)))
        chosen = [topes[i - 1] for i in sub]
        if common_elements(chosen):
            out.append(LemmaCheck(f"L^{sub}", not any(betti), betti, "acyclic (agreeing element)"))
        else:
            out.append(LemmaCheck(f"L^{sub}", not any(betti[:chi.r]), betti,
                                  f"homologically {chi.r - 2}-connected"))
    return out
