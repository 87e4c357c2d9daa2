"""Brute-force oracles used to cross-check the package.

Nothing here goes through chirotopes or the package's enumeration code:
circuits come from minimal dependent column sets, covectors from the
hyperplane picture, transversals and word permutations from exhaustive
permutation search.
"""

from __future__ import annotations

import itertools
from fractions import Fraction


def _rank(rows) -> int:
    m = [list(map(Fraction, r)) for r in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        piv = next((i for i in range(rank, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][c] != 0:
                f = m[i][c] / m[rank][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def _cols(matrix, idx):
    return [[row[j] for j in idx] for row in matrix]


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _null_vector(matrix, idx):
    """A nonzero kernel vector of the columns idx (assumes corank one), by Cramer-like cofactors."""
    rows = [[Fraction(row[j]) for j in idx] for row in matrix]
    # reduce to an independent row set of size |idx| - 1
    basis = []
    for r in rows:
        if _rank(basis + [r]) > len(basis):
            basis.append(r)
    k = len(idx)
    vec = []
    for t in range(k):
        minor = [[r[c] for c in range(k) if c != t] for r in basis]
        vec.append((-1) ** t * _det(minor))
    return vec


def _det(m):
    n = len(m)
    if n == 0:
        return Fraction(1)
    total = Fraction(0)
    for perm in itertools.permutations(range(n)):
        inv = sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])
        prod = Fraction(1)
        for i in range(n):
            prod *= m[i][perm[i]]
        total += (-1) ** inv * prod
    return total


def matrix_circuits(matrix) -> set[str]:
    """Sign vectors of minimal linear dependencies among the columns."""
    n = len(matrix[0])
    out = set()
    dependent_supports = []
    for size in range(1, n + 1):
        for idx in itertools.combinations(range(n), size):
            if any(set(s) <= set(idx) for s in dependent_supports):
                continue
            if _rank(_cols(matrix, idx)) == size - 1:
                dependent_supports.append(idx)
                vec = _null_vector(matrix, idx)
                full = [0] * n
                for j, v in zip(idx, vec):
                    full[j] = _sign(v)
                s = "".join("+" if x > 0 else "-" if x < 0 else "0" for x in full)
                out.add(s)
                out.add(s.translate(str.maketrans("+-", "-+")))
    return out


def matrix_covectors(matrix) -> set[str]:
    """Sign vectors (y M) for y ranging over cocircuit normals and their compositions.

    Cocircuits: y orthogonal to a hyperplane spanned by columns.  Covectors:
    closure under composition, computed here on strings.
    """
    r, n = len(matrix), len(matrix[0])
    cocircuits = set()
    for idx in itertools.combinations(range(n), r - 1):
        sub = _cols(matrix, idx)
        if _rank(sub) != r - 1:
            continue
        # y spans the left kernel of the r x (r-1) block
        transposed = [[sub[i][c] for i in range(r)] for c in range(r - 1)]
        y = _null_vector(transposed, list(range(r))) if r > 1 else [Fraction(1)]
        vals = [sum(Fraction(y[i]) * matrix[i][j] for i in range(r)) for j in range(n)]
        s = "".join("+" if v > 0 else "-" if v < 0 else "0" for v in vals)
        cocircuits.add(s)
        cocircuits.add(s.translate(str.maketrans("+-", "-+")))
    cov = {"0" * n} | cocircuits
    while True:
        new = {compose_str(a, b) for a in cov for b in cov} - cov
        if not new:
            return cov
        cov |= new


def compose_str(a: str, b: str) -> str:
    return "".join(x if x != "0" else y for x, y in zip(a, b))


def topes_from_covectors(cov) -> set[str]:
    width = max(sum(c != "0" for c in x) for x in cov)
    return {x for x in cov if sum(c != "0" for c in x) == width}


def alternation(word: str) -> int:
    return 1 + sum(1 for a, b in zip(word, word[1:]) if a != b)


def alternating_topes(n: int, r: int) -> set[str]:
    return {"".join(w) for w in itertools.product("+-", repeat=n) if alternation("".join(w)) <= r}


def transversal_exists(tope_set, topes) -> bool:
    """Some tope agrees with topes[pi(j)] at j for a permutation pi."""
    n = len(topes)
    for t in tope_set:
        for perm in itertools.permutations(range(n)):
            if all(topes[perm[j]][j] == t[j] for j in range(n)):
                return True
    return False


def words_permutation_exists(words) -> bool:
    n = len(words)
    return any(alternation("".join(words[p[i]][i] for i in range(n))) <= 2
               for p in itertools.permutations(range(n)))


def rainbow_conic_exists(circuits_str, e: int, chosen) -> bool:
    """Brute force: a positive circuit through e and an injective assignment of its other elements."""
    k = len(chosen)
    for c in circuits_str:
        if "-" in c or c[e - 1] != "+":
            continue
        others = [j + 1 for j, s in enumerate(c) if s == "+" and j + 1 != e]
        for target in itertools.permutations(range(k), len(others)):
            if all(chosen[i][f - 1] == "+" for f, i in zip(others, target)):
                return True
    return False


def reduced_euler(f_vector) -> int:
    return -1 + sum((-1) ** d * f for d, f in enumerate(f_vector))


def grassmann_pluecker_3term(chi) -> bool:
    """3-term Grassmann-Pluecker relations: each triple of products is all zero or has both signs."""
    n, r = chi.n, chi.r
    if r < 2:
        return True
    for base in itertools.combinations(range(1, n + 1), r - 2):
        rest = [x for x in range(1, n + 1) if x not in base]
        for a, b, c, d in itertools.combinations(rest, 4):
            terms = {chi(*base, a, b) * chi(*base, c, d),
                     -chi(*base, a, c) * chi(*base, b, d),
                     chi(*base, a, d) * chi(*base, b, c)} - {0}
            if len(terms) == 1:
                return False
    return True
