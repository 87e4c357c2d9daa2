"""Random instance generation and plain-text instance files.

All randomness goes through a caller-supplied `random.Random` (Mersenne
Twister), so a seed fixes every instance on every platform.
"""

from __future__ import annotations

import random
from pathlib import Path

from .chirotope import Chirotope, chirotope_from_matrix, is_uniform
from .covectors import positive_circuit_masks, tope_masks
from .errors import ParseError, PreconditionError
from .exact import RationalMatrix, rank
from .signvec import SignVector

BOUND = 10
MAX_RESAMPLES = 10_000


def random_matrix(r: int, n: int, rng: random.Random, bound: int = BOUND) -> RationalMatrix:
    """Integer matrix of full row rank with entries uniform in [-bound, bound]."""
    if not 1 <= r <= n:
        raise PreconditionError(f"need 1 <= r <= n, got r={r}, n={n}")
    for _ in range(MAX_RESAMPLES):
        m = RationalMatrix([[rng.randint(-bound, bound) for _ in range(n)] for _ in range(r)])
        if rank(m) == r:
            return m
    raise PreconditionError("could not draw a full-rank matrix")


def random_uniform_matrix(r: int, n: int, rng: random.Random, bound: int = BOUND) -> RationalMatrix:
    """Like `random_matrix`, resampled until every r-subset of columns is a basis."""
    for _ in range(MAX_RESAMPLES):
        m = random_matrix(r, n, rng, bound)
        if is_uniform(chirotope_from_matrix(m)):
            return m
    raise PreconditionError(f"no uniform {r}x{n} matrix with entries in [-{bound}, {bound}] found")


def random_conic_instance(r: int, n: int, rng: random.Random, bound: int = BOUND, uniform: bool = False):
    """A matrix, an element e and r positive circuits through e (drawn with replacement).

    Small entry bounds give non-uniform matrices and hence smaller circuits.
    """
    for _ in range(MAX_RESAMPLES):
        m = random_uniform_matrix(r, n, rng, bound) if uniform else random_matrix(r, n, rng, bound)
        chi = chirotope_from_matrix(m)
        pcs = sorted(positive_circuit_masks(chi))
        if not pcs:
            continue
        elements = sorted({j + 1 for p, _ in pcs for j in range(n) if p >> j & 1})
        e = rng.choice(elements)
        through = [c for c in pcs if c[0] >> (e - 1) & 1]
        circuits = [SignVector.from_masks(n, *rng.choice(through)) for _ in range(r)]
        return m, e, circuits
    raise PreconditionError("no matrix with a positive circuit found")


def random_convex_instance(r: int, n: int, rng: random.Random, bound: int = BOUND):
    """A rank r-1 matrix with r positive circuits (drawn with replacement)."""
    for _ in range(MAX_RESAMPLES):
        m = random_matrix(r - 1, n, rng, bound)
        pcs = sorted(positive_circuit_masks(chirotope_from_matrix(m)))
        if pcs:
            return m, [SignVector.from_masks(n, *rng.choice(pcs)) for _ in range(r)]
    raise PreconditionError("no matrix with a positive circuit found")


def random_topes(chi: Chirotope, k: int, rng: random.Random, agree: tuple[int, int] | None = None) -> list[SignVector]:
    """k topes drawn uniformly with replacement; ``agree=(e, s)`` conditions on T(e) = s."""
    pool = tope_masks(chi)
    if agree is not None:
        e, s = agree
        bit = 1 << (e - 1)
        pool = [t for t in pool if (t[0] if s > 0 else t[1]) & bit]
    if not pool:
        raise PreconditionError("no tope satisfies the condition")
    return [SignVector.from_masks(chi.n, *rng.choice(pool)) for _ in range(k)]


# files ------------------------------------------------------------------------

def parse_sign_vectors(text: str, full_support: bool = False) -> list[SignVector]:
    """One sign vector per line over {+,-,0}; blank lines and '#' comments skipped."""
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        try:
            v = SignVector.parse(s)
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
        if full_support and 0 in v:
            raise ParseError(f"line {lineno}: tope {s} must have full support")
        out.append(v)
    if out and len({len(v) for v in out}) != 1:
        raise ParseError("sign vectors have different lengths")
    return out


def read_om(path) -> Chirotope:
    """Load a chirotope from a .chi file, or a matrix file (anything else)."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    if str(path).endswith(".chi"):
        return Chirotope.parse(text)
    return chirotope_from_matrix(RationalMatrix.parse(text))


def parse_int_list(text: str) -> list[int]:
    if not text.strip():
        return []
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise ParseError(f"expected a comma-separated integer list, got {text!r}") from None
