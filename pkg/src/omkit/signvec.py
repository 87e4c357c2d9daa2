"""Sign vectors over a ground set [n] = {1, ..., n}.

A `SignVector` is an immutable tuple of entries in {-1, 0, +1}; position
``j - 1`` holds the sign of element ``j``.  The text form is a string over
``+``, ``-`` and ``0``.

Enumeration code works on the bitmask pair ``(pos, neg)`` instead (bit
``j - 1`` set when element ``j`` is positive / negative), which makes
composition and conformity single integer operations.
"""

from __future__ import annotations

from .errors import ParseError, PreconditionError

_CHAR_TO_SIGN = {"+": 1, "-": -1, "0": 0}
_SIGN_TO_CHAR = {1: "+", -1: "-", 0: "0"}


class SignVector(tuple):
    __slots__ = ()

    def __new__(cls, signs=()):
        signs = tuple(signs)
        for s in signs:
            if s not in (-1, 0, 1):
                raise PreconditionError(f"sign entries must be -1, 0 or 1, got {s!r}")
        return super().__new__(cls, signs)

    @classmethod
    def parse(cls, text: str) -> "SignVector":
        try:
            return cls(_CHAR_TO_SIGN[c] for c in text)
        except KeyError:
            raise ParseError(f"invalid sign vector {text!r}: only '+', '-', '0' allowed") from None

    @classmethod
    def zero(cls, n: int) -> "SignVector":
        return cls((0,) * n)

    @classmethod
    def from_masks(cls, n: int, pos: int, neg: int) -> "SignVector":
        return cls((pos >> j & 1) - (neg >> j & 1) for j in range(n))

    @property
    def n(self) -> int:
        return len(self)

    def __call__(self, j: int) -> int:
        """Sign of element ``j`` (1-based)."""
        return self[j - 1]

    def masks(self) -> tuple[int, int]:
        pos = neg = 0
        for j, s in enumerate(self):
            if s > 0:
                pos |= 1 << j
            elif s < 0:
                neg |= 1 << j
        return pos, neg

    def support(self) -> frozenset[int]:
        return frozenset(j + 1 for j, s in enumerate(self) if s)

    def positive_part(self) -> frozenset[int]:
        return frozenset(j + 1 for j, s in enumerate(self) if s > 0)

    def negative_part(self) -> frozenset[int]:
        return frozenset(j + 1 for j, s in enumerate(self) if s < 0)

    def is_positive(self) -> bool:
        """Nonnegative everywhere (the zero vector counts)."""
        return all(s >= 0 for s in self)

    def __neg__(self) -> "SignVector":
        return SignVector(-s for s in self)

    def compose(self, other: "SignVector") -> "SignVector":
        return compose(self, other)

    def conforms(self, other: "SignVector") -> bool:
        return conforms(self, other)

    def __str__(self) -> str:
        return "".join(_SIGN_TO_CHAR[s] for s in self)

    def __repr__(self) -> str:
        return f"SignVector('{self}')"


def _check_same_length(x, y):
    if len(x) != len(y):
        raise PreconditionError(f"sign vectors of different lengths {len(x)} and {len(y)}")


def compose(x: SignVector, y: SignVector) -> SignVector:
    """Composition: take x(j) unless it is zero, else y(j)."""
    _check_same_length(x, y)
    return SignVector(a if a else b for a, b in zip(x, y))


def conforms(x: SignVector, y: SignVector) -> bool:
    """True iff x precedes y: every nonzero x(j) equals y(j)."""
    _check_same_length(x, y)
    return all(a == 0 or a == b for a, b in zip(x, y))


# bitmask forms used by the enumeration engines

def compose_masks(a: tuple[int, int], b: tuple[int, int]) -> tuple[int, int]:
    ap, an = a
    bp, bn = b
    free = ~(ap | an)
    return ap | (bp & free), an | (bn & free)


def conforms_masks(a: tuple[int, int], b: tuple[int, int]) -> bool:
    return not (a[0] & ~b[0]) and not (a[1] & ~b[1])
