"""Size limits shared by every exponential enumeration in the package.

Enumerations refuse inputs beyond the active limits instead of truncating.
Limits live in a context variable so the CLI can override them per run:

    with use_limits(max_n=11):
        topes(chi)
"""

from __future__ import annotations

import contextlib
import contextvars
from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Limits:
    max_n: int = 9  # ground-set size for covector / vector closure
    max_faces: int = 500_000  # faces per simplicial complex
    max_axiom_n: int = 9  # ground-set size for the exhaustive axiom check


DEFAULT_LIMITS = Limits()
_current: contextvars.ContextVar[Limits] = contextvars.ContextVar("omkit_limits", default=DEFAULT_LIMITS)


def current_limits() -> Limits:
    return _current.get()


@contextlib.contextmanager
def use_limits(**overrides):
    token = _current.set(replace(_current.get(), **overrides))
    try:
        yield _current.get()
    finally:
        _current.reset(token)
