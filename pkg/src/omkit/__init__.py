"""Oriented-matroid workbench: chirotopes, Z/2 homology, rainbow simplices and colorful theorems."""

from .chirotope import (
    Chirotope,
    alternating_chirotope,
    check_chirotope,
    chirotope_from_matrix,
    circuits_from_chirotope,
    dual,
    is_uniform,
)
from .covectors import cocircuits, covectors, height, positive_vectors_eh, topes, vectors
from .exact import RationalMatrix
from .signvec import SignVector, compose, conforms

__version__ = "0.1.0"

__all__ = [
    "Chirotope",
    "RationalMatrix",
    "SignVector",
    "alternating_chirotope",
    "check_chirotope",
    "chirotope_from_matrix",
    "circuits_from_chirotope",
    "cocircuits",
    "compose",
    "conforms",
    "covectors",
    "dual",
    "height",
    "is_uniform",
    "positive_vectors_eh",
    "topes",
    "vectors",
]
