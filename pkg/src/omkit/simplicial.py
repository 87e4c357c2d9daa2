"""Finite abstract simplicial complexes with Z/2 chains and reduced homology.

Faces are tuples of vertices sorted by a fixed vertex order; the empty face
is implicit and never stored.  Reduced homology is computed from ranks of
boundary matrices over GF(2), with the augmentation map as the boundary of
0-chains.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import gf2
from .config import current_limits
from .errors import LimitExceeded, ParseError, PreconditionError


def _sort_vertices(vs):
    try:
        return tuple(sorted(vs))
    except TypeError:
        return tuple(sorted(vs, key=lambda v: (type(v).__name__, repr(v))))


def _check_size(count: int):
    limit = current_limits().max_faces
    if count > limit:
        raise LimitExceeded(f"complex with more than {limit} faces refused")


@dataclass(frozen=True, eq=False)
class SimplicialComplex:
    """Downward-closed set of faces.

    Build with `SimplicialComplex.from_faces`, which takes the downward
    closure; the raw constructor assumes ``faces`` is already closed.
    """

    vertices: tuple
    faces: frozenset
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    @classmethod
    def from_faces(cls, faces) -> "SimplicialComplex":
        closed = set()
        for f in faces:
            f = frozenset(f)
            if not f:
                continue
            if f in closed:
                continue
            for k in range(1, len(f) + 1):
                for sub in itertools.combinations(f, k):
                    closed.add(frozenset(sub))
            _check_size(len(closed))
        return cls.from_closed(closed)

    @classmethod
    def from_closed(cls, faces) -> "SimplicialComplex":
        faces = [frozenset(f) for f in faces if f]
        _check_size(len(faces))
        vertices = _sort_vertices({v for f in faces for v in f})
        order = {v: i for i, v in enumerate(vertices)}
        canon = frozenset(tuple(sorted(f, key=order.__getitem__)) for f in faces)
        return cls(vertices, canon)

    @classmethod
    def empty(cls) -> "SimplicialComplex":
        return cls((), frozenset())

    def __eq__(self, other):
        return isinstance(other, SimplicialComplex) and self.faces == other.faces

    def __hash__(self):
        return hash(self.faces)

    def __len__(self):
        return len(self.faces)

    def __contains__(self, face) -> bool:
        if not face:
            return True
        try:
            return self.canonical(face) in self.faces
        except PreconditionError:
            return False

    @property
    def order(self) -> dict:
        if "order" not in self._cache:
            self._cache["order"] = {v: i for i, v in enumerate(self.vertices)}
        return self._cache["order"]

    def canonical(self, face) -> tuple:
        try:
            return tuple(sorted(set(face), key=self.order.__getitem__))
        except KeyError as exc:
            raise PreconditionError(f"unknown vertex {exc.args[0]!r}") from None

    @property
    def dimension(self) -> int:
        return max((len(f) for f in self.faces), default=0) - 1

    def faces_of_dim(self, d: int) -> list[tuple]:
        """Faces of dimension d in a fixed (lexicographic by vertex order) order."""
        cache = self._cache.setdefault("by_dim", {})
        if d not in cache:
            order = self.order
            cache[d] = sorted((f for f in self.faces if len(f) == d + 1),
                              key=lambda f: [order[v] for v in f])
        return cache[d]

    def face_index(self, d: int) -> dict:
        cache = self._cache.setdefault("index", {})
        if d not in cache:
            cache[d] = {f: i for i, f in enumerate(self.faces_of_dim(d))}
        return cache[d]

    def f_vector(self) -> list[int]:
        return [len(self.faces_of_dim(d)) for d in range(self.dimension + 1)]

    def skeleton(self, d: int) -> "SimplicialComplex":
        return SimplicialComplex(self.vertices, frozenset(f for f in self.faces if len(f) <= d + 1))

    def induced(self, vertices) -> "SimplicialComplex":
        keep = set(vertices)
        return SimplicialComplex.from_closed(f for f in self.faces if keep.issuperset(f))

    def is_subcomplex_of(self, other: "SimplicialComplex") -> bool:
        return all(f in other for f in self.faces)

    def maximal_faces(self) -> list[tuple]:
        fs = sorted(self.faces, key=len, reverse=True)
        out = []
        for f in fs:
            s = set(f)
            if not any(s < set(g) for g in out):
                out.append(f)
        return out

    # homology ---------------------------------------------------------------

    def boundary_columns(self, d: int) -> list[int]:
        """Boundary of each d-face as a bitmask over the (d-1)-faces."""
        if d == 0:
            return [1] * len(self.faces_of_dim(0))
        rows = self.face_index(d - 1)
        cols = []
        for f in self.faces_of_dim(d):
            mask = 0
            for i in range(len(f)):
                mask |= 1 << rows[f[:i] + f[i + 1:]]
            cols.append(mask)
        return cols

    def boundary_rank(self, d: int) -> int:
        """Rank of the boundary map from d-chains (d >= 0) to (d-1)-chains."""
        cache = self._cache.setdefault("rank", {})
        if d not in cache:
            cache[d] = gf2.rank(self.boundary_columns(d)) if d >= 0 else 0
        return cache[d]

    def chain_count(self, d: int) -> int:
        if d == -1:
            return 1
        return len(self.faces_of_dim(d))


def betti_z2(k: SimplicialComplex, q: int) -> int:
    """Rank of the q-th reduced homology group with Z/2 coefficients (q >= -1)."""
    if q < -1:
        raise PreconditionError("reduced homology starts in dimension -1")
    if q > k.dimension:
        return 0
    return k.chain_count(q) - k.boundary_rank(q) - k.boundary_rank(q + 1)


def reduced_homology_trivial_up_to(k: SimplicialComplex, m: int) -> bool:
    """Homologically m-connected: reduced Z/2 homology vanishes for -1 <= q <= m."""
    return all(betti_z2(k, q) == 0 for q in range(-1, m + 1))


def betti_vector(k: SimplicialComplex) -> list[int]:
    """Reduced Betti numbers in dimensions -1 .. dim K."""
    return [betti_z2(k, q) for q in range(-1, k.dimension + 1)]


def is_acyclic(k: SimplicialComplex) -> bool:
    return all(b == 0 for b in betti_vector(k))


# chains ---------------------------------------------------------------------

@dataclass(frozen=True)
class Z2Chain:
    """A Z/2 chain: a set of faces of one dimension; addition is symmetric difference.

    The two (-1)-chains are ``Z2Chain(-1, {()})`` (the generator 1) and the
    empty chain.
    """

    dim: int
    simplices: frozenset = frozenset()

    def __post_init__(self):
        simplices = frozenset(tuple(s) for s in self.simplices)
        if any(len(s) != self.dim + 1 for s in simplices):
            raise PreconditionError(f"chain of dimension {self.dim} holds faces of another size")
        object.__setattr__(self, "simplices", simplices)

    def __add__(self, other: "Z2Chain") -> "Z2Chain":
        if other.dim != self.dim:
            raise PreconditionError("adding chains of different dimensions")
        return Z2Chain(self.dim, self.simplices ^ other.simplices)

    def __bool__(self):
        return bool(self.simplices)

    @classmethod
    def one(cls) -> "Z2Chain":
        return cls(-1, frozenset({()}))

    def canonical(self, k: SimplicialComplex) -> "Z2Chain":
        return Z2Chain(self.dim, frozenset(k.canonical(s) for s in self.simplices))


def boundary(c: Z2Chain, k: SimplicialComplex) -> Z2Chain:
    """Mod-2 boundary; a 0-chain maps to its vertex count mod 2 times the (-1)-generator."""
    out: set = set()
    for s in c.simplices:
        if s and s not in k:
            raise PreconditionError(f"simplex {s} is not a face of the complex")
        s = k.canonical(s) if s else s
        if not s:
            continue
        for i in range(len(s)):
            out ^= {s[:i] + s[i + 1:]}
    return Z2Chain(c.dim - 1, frozenset(out))


# posets and order complexes -------------------------------------------------

class Poset:
    """Finite poset given by its elements and a `leq` relation.

    The relation is tabulated once; reflexivity, antisymmetry and
    transitivity are checked exhaustively on the table.
    """

    def __init__(self, elements, leq, check: bool = True):
        self.elements = _sort_vertices(set(elements))
        self.leq = leq
        self.up = {a: frozenset(b for b in self.elements if b != a and leq(a, b)) for a in self.elements}
        if check:
            self._check()

    def _check(self):
        for a in self.elements:
            if not self.leq(a, a):
                raise PreconditionError(f"relation is not reflexive at {a!r}")
            for b in self.up[a]:
                if a in self.up[b]:
                    raise PreconditionError(f"relation is not antisymmetric on {a!r}, {b!r}")
                if not self.up[b] <= self.up[a]:
                    raise PreconditionError(f"relation is not transitive through {b!r}")

    @classmethod
    def from_up_sets(cls, up: dict) -> "Poset":
        """Build from precomputed strict up-sets (trusted, no relation check)."""
        p = cls.__new__(cls)
        p.elements = _sort_vertices(up)
        p.up = {a: frozenset(up[a]) for a in p.elements}
        p.leq = lambda a, b: a == b or b in p.up[a]
        return p


def order_complex(p: Poset, max_dim: int | None = None) -> SimplicialComplex:
    """Chains of the poset; ``max_dim`` truncates to chains of at most max_dim + 1 elements."""
    limit = current_limits().max_faces
    cap = None if max_dim is None else max_dim + 1
    faces = []

    def extend(chain, candidates):
        faces.append(chain)
        if len(faces) > limit:
            raise LimitExceeded(f"order complex with more than {limit} faces refused")
        if cap is not None and len(chain) >= cap:
            return
        for b in candidates:
            extend(chain + (b,), candidates & p.up[b])

    for a in p.elements:
        extend((a,), p.up[a])
    return SimplicialComplex.from_closed(faces)


def face_poset(k: SimplicialComplex) -> Poset:
    """Nonempty faces of K ordered by inclusion."""
    by_size: dict[int, list] = {}
    for f in k.faces:
        by_size.setdefault(len(f), []).append(f)
    up: dict = {f: set() for f in k.faces}
    # direct cofaces, then propagate downward from the top
    cofaces: dict = {f: [] for f in k.faces}
    for f in k.faces:
        if len(f) < 2:
            continue
        for i in range(len(f)):
            cofaces[f[:i] + f[i + 1:]].append(f)
    for size in sorted(by_size, reverse=True):
        for f in by_size[size]:
            for g in cofaces[f]:
                up[f].add(g)
                up[f] |= up[g]
    return Poset.from_up_sets(up)


def skeleton(k: SimplicialComplex, d: int) -> SimplicialComplex:
    return k.skeleton(d)


def barycentric_subdivision(k: SimplicialComplex) -> SimplicialComplex:
    """Order complex of the face poset; vertices are the faces of K."""
    return order_complex(face_poset(k))


def full_simplex(vertices) -> SimplicialComplex:
    return SimplicialComplex.from_faces([tuple(vertices)])


def simplex_boundary(vertices) -> SimplicialComplex:
    vs = tuple(vertices)
    return SimplicialComplex.from_faces([vs[:i] + vs[i + 1:] for i in range(len(vs))])


# .cpx format -----------------------------------------------------------------

def parse_cpx(text: str) -> SimplicialComplex:
    faces = []
    for line in text.splitlines():
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        toks = s.split()
        if len(set(toks)) != len(toks):
            raise ParseError(f"repeated vertex in face {line!r}")
        faces.append(tuple(toks))
    return SimplicialComplex.from_faces(faces)


def dumps_cpx(k: SimplicialComplex) -> str:
    return "".join(" ".join(str(v) for v in f) + "\n" for f in sorted(k.maximal_faces(), key=lambda f: [k.order[v] for v in f]))
