"""Finite abstract simplicial complexes, simplicial maps and integral chains.

Simplices are stored as strictly increasing tuples of vertex indices; the
orientation of a simplex is the one given by that vertex order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Hashable, Iterable, Sequence

from .errors import ComplexError, DimensionError, InvalidMapError
from .smith import IntMatrix, smith_normal_form


def _label_key(x):
    return (0, x, "") if isinstance(x, (int, Fraction)) else (1, 0, str(x))


@dataclass(frozen=True)
class SimplicialComplex:
    vertices: tuple
    simplices: tuple  # simplices[n] = sorted tuple of n-simplices
    _index: dict = field(default=None, compare=False, repr=False, hash=False)

    def __post_init__(self):
        idx = {s: i for dim in self.simplices for i, s in enumerate(dim)}
        object.__setattr__(self, "_index", idx)

    @property
    def dim(self) -> int:
        return len(self.simplices) - 1

    def count(self, n: int) -> int:
        return len(self.simplices[n]) if 0 <= n <= self.dim else 0

    def __len__(self):
        return sum(len(s) for s in self.simplices)

    def index(self, simplex: tuple) -> int:
        return self._index[simplex]

    def __contains__(self, simplex) -> bool:
        return tuple(simplex) in self._index

    def all_simplices(self):
        for dim in self.simplices:
            yield from dim

    def vertex_index(self, label) -> int:
        try:
            return self.vertices.index(label)
        except ValueError:
            raise ComplexError(f"unknown vertex {label!r}") from None

    def labels(self, simplex: Sequence[int]) -> list:
        return [self.vertices[i] for i in simplex]

    def edges(self):
        return self.simplices[1] if self.dim >= 1 else ()

    def neighbors(self, v: int) -> list[int]:
        out = set()
        for a, b in self.edges():
            if a == v:
                out.add(b)
            elif b == v:
                out.add(a)
        return sorted(out)

    def maximal_simplices(self) -> list[tuple]:
        faces = set()
        for dim in self.simplices[1:]:
            for s in dim:
                faces.update(itertools.combinations(s, len(s) - 1))
        return [s for s in self.all_simplices() if s not in faces]

    def components(self) -> list[list[int]]:
        parent = list(range(len(self.vertices)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in self.edges():
            parent[find(a)] = find(b)
        comps: dict[int, list[int]] = {}
        for v in range(len(self.vertices)):
            comps.setdefault(find(v), []).append(v)
        return sorted(comps.values())

    def is_connected(self) -> bool:
        return len(self.vertices) > 0 and len(self.components()) == 1


def close_complex(maximal: Iterable[Sequence[Hashable]], vertices: Sequence[Hashable] | None = None
                  ) -> SimplicialComplex:
    """Face closure of the given simplices.

    ``vertices`` fixes the vertex order (and may add isolated vertices); by
    default labels are sorted.
    """
    maximal = [tuple(s) for s in maximal]
    for s in maximal:
        if len(set(s)) != len(s):
            raise ComplexError(f"repeated vertex in simplex {list(s)}")
        if not s:
            raise ComplexError("empty simplex")
    if vertices is None:
        labels = sorted({v for s in maximal for v in s}, key=_label_key)
    else:
        labels = list(vertices)
        if len(set(labels)) != len(labels):
            raise ComplexError("duplicate vertex labels")
        known = set(labels)
        for s in maximal:
            for v in s:
                if v not in known:
                    raise ComplexError(f"simplex {list(s)} uses unknown vertex {v!r}")
    pos = {v: i for i, v in enumerate(labels)}
    faces: set[tuple] = {(i,) for i in range(len(labels))}
    for s in maximal:
        idx = tuple(sorted(pos[v] for v in s))
        for k in range(1, len(idx) + 1):
            faces.update(itertools.combinations(idx, k))
    top = max((len(f) for f in faces), default=0)
    by_dim = tuple(tuple(sorted(f for f in faces if len(f) == k + 1)) for k in range(top))
    return SimplicialComplex(tuple(labels), by_dim)


def _boundary(K: SimplicialComplex, n: int) -> IntMatrix:
    rows, cols = K.count(n - 1), K.count(n)
    M = IntMatrix(rows, cols)
    if n < 1 or n > K.dim:
        return M
    for j, s in enumerate(K.simplices[n]):
        for i in range(len(s)):
            face = s[:i] + s[i + 1:]
            M.data[K.index(face)][j] += -1 if i % 2 else 1
    return M


def boundary_matrix(K: SimplicialComplex, n: int) -> IntMatrix:
    """Matrix of the boundary C_n -> C_{n-1}; column of s is sum (-1)^i d_i s."""
    if n < 1 or n > K.dim:
        raise DimensionError(f"boundary dimension {n} outside 1..{K.dim}")
    return _boundary(K, n)


@dataclass(frozen=True)
class BettiData:
    betti: tuple
    torsion: tuple  # torsion[n] = invariant factors > 1 of H_n

    def euler_characteristic(self) -> int:
        return sum((-1) ** n * b for n, b in enumerate(self.betti))


def betti_numbers(K: SimplicialComplex) -> BettiData:
    ranks = {}
    torsion = {}
    for n in range(1, K.dim + 1):
        snf = smith_normal_form(_boundary(K, n))
        ranks[n] = snf.rank
        torsion[n - 1] = tuple(d for d in snf.invariant_factors if d > 1)
    betti = []
    for n in range(K.dim + 1):
        betti.append(K.count(n) - ranks.get(n, 0) - ranks.get(n + 1, 0))
    return BettiData(tuple(betti), tuple(torsion.get(n, ()) for n in range(K.dim + 1)))


def euler_characteristic(K: SimplicialComplex) -> int:
    return sum((-1) ** n * len(s) for n, s in enumerate(K.simplices))


@dataclass(frozen=True)
class SimplicialMap:
    source: SimplicialComplex
    target: SimplicialComplex
    vertex_map: tuple

    @classmethod
    def from_labels(cls, source, target, mapping: dict):
        vm = []
        for v in source.vertices:
            if v not in mapping:
                raise InvalidMapError(f"vertex {v!r} has no image")
            w = mapping[v]
            if w not in target.vertices:
                raise InvalidMapError(f"image {w!r} of {v!r} is not a vertex of the target")
            vm.append(target.vertices.index(w))
        return cls(source, target, tuple(vm))

    @classmethod
    def identity(cls, K):
        return cls(K, K, tuple(range(len(K.vertices))))

    @classmethod
    def constant(cls, K, v: int = 0):
        return cls(K, K, (v,) * len(K.vertices))

    def __call__(self, v: int) -> int:
        return self.vertex_map[v]

    def image(self, simplex: Sequence[int]) -> tuple:
        """Sorted vertex set of the image (possibly of lower dimension)."""
        return tuple(sorted({self.vertex_map[v] for v in simplex}))

    def oriented_image(self, simplex: Sequence[int]):
        """``(sign, image)`` when injective on ``simplex``, else ``None``."""
        img = [self.vertex_map[v] for v in simplex]
        if len(set(img)) < len(img):
            return None
        return permutation_sign(img), tuple(sorted(img))

    def fixed_vertices(self) -> list[int]:
        return [v for v, w in enumerate(self.vertex_map) if v == w]


def permutation_sign(seq: Sequence) -> int:
    """Sign of the permutation sorting ``seq`` (distinct entries)."""
    sign = 1
    seq = list(seq)
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


@dataclass(frozen=True)
class MapViolation:
    simplex: tuple
    image: tuple

    def __str__(self):
        return f"simplex {list(self.simplex)} maps to {list(self.image)}, which is not a simplex"


def validate_simplicial_map(f: SimplicialMap) -> MapViolation | None:
    """``None`` when every simplex maps onto a simplex, else the first offender (labels)."""
    if len(f.vertex_map) != len(f.source.vertices):
        return MapViolation((), ())
    for s in f.source.all_simplices():
        img = f.image(s)
        if img not in f.target:
            return MapViolation(tuple(f.source.labels(s)), tuple(f.target.labels(img)))
    return None


def require_valid(f: SimplicialMap) -> None:
    bad = validate_simplicial_map(f)
    if bad is not None:
        raise InvalidMapError(str(bad))


def induced_chain_map(f: SimplicialMap, n: int) -> IntMatrix:
    require_valid(f)
    M = IntMatrix(f.target.count(n), f.source.count(n))
    if n > f.source.dim:
        return M
    for j, s in enumerate(f.source.simplices[n]):
        oi = f.oriented_image(s)
        if oi is not None:
            sign, img = oi
            M.data[f.target.index(img)][j] = sign
    return M
