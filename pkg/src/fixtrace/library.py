"""Standard complexes, maps and embeddings, plus random generators for property suites."""

from __future__ import annotations

import random
from fractions import Fraction

from .invariants.index import EmbeddingData
from .simplicial import SimplicialComplex, SimplicialMap, close_complex


def point() -> SimplicialComplex:
    return close_complex([(0,)])


def hollow_triangle() -> SimplicialComplex:
    return close_complex([(0, 1), (1, 2), (0, 2)])


def solid_triangle() -> SimplicialComplex:
    return close_complex([(0, 1, 2)])


def hexagon() -> SimplicialComplex:
    return close_complex([(i, (i + 1) % 6) for i in range(6)])


def hexagon_flip(K: SimplicialComplex | None = None) -> SimplicialMap:
    """Reflection fixing vertices 0 and 3."""
    K = hexagon() if K is None else K
    return SimplicialMap(K, K, tuple((-i) % 6 for i in range(6)))


def hexagon_rotation(K: SimplicialComplex | None = None) -> SimplicialMap:
    K = hexagon() if K is None else K
    return SimplicialMap(K, K, tuple((i + 1) % 6 for i in range(6)))


def hexagon_embedding(retraction: str = "radial") -> EmbeddingData:
    return EmbeddingData.from_values(2, [(2, 0), (1, 2), (-1, 2), (-2, 0), (-1, -2), (1, -2)], retraction)


def octahedron() -> SimplicialComplex:
    """Boundary of the octahedron; vertex pairs (0,1), (2,3), (4,5) are antipodal."""
    return close_complex([(a, b, c) for a in (0, 1) for b in (2, 3) for c in (4, 5)])


def octahedron_antipodal(K: SimplicialComplex | None = None) -> SimplicialMap:
    K = octahedron() if K is None else K
    return SimplicialMap(K, K, tuple(i ^ 1 for i in range(6)))


def torus7() -> SimplicialComplex:
    """The 7-vertex (Moebius-Csaszar) torus."""
    tris = [(i, (i + 1) % 7, (i + 3) % 7) for i in range(7)] + \
           [(i, (i + 2) % 7, (i + 3) % 7) for i in range(7)]
    return close_complex(tris)


def projective_plane6() -> SimplicialComplex:
    return close_complex([(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 5, 1),
                          (1, 2, 4), (2, 3, 5), (3, 4, 1), (4, 5, 2), (5, 1, 3)])


def wedge_of_circles() -> SimplicialComplex:
    return close_complex([(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)])


def coned_triangle() -> SimplicialComplex:
    """Solid triangle with corners 0, 1, 2 subdivided by a central vertex 3."""
    return close_complex([(0, 1, 3), (1, 2, 3), (0, 2, 3)])


def coned_triangle_contraction(K: SimplicialComplex | None = None) -> SimplicialMap:
    """Every vertex to the centre: a PL contraction with the single fixed point 3."""
    K = coned_triangle() if K is None else K
    return SimplicialMap.constant(K, 3)


def coned_triangle_embedding() -> EmbeddingData:
    return EmbeddingData.from_values(2, [(0, 0), (6, 0), (0, 6), (2, 2)], "nearest-star")


def path_complex(n: int = 5) -> SimplicialComplex:
    return close_complex([(i, i + 1) for i in range(n - 1)])


def path_embedding(n: int = 5) -> EmbeddingData:
    """Vertices on the real line at ``-(n // 2), ..., n // 2``."""
    return EmbeddingData.from_values(1, [(i - n // 2,) for i in range(n)], "nearest-star")


def path_reflection(n: int = 5) -> SimplicialMap:
    K = path_complex(n)
    return SimplicialMap(K, K, tuple(n - 1 - i for i in range(n)))


EULER_FIXTURES = {
    "point": point,
    "hollow_triangle": hollow_triangle,
    "solid_triangle": solid_triangle,
    "octahedron": octahedron,
    "torus7": torus7,
    "wedge_of_circles": wedge_of_circles,
}


def all_fixture_complexes() -> dict:
    out = dict(EULER_FIXTURES)
    out.update(hexagon=hexagon, projective_plane6=projective_plane6, coned_triangle=coned_triangle,
               path5=path_complex)
    return out


def random_complex(rng: random.Random, max_simplices: int = 20, max_vertices: int = 7,
                   max_dim: int = 2) -> SimplicialComplex:
    """A random connected complex with at most ``max_simplices`` simplices."""
    while True:
        nv = rng.randint(1, max_vertices)
        maximal = [(v, rng.randrange(v)) for v in range(1, nv)]  # random tree
        K = close_complex(maximal, vertices=list(range(nv)))
        for _ in range(rng.randint(0, 8)):
            k = rng.randint(2, min(max_dim + 1, nv)) if nv >= 2 else 1
            cand = tuple(sorted(rng.sample(range(nv), k)))
            K2 = close_complex(maximal + [cand], vertices=list(range(nv)))
            if len(K2) <= max_simplices:
                maximal.append(cand)
                K = K2
        if len(K) <= max_simplices:
            return K


def random_self_map(rng: random.Random, K: SimplicialComplex, base: int = 0,
                    keep_bias: float = 0.4) -> SimplicialMap:
    """A random simplicial self-map fixing ``base`` (randomized backtracking)."""
    n = len(K.vertices)
    simplices = [s for s in K.all_simplices() if len(s) > 1]
    vm = [-1] * n
    vm[base] = base
    order = [base] + [v for v in range(n) if v != base]

    def ok(v):
        for s in simplices:
            if v in s and all(vm[u] >= 0 for u in s):
                if tuple(sorted({vm[u] for u in s})) not in K:
                    return False
        return True

    def assign(i):
        if i == n:
            return True
        v = order[i]
        cands = list(range(n))
        rng.shuffle(cands)
        if rng.random() < keep_bias:
            cands.remove(v)
            cands.insert(0, v)
        for c in cands:
            vm[v] = c
            if ok(v) and assign(i + 1):
                return True
        vm[v] = -1
        return False

    if not assign(1):
        raise RuntimeError("no simplicial self-map found")  # unreachable: the constant map works
    return SimplicialMap(K, K, tuple(vm))
