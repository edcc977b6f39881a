"""Fixed-point indices of PL maps in ambient dimension 1 or 2.

The index of an isolated fixed point ``x`` is the degree of
``v -> v - f(p(v))`` on a small sphere around ``x``, where ``p`` retracts a
neighbourhood of the embedded complex onto it. Everything is evaluated in
exact rational arithmetic; in the plane the degree is the winding number of
the sampled displacement polygon, refined until consecutive samples are less
than a quarter turn apart.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from ..errors import IndexComputationError, MalformedInputError, UnsupportedDimensionError
from ..simplicial import SimplicialComplex, SimplicialMap

Point = tuple

RETRACTIONS = ("radial", "nearest-star")


@dataclass(frozen=True)
class EmbeddingData:
    dimension: int
    coordinates: tuple  # per vertex index, tuple of Fractions
    retraction: str = "nearest-star"

    def __post_init__(self):
        if self.dimension not in (1, 2):
            raise UnsupportedDimensionError(f"ambient dimension {self.dimension} not in (1, 2)")
        if self.retraction not in RETRACTIONS:
            raise MalformedInputError(f"unknown retraction {self.retraction!r}")
        for c in self.coordinates:
            if len(c) != self.dimension:
                raise MalformedInputError(f"coordinate {c} has wrong dimension")

    @classmethod
    def from_values(cls, dimension, coords: Sequence[Sequence], retraction="nearest-star"):
        return cls(dimension, tuple(tuple(Fraction(x) for x in c) for c in coords), retraction)


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _scale(a, t):
    return tuple(x * t for x in a)


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _solve(cols: list, rhs: tuple):
    """Exact least-determined solve of ``sum l_i cols_i = rhs``; None if inconsistent."""
    m, k = len(rhs), len(cols)
    rows = [[cols[j][i] for j in range(k)] + [rhs[i]] for i in range(m)]
    piv_cols = []
    r = 0
    for c in range(k):
        p = next((i for i in range(r, m) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        piv_cols.append(c)
        r += 1
    if any(rows[i][k] for i in range(r, m)):
        return None
    if len(piv_cols) < k:
        return None  # degenerate simplex
    sol = [Fraction(0)] * k
    for i, c in enumerate(piv_cols):
        sol[c] = rows[i][k]
    return sol


def barycentric(E: EmbeddingData, simplex: Sequence[int], p: Point):
    """Barycentric coordinates of ``p`` in the simplex, or None when outside."""
    P0 = E.coordinates[simplex[0]]
    cols = [_sub(E.coordinates[v], P0) for v in simplex[1:]]
    if not cols:
        return [Fraction(1)] if tuple(p) == P0 else None
    lam = _solve(cols, _sub(p, P0))
    if lam is None or any(x < 0 for x in lam) or sum(lam) > 1:
        return None
    return [1 - sum(lam)] + lam


def locate(K: SimplicialComplex, E: EmbeddingData, p: Point):
    """``(simplex, barycentric)`` for the lowest-dimensional simplex containing ``p``."""
    for dim in K.simplices:
        for s in dim:
            bc = barycentric(E, s, p)
            if bc is not None:
                return s, bc
    raise IndexComputationError(f"point {tuple(str(x) for x in p)} is not on the complex")


def realized_map(K: SimplicialComplex, f: SimplicialMap, E: EmbeddingData) -> Callable[[Point], Point]:
    """The affine-on-simplices realization of ``f`` in ambient coordinates."""
    def F(p):
        s, bc = locate(K, E, p)
        out = (Fraction(0),) * E.dimension
        for v, lam in zip(s, bc):
            out = _add(out, _scale(E.coordinates[f(v)], lam))
        return out
    return F


def _closest_on_simplex(E: EmbeddingData, s, v: Point):
    pts = [E.coordinates[i] for i in s]
    if len(pts) == 1:
        return pts[0]
    if len(pts) == 2:
        a, b = pts
        ab = _sub(b, a)
        t = _dot(_sub(v, a), ab) / _dot(ab, ab)
        t = min(max(t, Fraction(0)), Fraction(1))
        return _add(a, _scale(ab, t))
    if len(pts) == 3 and E.dimension == 2:
        bc = barycentric(E, s, v)
        if bc is not None:
            return tuple(v)
        best = None
        for i in range(3):
            for j in range(i + 1, 3):
                q = _closest_on_simplex(E, (s[i], s[j]), v)
                d = _dot(_sub(q, v), _sub(q, v))
                if best is None or d < best[0]:
                    best = (d, q)
        return best[1]
    raise UnsupportedDimensionError("simplex does not embed in the ambient space")


def nearest_point_retraction(K: SimplicialComplex, E: EmbeddingData) -> Callable[[Point], Point]:
    simplices = [s for dim in K.simplices for s in dim]

    def p(v):
        best = None
        for s in simplices:
            q = _closest_on_simplex(E, s, v)
            d = _dot(_sub(q, v), _sub(q, v))
            if best is None or d < best[0]:
                best = (d, q)
        return best[1]
    return p


def radial_retraction(K: SimplicialComplex, E: EmbeddingData) -> Callable[[Point], Point]:
    """Project along rays from the centroid of the vertices onto the 1-skeleton (plane only)."""
    if E.dimension != 2:
        raise UnsupportedDimensionError("radial retraction needs a planar embedding")
    n = len(E.coordinates)
    centre = tuple(sum(c[i] for c in E.coordinates) / n for i in range(2))
    edges = list(K.edges())

    def p(v):
        d = _sub(v, centre)
        best = None
        for a, b in edges:
            A, B = E.coordinates[a], E.coordinates[b]
            ab = _sub(B, A)
            det = d[0] * (-ab[1]) - d[1] * (-ab[0])
            if det == 0:
                continue
            rhs = _sub(A, centre)
            t = (rhs[0] * (-ab[1]) - rhs[1] * (-ab[0])) / det
            s = (d[0] * rhs[1] - d[1] * rhs[0]) / det
            if t > 0 and 0 <= s <= 1 and (best is None or t < best[0]):
                best = (t, _add(A, _scale(ab, s)))
        if best is None:
            raise IndexComputationError("ray from the centre misses the complex")
        return best[1]
    return p


def retraction(K: SimplicialComplex, E: EmbeddingData):
    if E.retraction == "radial":
        return radial_retraction(K, E)
    return nearest_point_retraction(K, E)


def default_epsilon(E: EmbeddingData, x: int) -> Fraction:
    """A quarter of the smallest max-norm distance from vertex ``x`` to another vertex."""
    here = E.coordinates[x]
    dists = [max(abs(a - b) for a, b in zip(here, c)) for i, c in enumerate(E.coordinates) if i != x]
    dists = [d for d in dists if d]
    if not dists:
        return Fraction(1, 4)
    return min(dists) / 4


def _circle_point(theta: float) -> tuple:
    """A point exactly on the unit circle near angle ``theta`` in (-pi, pi]."""
    if theta >= math.pi:
        return (Fraction(-1), Fraction(0))
    t = Fraction(math.tan(theta / 2))
    d = 1 + t * t
    return ((1 - t * t) / d, 2 * t / d)


def _winding(poly: list) -> int:
    """Winding number of a closed polygon around the origin (crossing rule, exact)."""
    w = 0
    for a, b in zip(poly, poly[1:] + poly[:1]):
        cross = a[0] * b[1] - a[1] * b[0]
        if a[1] <= 0:
            if b[1] > 0 and cross > 0:
                w += 1
        elif b[1] <= 0 and cross < 0:
            w -= 1
    return w


@dataclass(frozen=True)
class IndexResult:
    index: int
    samples: int
    min_step: float  # smallest angular step of the sampled circle, radians


MAX_SAMPLES = 1 << 15


def compute_index(displacement: Callable[[Point], Point], x: Point, eps, dimension: int) -> IndexResult:
    """Degree of ``v -> displacement(v)`` on the ``eps``-sphere around ``x``."""
    eps = Fraction(eps)
    x = tuple(Fraction(c) for c in x)
    if dimension == 1:
        lo = displacement((x[0] - eps,))[0]
        hi = displacement((x[0] + eps,))[0]
        if lo == 0 or hi == 0:
            raise IndexComputationError("displacement vanishes on the sample sphere; shrink epsilon")
        return IndexResult((int(hi > 0) - int(lo > 0)), 2, math.pi)
    if dimension != 2:
        raise UnsupportedDimensionError(f"index in ambient dimension {dimension} is not supported")

    cache: dict[float, tuple] = {}

    def sample(theta):
        if theta not in cache:
            u = _circle_point(theta)
            w = displacement((x[0] + eps * u[0], x[1] + eps * u[1]))
            if w[0] == 0 and w[1] == 0:
                raise IndexComputationError("displacement vanishes on the sample circle; shrink epsilon")
            cache[theta] = w
        return cache[theta]

    n0 = 16
    thetas = [-math.pi + 2 * math.pi * (k + 1) / n0 for k in range(n0)]  # ends at pi
    while True:
        values = [sample(t) for t in thetas]
        refined = []
        changed = False
        for i, t in enumerate(thetas):
            refined.append(t)
            t_next = thetas[(i + 1) % len(thetas)]
            a, b = values[i], values[(i + 1) % len(thetas)]
            if _dot(a, b) <= 0:
                span = (t_next - t) % (2 * math.pi)
                mid = t + span / 2
                if mid > math.pi:
                    mid -= 2 * math.pi
                if span < 1e-12 or mid in cache or len(thetas) > MAX_SAMPLES:
                    raise IndexComputationError("angular refinement did not converge; shrink epsilon")
                refined.append(mid)
                changed = True
        if not changed:
            break
        thetas = refined
    steps = [(thetas[(i + 1) % len(thetas)] - thetas[i]) % (2 * math.pi) for i in range(len(thetas))]
    return IndexResult(_winding(values), len(thetas), min(steps))


def fixed_point_index(E: EmbeddingData, realized: Callable[[Point], Point], x, eps=None,
                      retract: Callable[[Point], Point] | None = None) -> int:
    """Index of the isolated fixed point ``x`` (a vertex index or a coordinate tuple).

    ``realized`` evaluates the map on points of the complex; ``retract``
    defaults to the identity (the complex fills a neighbourhood of ``x``).
    """
    return index_with_diagnostic(E, realized, x, eps, retract).index


def index_with_diagnostic(E: EmbeddingData, realized, x, eps=None, retract=None) -> IndexResult:
    if isinstance(x, int):
        centre = E.coordinates[x]
        if eps is None:
            eps = default_epsilon(E, x)
    else:
        centre = tuple(Fraction(c) for c in x)
        if eps is None:
            raise ValueError("epsilon is required when x is a coordinate")
    p = retract if retract is not None else (lambda v: v)
    return compute_index(lambda v: _sub(v, realized(p(v))), centre, eps, E.dimension)
