"""Lefschetz numbers, by the chain-level trace and by traces on rational homology."""

from __future__ import annotations

from fractions import Fraction

from ..simplicial import SimplicialComplex, SimplicialMap, _boundary, induced_chain_map, require_valid
from ..smith import IntMatrix


def lefschetz_chain(K: SimplicialComplex, f: SimplicialMap) -> int:
    """Alternating sum of traces of the induced chain maps."""
    require_valid(f)
    return sum((-1) ** n * induced_chain_map(f, n).trace() for n in range(K.dim + 1))


def _columns(M: IntMatrix) -> list[list[Fraction]]:
    return [[Fraction(M.data[i][j]) for i in range(M.rows)] for j in range(M.cols)]


def _kernel_basis(M: IntMatrix) -> list[list[Fraction]]:
    """Basis of the right null space of M over Q (reduced row echelon)."""
    rows = [[Fraction(x) for x in r] for r in M.data]
    n = M.cols
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][c]
        rows[r] = [x / p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * n
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -rows[i][fc]
        basis.append(v)
    return basis


class _Span:
    """Incremental echelon basis for testing membership and solving coordinates."""

    def __init__(self, dim: int):
        self.dim = dim
        self.vectors: list[list[Fraction]] = []
        self._echelon: list[tuple[int, list[Fraction], list[Fraction]]] = []

    def _reduce(self, v):
        v = list(v)
        coords = [Fraction(0)] * len(self.vectors)
        for piv, row, combo in self._echelon:
            if v[piv]:
                f = v[piv]
                v = [a - f * b for a, b in zip(v, row)]
                coords = [a + f * b for a, b in zip(coords, combo)]
        return v, coords

    def add(self, v) -> bool:
        rem, coords = self._reduce(v)
        piv = next((i for i, x in enumerate(rem) if x), None)
        if piv is None:
            return False
        p = rem[piv]
        row = [x / p for x in rem]
        k = len(self.vectors)
        # row = (v - sum coords_i * vectors_i) / p, expressed in the vector basis
        combo = [-c / p for c in coords] + [Fraction(1) / p]
        self._echelon = [(pv, r, c + [Fraction(0)]) for pv, r, c in self._echelon]
        self._echelon.append((piv, row, combo))
        self.vectors.append(list(v))
        assert len(combo) == k + 1
        return True

    def coordinates(self, v) -> list[Fraction]:
        rem, coords = self._reduce(v)
        if any(rem):
            raise ValueError("vector not in span")
        return coords


def homology_traces(K: SimplicialComplex, f: SimplicialMap) -> list[Fraction]:
    """``tr(f_* on H_n(K; Q))`` for each n."""
    require_valid(f)
    traces = []
    for n in range(K.dim + 1):
        cycles = _kernel_basis(_boundary(K, n)) if n > 0 else \
            [[Fraction(int(i == j)) for i in range(K.count(0))] for j in range(K.count(0))]
        boundaries = _columns(_boundary(K, n + 1)) if n < K.dim else []
        span = _Span(K.count(n))
        for b in boundaries:
            span.add(b)
        nb = len(span.vectors)
        homology = []
        for z in cycles:
            if span.add(z):
                homology.append(len(span.vectors) - 1)
        fn = induced_chain_map(f, n)
        tr = Fraction(0)
        for k in homology:
            z = span.vectors[k]
            image = [sum(fn.data[i][j] * z[j] for j in range(fn.cols) if z[j]) for i in range(fn.rows)]
            tr += span.coordinates(image)[k]
        assert nb <= len(span.vectors)
        traces.append(tr)
    return traces


def lefschetz_homological(K: SimplicialComplex, f: SimplicialMap) -> int:
    total = sum((-1) ** n * t for n, t in enumerate(homology_traces(K, f)))
    if total.denominator != 1:
        raise ArithmeticError(f"non-integral Lefschetz number {total}")
    return int(total)
