"""Exact integer matrices, Smith normal form and cokernel structure."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


class IntMatrix:
    """Dense integer matrix with an explicit shape (so 0-row/0-column matrices are fine)."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data: Sequence[Sequence[int]] | None = None):
        self.rows = rows
        self.cols = cols
        if data is None:
            self.data = [[0] * cols for _ in range(rows)]
        else:
            self.data = [[int(x) for x in row] for row in data]
            if len(self.data) != rows or any(len(r) != cols for r in self.data):
                raise ValueError(f"data does not match shape {rows}x{cols}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None):
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        return cls(len(rows), cols, rows)

    @classmethod
    def identity(cls, n: int):
        return cls(n, n, [[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int):
        return cls(rows, cols)

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def tolist(self):
        return [list(r) for r in self.data]

    @property
    def T(self):
        return IntMatrix(self.cols, self.rows, [[self.data[i][j] for i in range(self.rows)]
                                               for j in range(self.cols)])

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        out = [[0] * other.cols for _ in range(self.rows)]
        for i in range(self.rows):
            ri = self.data[i]
            oi = out[i]
            for k in range(self.cols):
                a = ri[k]
                if a:
                    rk = other.data[k]
                    for j in range(other.cols):
                        if rk[j]:
                            oi[j] += a * rk[j]
        return IntMatrix(self.rows, other.cols, out)

    def __add__(self, other):
        return IntMatrix(self.rows, self.cols, [[a + b for a, b in zip(r, s)]
                                               for r, s in zip(self.data, other.data)])

    def __sub__(self, other):
        return IntMatrix(self.rows, self.cols, [[a - b for a, b in zip(r, s)]
                                               for r, s in zip(self.data, other.data)])

    def __neg__(self):
        return IntMatrix(self.rows, self.cols, [[-a for a in r] for r in self.data])

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and self.shape == other.shape and self.data == other.data

    def __repr__(self):
        return f"IntMatrix({self.rows}x{self.cols}, {self.data})"

    def trace(self) -> int:
        return sum(self.data[i][i] for i in range(min(self.rows, self.cols)))

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.data)


def determinant(M: IntMatrix) -> int:
    """Bareiss fraction-free elimination."""
    n = M.rows
    if n != M.cols:
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    a = M.tolist()
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


@dataclass(frozen=True)
class SmithDecomposition:
    """``U @ M @ V == D`` with ``D`` diagonal and ``d_1 | d_2 | ... | d_rank``.

    ``V_inv`` is the inverse of ``V`` (tracked during elimination).
    """
    U: IntMatrix
    D: IntMatrix
    V: IntMatrix
    V_inv: IntMatrix
    invariant_factors: tuple

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)


def smith_normal_form(M: IntMatrix) -> SmithDecomposition:
    m, n = M.rows, M.cols
    A = M.tolist()
    U = IntMatrix.identity(m).data
    V = IntMatrix.identity(n).data
    Vi = IntMatrix.identity(n).data

    def swap_rows(i, j):
        if i != j:
            A[i], A[j] = A[j], A[i]
            U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        if i != j:
            for row in A:
                row[i], row[j] = row[j], row[i]
            for row in V:
                row[i], row[j] = row[j], row[i]
            Vi[i], Vi[j] = Vi[j], Vi[i]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        ra, rs = A[dst], A[src]
        for k in range(n):
            if rs[k]:
                ra[k] += q * rs[k]
        ua, us = U[dst], U[src]
        for k in range(m):
            if us[k]:
                ua[k] += q * us[k]

    def add_col(dst, src, q):
        # col_dst += q * col_src; inverse gets row_src -= q * row_dst
        for row in A:
            if row[src]:
                row[dst] += q * row[src]
        for row in V:
            if row[src]:
                row[dst] += q * row[src]
        vs, vd = Vi[src], Vi[dst]
        for k in range(n):
            if vd[k]:
                vs[k] -= q * vd[k]

    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            row = A[i]
            for j in range(t, n):
                v = row[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        swap_rows(t, best[1])
        swap_cols(t, best[2])
        while True:
            p = A[t][t]
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // p))
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // p))
            # any remainder is smaller than the pivot: move it into place
            smaller = None
            for i in range(t + 1, m):
                if A[i][t] and (smaller is None or abs(A[i][t]) < smaller[0]):
                    smaller = (abs(A[i][t]), i, None)
            for j in range(t + 1, n):
                if A[t][j] and (smaller is None or abs(A[t][j]) < smaller[0]):
                    smaller = (abs(A[t][j]), None, j)
            if smaller is not None:
                if smaller[1] is not None:
                    swap_rows(t, smaller[1])
                else:
                    swap_cols(t, smaller[2])
                continue
            bad = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if A[i][j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(t, bad, 1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
        t += 1

    factors = tuple(A[i][i] for i in range(min(m, n)) if A[i][i])
    return SmithDecomposition(IntMatrix(m, m, U), IntMatrix(m, n, A), IntMatrix(n, n, V),
                              IntMatrix(n, n, Vi), factors)


def rank(M: IntMatrix) -> int:
    return smith_normal_form(M).rank


def cokernel_invariants(M: IntMatrix) -> tuple[int, tuple]:
    """``Z^rows / im(M)`` as ``(free_rank, torsion factors > 1)``."""
    snf = smith_normal_form(M)
    return M.rows - snf.rank, tuple(d for d in snf.invariant_factors if d > 1)


class LatticeQuotient:
    """Normal forms in ``Z^r / L`` where ``L`` is spanned by the rows of ``relations``.

    With ``U R V = D`` the row lattice is ``{y D V^-1}``, so ``x`` is in ``L``
    iff ``x V`` lies in the row space of ``D``. The normal form of ``x`` is
    ``x V`` reduced modulo the invariant factors; unit factors are dropped.
    """

    def __init__(self, relations: IntMatrix):
        self.dim = relations.cols
        snf = smith_normal_form(relations)
        self._V = snf.V
        self._V_inv = snf.V_inv
        self.factors = snf.invariant_factors
        self.rank = snf.rank
        self.free_rank = self.dim - self.rank

    @property
    def torsion(self) -> tuple:
        return tuple(d for d in self.factors if d > 1)

    @property
    def order(self) -> int | None:
        if self.free_rank:
            return None
        out = 1
        for d in self.factors:
            out *= d
        return out

    def normal_form(self, x: Sequence[int]) -> tuple:
        if len(x) != self.dim:
            raise ValueError(f"vector of length {len(x)} in a rank-{self.dim} lattice")
        y = [sum(x[k] * self._V.data[k][j] for k in range(self.dim) if x[k]) for j in range(self.dim)]
        key = [y[i] % d for i, d in enumerate(self.factors) if d > 1]
        key.extend(y[self.rank:])
        return tuple(key)

    def representative(self, key: Sequence[int]) -> list[int]:
        """The vector ``y V^-1`` whose normal form is ``key``."""
        y = [0] * self.dim
        it = iter(key)
        for i, d in enumerate(self.factors):
            if d > 1:
                y[i] = next(it)
        for j in range(self.rank, self.dim):
            y[j] = next(it)
        return [sum(y[k] * self._V_inv.data[k][j] for k in range(self.dim) if y[k])
                for j in range(self.dim)]

    def keys(self, radius: int = 0):
        """All normal forms when finite; free coordinates range over ``[-radius, radius]``."""
        ranges = [range(d) for d in self.torsion] + [range(-radius, radius + 1)] * self.free_rank
        return [tuple(k) for k in itertools.product(*ranges)]


def rational_rank(M: IntMatrix) -> int:
    rows = [[Fraction(x) for x in r] for r in M.data]
    r = 0
    for c in range(M.cols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(r + 1, len(rows)):
            if rows[i][c]:
                f = rows[i][c] / rows[r][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
    return r
