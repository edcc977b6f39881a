"""Matrices with entries in a group ring Z[G]."""

from __future__ import annotations

from typing import Callable, Sequence

from . import kernels
from .errors import GroupContextError
from .groupring import GroupRingElement
from .groups import FiniteGroupTable


class GRMatrix:
    """Dense matrix over ``Z[group]``.

    ``A @ B`` is the ordinary product ``(AB)_ij = sum_k A_ik B_kj``. Over a
    finite group the product runs in the compiled kernel when available.
    """

    __slots__ = ("group", "rows", "cols", "entries")

    def __init__(self, group, rows: int, cols: int, entries=None):
        self.group = group
        self.rows = rows
        self.cols = cols
        if entries is None:
            z = GroupRingElement.zero(group)
            self.entries = [[z] * cols for _ in range(rows)]
        else:
            self.entries = [list(r) for r in entries]
            if len(self.entries) != rows or any(len(r) != cols for r in self.entries):
                raise ValueError(f"entries do not match shape {rows}x{cols}")

    @classmethod
    def from_rows(cls, group, rows: Sequence[Sequence], cols: int | None = None):
        conv = [[_coerce(group, x) for x in r] for r in rows]
        if cols is None:
            cols = len(conv[0]) if conv else 0
        return cls(group, len(conv), cols, conv)

    @classmethod
    def identity(cls, group, n: int):
        one, zero = GroupRingElement.one(group), GroupRingElement.zero(group)
        return cls(group, n, n, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, group, rows: int, cols: int):
        return cls(group, rows, cols)

    @classmethod
    def diagonal(cls, group, diag: Sequence):
        n = len(diag)
        M = cls.zeros(group, n, n)
        for i, x in enumerate(diag):
            M.entries[i][i] = _coerce(group, x)
        return M

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        return self.entries[ij[0]][ij[1]]

    def with_entry(self, i: int, j: int, value) -> "GRMatrix":
        M = GRMatrix(self.group, self.rows, self.cols, self.entries)
        M.entries[i][j] = _coerce(self.group, value)
        return M

    def _same_group(self, other):
        if other.group is not self.group and other.group != self.group:
            raise GroupContextError("matrices over different group rings")

    def __matmul__(self, other: "GRMatrix") -> "GRMatrix":
        self._same_group(other)
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        if isinstance(self.group, FiniteGroupTable):
            dense = kernels.grmat_mul(self.to_dense(), other.to_dense(), self.group.product)
            return GRMatrix.from_dense(self.group, dense, self.rows, other.cols)
        out = GRMatrix.zeros(self.group, self.rows, other.cols)
        for i in range(self.rows):
            for j in range(other.cols):
                acc = out.entries[i][j]
                for k in range(self.cols):
                    a, b = self.entries[i][k], other.entries[k][j]
                    if a and b:
                        acc = acc + a * b
                out.entries[i][j] = acc
        return out

    def __add__(self, other):
        self._same_group(other)
        return GRMatrix(self.group, self.rows, self.cols,
                        [[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)])

    def __sub__(self, other):
        self._same_group(other)
        return GRMatrix(self.group, self.rows, self.cols,
                        [[a - b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)])

    def __neg__(self):
        return GRMatrix(self.group, self.rows, self.cols, [[-a for a in r] for r in self.entries])

    def __eq__(self, other):
        return (isinstance(other, GRMatrix) and self.shape == other.shape
                and self.group == other.group and self.entries == other.entries)

    def __repr__(self):
        body = "; ".join(", ".join(x.format() for x in r) for r in self.entries)
        return f"GRMatrix({self.rows}x{self.cols}: [{body}])"

    def is_zero(self) -> bool:
        return all(not x for r in self.entries for x in r)

    def diagonal_sum(self) -> GroupRingElement:
        acc = GroupRingElement.zero(self.group)
        for i in range(min(self.rows, self.cols)):
            acc = acc + self.entries[i][i]
        return acc

    def map_entries(self, fn: Callable[[GroupRingElement], GroupRingElement], group=None) -> "GRMatrix":
        g = self.group if group is None else group
        return GRMatrix(g, self.rows, self.cols, [[fn(x) for x in r] for r in self.entries])

    def augmented(self):
        from .groupring import augmentation
        from .smith import IntMatrix
        return IntMatrix(self.rows, self.cols, [[augmentation(x) for x in r] for r in self.entries])

    def to_dense(self):
        n = self.group.order
        out = []
        for r in self.entries:
            row = []
            for x in r:
                v = [0] * n
                for g, c in x._terms.items():
                    v[g] = c
                row.append(v)
            out.append(row)
        return out

    @classmethod
    def from_dense(cls, group, dense, rows: int, cols: int):
        entries = [[GroupRingElement(group, {g: c for g, c in enumerate(v) if c}, _trusted=True)
                    for v in r] for r in dense]
        if not entries:
            entries = []
        return cls(group, rows, cols, entries if rows else [])


def _coerce(group, x) -> GroupRingElement:
    if isinstance(x, GroupRingElement):
        return x
    if isinstance(x, int):
        return GroupRingElement.basis(group, group.identity, x)
    raise TypeError(f"cannot use {x!r} as a group ring entry")


def block_sum(A: GRMatrix, B: GRMatrix) -> GRMatrix:
    A._same_group(B)
    M = GRMatrix.zeros(A.group, A.rows + B.rows, A.cols + B.cols)
    for i in range(A.rows):
        for j in range(A.cols):
            M.entries[i][j] = A.entries[i][j]
    for i in range(B.rows):
        for j in range(B.cols):
            M.entries[A.rows + i][A.cols + j] = B.entries[i][j]
    return M


def compose_left(X: GRMatrix, Y: GRMatrix) -> GRMatrix:
    """Matrix of ``X o Y`` for maps of free left modules in column convention.

    A map sends basis element ``c`` to ``sum_r M[r, c] * b_r``; left-linearity
    gives ``(X o Y)[r, c] = sum_k Y[k, c] * X[r, k]`` (coefficients in that order).
    """
    X._same_group(Y)
    if X.cols != Y.rows:
        raise ValueError(f"shape mismatch {X.shape} o {Y.shape}")
    out = GRMatrix.zeros(X.group, X.rows, Y.cols)
    for r in range(X.rows):
        for c in range(Y.cols):
            acc = out.entries[r][c]
            for k in range(X.cols):
                y, x = Y.entries[k][c], X.entries[r][k]
                if x and y:
                    acc = acc + y * x
            out.entries[r][c] = acc
    return out
