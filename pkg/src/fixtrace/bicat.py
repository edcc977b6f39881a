"""Traces in the bicategory of bimodules over integral group rings of finite groups.

A 1-cell from ``Z[A]`` to ``Z[B]`` is ``Z[B]^n`` (column vectors, right
``B``-module) with a left ``A``-action ``a -> rho(a)`` by ``n x n`` matrices over
``Z[B]``. A 2-cell is a square matrix ``F`` over ``Z[B]`` commuting with every
``rho(a)``. The shadow of ``Z[B]`` is ``HH_0 = Z[B]/(xy = yx)``, free on
conjugacy classes; the twisted shadow identifies ``phi(a) y`` with ``y a``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import DimensionError, LinearityError, NotIdempotentError, RingMismatchError
from .groupring import GroupRingElement
from .groups import FiniteGroupTable, direct_product, trivial_group
from .grmatrix import GRMatrix


@dataclass(frozen=True, eq=False)
class RingSpec:
    """The ring ``Z[group]``."""
    group: FiniteGroupTable

    def __eq__(self, other):
        return isinstance(other, RingSpec) and self.group == other.group

    def __hash__(self):
        return hash(self.group)

    @property
    def classes(self) -> list[list[int]]:
        return self.group.twisted_classes()

    def element(self, g, coeff: int = 1) -> GroupRingElement:
        return GroupRingElement.basis(self.group, g, coeff)


def _ring(x) -> RingSpec:
    return x if isinstance(x, RingSpec) else RingSpec(x)


@dataclass(frozen=True)
class ShadowValue:
    """An element of the (twisted) shadow, keyed by least class representatives."""
    ring: RingSpec
    twist: tuple | None
    coefficients: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "coefficients", {r: c for r, c in self.coefficients.items() if c})

    def __eq__(self, other):
        return (isinstance(other, ShadowValue) and self.ring == other.ring
                and self.twist == other.twist and self.coefficients == other.coefficients)

    def __add__(self, other: "ShadowValue") -> "ShadowValue":
        if self.ring != other.ring or self.twist != other.twist:
            raise RingMismatchError("shadows of different rings or twists")
        acc = dict(self.coefficients)
        for r, c in other.coefficients.items():
            acc[r] = acc.get(r, 0) + c
        return ShadowValue(self.ring, self.twist, acc)

    def items(self):
        return sorted(self.coefficients.items())

    def augmentation(self) -> int:
        return sum(self.coefficients.values())

    def to_dict(self) -> dict:
        G = self.ring.group
        return {
            "classes": [{"representative": G.format(r), "coefficient": c} for r, c in self.items()],
            "twisted": self.twist is not None,
        }

    def __repr__(self):
        G = self.ring.group
        body = " + ".join(f"{c}[{G.format(r)}]" for r, c in self.items()) or "0"
        return f"ShadowValue({body})"


class HH0:
    """Class basis of the (twisted) zeroth Hochschild homology and its projector."""

    def __init__(self, ring, twist: Sequence[int] | None = None):
        self.ring = _ring(ring)
        G = self.ring.group
        if twist is not None:
            twist = G.check_endomorphism(twist)
            if twist == tuple(range(G.order)):
                twist = None  # twisting by the identity is the plain shadow
        self.twist = twist
        self.classes = G.twisted_classes(twist)
        self._rep = {x: c[0] for c in self.classes for x in c}

    @property
    def basis(self) -> list[int]:
        return [c[0] for c in self.classes]

    @property
    def rank(self) -> int:
        return len(self.classes)

    def project(self, x: GroupRingElement) -> ShadowValue:
        if x.group != self.ring.group:
            raise RingMismatchError("element is not in this group ring")
        acc: dict = {}
        for g, c in x._terms.items():
            r = self._rep[g]
            acc[r] = acc.get(r, 0) + c
        return ShadowValue(self.ring, self.twist, acc)


def hh0(ring, twist: Sequence[int] | None = None) -> HH0:
    return HH0(ring, twist)


@dataclass(frozen=True)
class BimoduleCell:
    """``Z[B]^rank`` with a left action of ``A`` by matrices over ``Z[B]``.

    ``action[a]`` is the matrix of the element with index ``a`` of ``A``'s group.
    """
    left: RingSpec
    right: RingSpec
    rank: int
    action: tuple

    def __post_init__(self):
        A, B = self.left.group, self.right.group
        if len(self.action) != A.order:
            raise LinearityError(f"need one action matrix per element of the left group, got {len(self.action)}")
        for a, M in enumerate(self.action):
            if M.group != B or M.shape != (self.rank, self.rank):
                raise RingMismatchError(f"action matrix of {A.format(a)} has the wrong ring or shape")
        if self.action[A.identity] != GRMatrix.identity(B, self.rank):
            raise LinearityError("the identity element must act as the identity matrix")
        for g in range(A.order):
            for h in range(A.order):
                if self.action[g] @ self.action[h] != self.action[A.mul(g, h)]:
                    raise LinearityError(
                        f"action is not multiplicative at ({A.format(g)}, {A.format(h)})")

    def act(self, x: GroupRingElement) -> GRMatrix:
        """The action extended linearly to ``Z[A]``."""
        B = self.right.group
        out = GRMatrix.zeros(B, self.rank, self.rank)
        for a, c in x._terms.items():
            out = out + self.action[a].map_entries(lambda y: y * c)
        return out


def free_cell(right, rank: int, left=None) -> BimoduleCell:
    """``Z[B]^rank`` with the trivial action of ``left`` (the trivial group by default)."""
    right = _ring(right)
    left = RingSpec(trivial_group()) if left is None else _ring(left)
    I = GRMatrix.identity(right.group, rank)
    return BimoduleCell(left, right, rank, tuple(I for _ in range(left.group.order)))


def unit_cell(ring) -> BimoduleCell:
    """``Z[B]`` as a ``(Z[B], Z[B])``-bimodule: rank 1, ``b`` acting by left multiplication."""
    ring = _ring(ring)
    G = ring.group
    return BimoduleCell(ring, ring, 1, tuple(GRMatrix.from_rows(G, [[ring.element(g)]]) for g in range(G.order)))


def permutation_cell(right, left, perms: Sequence[Sequence[int]]) -> BimoduleCell:
    """``Z[B]^n`` with ``A`` permuting coordinates; ``perms[a][i]`` is where ``e_i`` goes."""
    right, left = _ring(right), _ring(left)
    n = len(perms[0]) if perms else 0
    mats = []
    for p in perms:
        M = GRMatrix.zeros(right.group, n, n)
        for i, j in enumerate(p):
            M = M.with_entry(j, i, 1)
        mats.append(M)
    return BimoduleCell(left, right, n, tuple(mats))


@dataclass(frozen=True)
class EndoMatrix:
    """A 2-cell ``F: M -> M``; checked to commute with the left action."""
    cell: BimoduleCell
    matrix: GRMatrix

    def __post_init__(self):
        if self.matrix.group != self.cell.right.group or self.matrix.shape != (self.cell.rank,) * 2:
            raise RingMismatchError("endomorphism matrix does not fit its cell")
        for a, R in enumerate(self.cell.action):
            if self.matrix @ R != R @ self.matrix:
                raise LinearityError(
                    f"matrix does not commute with the action of {self.cell.left.group.format(a)}")


def endo(matrix: GRMatrix, cell: BimoduleCell | None = None) -> EndoMatrix:
    """Wrap a square matrix, on the free cell of its size unless a cell is given."""
    if cell is None:
        cell = free_cell(matrix.group, matrix.rows)
    return EndoMatrix(cell, matrix)


def shadow_trace(F, twist: Sequence[int] | None = None) -> ShadowValue:
    """Class of the diagonal sum in the (twisted) shadow of the right ring."""
    M = F if isinstance(F, GRMatrix) else F.matrix
    if M.rows != M.cols:
        raise DimensionError("trace of a non-square matrix")
    if isinstance(F, GRMatrix):
        F = endo(F)
    return hh0(F.cell.right, twist).project(F.matrix.diagonal_sum())


def twist_matrix(P: GRMatrix, phi: Sequence[int]) -> GRMatrix:
    """Apply a group endomorphism entrywise."""
    return P.map_entries(lambda x: x.map(lambda g: phi[g]))


def tensor_cells(M: BimoduleCell, N: BimoduleCell) -> BimoduleCell:
    """``M (x)_B N``: each entry of ``rho_M(a)`` replaced by its ``rho_N`` block."""
    if M.right != N.left:
        raise RingMismatchError("middle rings of the composite do not match")
    return BimoduleCell(M.left, N.right, M.rank * N.rank,
                        tuple(_substitute(R, N) for R in M.action))


def _substitute(R: GRMatrix, N: BimoduleCell) -> GRMatrix:
    n = N.rank
    out = GRMatrix.zeros(N.right.group, R.rows * n, R.cols * n)
    for i in range(R.rows):
        for j in range(R.cols):
            block = N.act(R.entries[i][j])
            for k in range(n):
                for l in range(n):
                    out.entries[i * n + k][j * n + l] = block.entries[k][l]
    return out


def tensor_endos(F: EndoMatrix, G: EndoMatrix) -> EndoMatrix:
    """``F (x) G`` on ``M (x)_B N``: block ``(i, j)`` is ``rho_N(F_ij) G``."""
    cell = tensor_cells(F.cell, G.cell)
    blocks = _substitute(F.matrix, G.cell)
    n = G.cell.rank
    out = GRMatrix.zeros(cell.right.group, cell.rank, cell.rank)
    for bi in range(F.cell.rank):
        for bj in range(F.cell.rank):
            sub = GRMatrix(out.group, n, n, [r[bj * n:(bj + 1) * n] for r in blocks.entries[bi * n:(bi + 1) * n]])
            prod = sub @ G.matrix
            for k in range(n):
                for l in range(n):
                    out.entries[bi * n + k][bj * n + l] = prod.entries[k][l]
    return EndoMatrix(cell, out)


def _pair_element(x: GroupRingElement, y: GroupRingElement, GH: FiniteGroupTable, h_order: int):
    terms = {}
    for g, c in x._terms.items():
        for h, d in y._terms.items():
            terms[g * h_order + h] = c * d
    return GroupRingElement(GH, terms, _trusted=True)


def external_tensor(F: GRMatrix, G: GRMatrix) -> GRMatrix:
    """Kronecker product over ``Z[G x H] = Z[G] (x) Z[H]``."""
    GH = direct_product(F.group, G.group)
    q = G.group.order
    rows, cols = F.rows * G.rows, F.cols * G.cols
    out = GRMatrix.zeros(GH, rows, cols)
    for i in range(F.rows):
        for j in range(F.cols):
            for k in range(G.rows):
                for l in range(G.cols):
                    out.entries[i * G.rows + k][j * G.cols + l] = _pair_element(
                        F.entries[i][j], G.entries[k][l], GH, q)
    return out


def shadow_product(s: ShadowValue, t: ShadowValue) -> ShadowValue:
    """Class-wise product in ``HH_0(Z[G x H])``; classes of a product are products of classes."""
    if s.twist is not None or t.twist is not None:
        raise RingMismatchError("shadow products are defined for untwisted shadows")
    GH = direct_product(s.ring.group, t.ring.group)
    q = t.ring.group.order
    coeffs = {r * q + u: c * d for r, c in s.coefficients.items() for u, d in t.coefficients.items()}
    return ShadowValue(RingSpec(GH), None, coeffs)


def morita_embed(F: GRMatrix, k: int, slot: int = 0) -> GRMatrix:
    """Each entry ``x`` becomes the ``k x k`` block with ``x`` at ``(slot, slot)``."""
    n = F.rows
    out = GRMatrix.zeros(F.group, n * k, F.cols * k)
    for i in range(n):
        for j in range(F.cols):
            out.entries[i * k + slot][j * k + slot] = F.entries[i][j]
    return out


def hattori_stallings(e: GRMatrix) -> ShadowValue:
    """Trace of the identity of the projective module ``im(e)``."""
    if e.rows != e.cols:
        raise DimensionError("idempotent must be square")
    if e @ e != e:
        raise NotIdempotentError("matrix is not idempotent")
    return shadow_trace(e)


@dataclass
class DualPairResult:
    ok: bool
    failing: list  # names of the failing triangle identities

    def to_dict(self):
        return {"ok": self.ok, "failing": list(self.failing)}


def canonical_dual_pair(cell: BimoduleCell) -> tuple[GRMatrix, GRMatrix]:
    """``(coev, ev)`` of the standard basis and its dual basis."""
    I = GRMatrix.identity(cell.right.group, cell.rank)
    return I, I


def dual_pair_check(cell: BimoduleCell, coev: GRMatrix, ev: GRMatrix) -> DualPairResult:
    """Check both triangle identities for ``M = Z[B]^n`` and its dual.

    ``coev`` is the matrix of ``c(1) = sum_ik e_i coev_ik (x) e_k^*`` and
    ``ev[i][j] = e(e_i^* (x) e_j)``. The composite on ``M`` (first triangle)
    is ``coev ev``; the one on the dual (second triangle) is ``ev coev``.
    """
    n = cell.rank
    for name, X in (("coev", coev), ("ev", ev)):
        if X.shape != (n, n):
            raise DimensionError(f"{name} is {X.rows}x{X.cols}, expected {n}x{n}")
        if X.group != cell.right.group:
            raise RingMismatchError(f"{name} is over the wrong group ring")
    I = GRMatrix.identity(cell.right.group, n)
    failing = []
    if coev @ ev != I:
        failing.append("first")
    if ev @ coev != I:
        failing.append("second")
    return DualPairResult(not failing, failing)
