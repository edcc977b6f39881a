"""Group contexts: finite groups given by multiplication tables, and free groups.

Both expose the small protocol used by group rings: ``identity``, ``mul``,
``inv``, ``canonical``, ``sort_key`` and ``format``.
"""

from __future__ import annotations

import itertools
from typing import Sequence

from . import kernels
from .errors import InvalidGroupError, NotHomomorphismError
from .words import Word, format_word, free_reduce, inverse, multiply, shortlex_key


class FiniteGroupTable:
    """A finite group on ``0..order-1`` with a Cayley table.

    ``product[i][j]`` is the index of ``i*j``. Validation checks closure,
    associativity (exhaustive), a two-sided identity and inverses.
    """

    def __init__(self, product: Sequence[Sequence[int]], labels: Sequence[str] | None = None,
                 check: bool = True):
        self.product = tuple(tuple(int(x) for x in row) for row in product)
        self.order = len(self.product)
        if labels is None:
            labels = [f"x{i}" for i in range(self.order)]
        self.labels = tuple(str(x) for x in labels)
        if check:
            self._validate()
        self.identity = self._find_identity()
        inv = [0] * self.order
        for i in range(self.order):
            for j in range(self.order):
                if self.product[i][j] == self.identity:
                    inv[i] = j
                    break
        self.inverse = tuple(inv)
        self._classes = None

    def _validate(self):
        n = self.order
        if n == 0:
            raise InvalidGroupError("group table is empty")
        if len(self.labels) != n or len(set(self.labels)) != n:
            raise InvalidGroupError("element labels must be distinct and match the table size")
        for i, row in enumerate(self.product):
            if len(row) != n:
                raise InvalidGroupError(f"row {i} has length {len(row)}, expected {n}")
            if any(not 0 <= x < n for x in row):
                raise InvalidGroupError(f"row {i} has an entry outside 0..{n - 1}")
        if self._find_identity() is None:
            raise InvalidGroupError("no identity element")
        e = self._find_identity()
        for i in range(n):
            if e not in self.product[i] or e not in (self.product[j][i] for j in range(n)):
                raise InvalidGroupError(f"element {self.labels[i]} has no inverse")
        if not kernels.is_associative(self.product):
            raise InvalidGroupError("table is not associative")

    def _find_identity(self):
        for e in range(self.order):
            if all(self.product[e][i] == i and self.product[i][e] == i for i in range(self.order)):
                return e
        return None

    # group-context protocol
    def mul(self, x: int, y: int) -> int:
        return self.product[x][y]

    def inv(self, x: int) -> int:
        return self.inverse[x]

    def canonical(self, x: int) -> int:
        return x

    def sort_key(self, x: int):
        return x

    def format(self, x: int) -> str:
        return self.labels[x]

    def element(self, label: str) -> int:
        try:
            return self.labels.index(str(label))
        except ValueError:
            raise InvalidGroupError(f"unknown group element {label!r}") from None

    def __len__(self):
        return self.order

    def __eq__(self, other):
        return isinstance(other, FiniteGroupTable) and self.product == other.product

    def __hash__(self):
        return hash(self.product)

    def __repr__(self):
        return f"FiniteGroupTable(order={self.order})"

    def is_abelian(self) -> bool:
        return all(self.product[i][j] == self.product[j][i]
                   for i in range(self.order) for j in range(i))

    def check_endomorphism(self, phi: Sequence[int]) -> tuple[int, ...]:
        phi = tuple(int(x) for x in phi)
        if len(phi) != self.order or any(not 0 <= x < self.order for x in phi):
            raise NotHomomorphismError("endomorphism must map every element into the group")
        for a in range(self.order):
            for b in range(self.order):
                if phi[self.product[a][b]] != self.product[phi[a]][phi[b]]:
                    raise NotHomomorphismError(
                        f"phi({self.labels[a]}*{self.labels[b]}) != phi({self.labels[a]})*phi({self.labels[b]})")
        return phi

    def twisted_classes(self, phi: Sequence[int] | None = None) -> list[list[int]]:
        """Classes of ``x ~ phi(a) x a^-1``, each sorted, least representative first."""
        if phi is None:
            if self._classes is None:
                self._classes = _partition(kernels.twisted_class_labels(
                    self.product, self.inverse, tuple(range(self.order))))
            return [list(c) for c in self._classes]
        return _partition(kernels.twisted_class_labels(self.product, self.inverse, tuple(phi)))


def _partition(labels):
    classes: dict[int, list[int]] = {}
    for x, rep in enumerate(labels):
        classes.setdefault(rep, []).append(x)
    return [classes[r] for r in sorted(classes)]


def conjugacy_classes(G: FiniteGroupTable) -> list[list[int]]:
    return G.twisted_classes()


def cyclic_group(n: int) -> FiniteGroupTable:
    labels = ["e", "t"][:n] + [f"t^{i}" for i in range(2, n)]
    return FiniteGroupTable([[(i + j) % n for j in range(n)] for i in range(n)], labels)


def permutation_group(perms: Sequence[Sequence[int]]) -> FiniteGroupTable:
    """Group of the given permutations (must be closed); composition ``(p*q)(i) = p[q[i]]``."""
    perms = [tuple(p) for p in perms]
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(p[q[i]] for i in range(len(q)))] for q in perms] for p in perms]
    labels = ["e" if p == tuple(range(len(p))) else "p" + "".join(map(str, p)) for p in perms]
    return FiniteGroupTable(table, labels)


def symmetric_group(n: int) -> FiniteGroupTable:
    return permutation_group(list(itertools.permutations(range(n))))


def _closure(gens: Sequence[tuple[int, ...]]) -> list[tuple[int, ...]]:
    n = len(gens[0])
    ident = tuple(range(n))
    elems = [ident]
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = tuple(p[g[i]] for i in range(n))
                if q not in seen:
                    seen.add(q)
                    elems.append(q)
                    nxt.append(q)
        frontier = nxt
    return [ident] + sorted(e for e in elems if e != ident)


def dihedral_group(n: int) -> FiniteGroupTable:
    """Symmetries of the n-gon (order 2n)."""
    rot = tuple((i + 1) % n for i in range(n))
    ref = tuple((-i) % n for i in range(n))
    return permutation_group(_closure([rot, ref]))


def quaternion_group() -> FiniteGroupTable:
    # regular representation of Q8 on {±1, ±i, ±j, ±k} encoded 0..7
    names = ["1", "i", "j", "k"]
    mult = {("1", x): (1, x) for x in names}
    mult.update({(x, "1"): (1, x) for x in names})
    for x in "ijk":
        mult[(x, x)] = (-1, "1")
    mult.update({("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
                 ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j")})
    elems = [(s, x) for s in (1, -1) for x in names]
    idx = {e: i for i, e in enumerate(elems)}
    table = []
    for s1, x1 in elems:
        row = []
        for s2, x2 in elems:
            s, x = mult[(x1, x2)]
            row.append(idx[(s1 * s2 * s, x)])
        table.append(row)
    labels = [("" if s > 0 else "m") + x for s, x in elems]
    return FiniteGroupTable(table, labels)


def direct_product(G: FiniteGroupTable, H: FiniteGroupTable) -> FiniteGroupTable:
    """``G x H`` with ``(g, h)`` stored at index ``g * |H| + h``."""
    m = H.order
    table = [[G.product[g1][g2] * m + H.product[h1][h2]
              for g2 in range(G.order) for h2 in range(m)]
             for g1 in range(G.order) for h1 in range(m)]
    labels = [f"({G.labels[g]},{H.labels[h]})" for g in range(G.order) for h in range(m)]
    return FiniteGroupTable(table, labels)


def trivial_group() -> FiniteGroupTable:
    return FiniteGroupTable([[0]], ["e"])


class FreeGroup:
    """Free group of finite rank; canonical form is the freely reduced word."""

    def __init__(self, rank: int, names: Sequence[str] | None = None):
        self.rank = rank
        self.names = tuple(names) if names is not None else tuple(f"g{i}" for i in range(rank))
        self.identity: Word = ()

    def mul(self, x: Word, y: Word) -> Word:
        return multiply(x, y)

    def inv(self, x: Word) -> Word:
        return inverse(x)

    def canonical(self, x) -> Word:
        return free_reduce(x)

    def sort_key(self, x: Word):
        return shortlex_key(x)

    def format(self, x: Word) -> str:
        return format_word(x, self.names)

    def __eq__(self, other):
        return isinstance(other, FreeGroup) and self.names == other.names

    def __hash__(self):
        return hash(("free", self.names))

    def __repr__(self):
        return f"FreeGroup(rank={self.rank})"
