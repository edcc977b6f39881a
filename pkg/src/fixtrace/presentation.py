"""Finitely presented groups: Tietze simplification and normal forms where decidable.

After simplification a presentation falls into one of three tiers:

``abelian``   the simplified group is visibly abelian (at most one generator,
              or a commutator relator for every generator pair); elements have
              normal forms in ``Z^r / <relators>``.
``free``      no relators remain; freely reduced words are normal forms.
``presented`` anything else; words are only reduced, never certified equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import NotHomomorphismError
from .smith import IntMatrix, LatticeQuotient
from .words import (Word, cyclic_reduce, exponent_sums, format_word, free_reduce,
                    from_exponents, inverse, shortlex_key, substitute)


@dataclass(frozen=True)
class Presentation:
    rank: int
    relators: tuple
    names: tuple = None

    def __post_init__(self):
        if self.names is None:
            object.__setattr__(self, "names", tuple(f"g{i}" for i in range(self.rank)))

    def abelianization_matrix(self) -> IntMatrix:
        """Generators x relators exponent sums; its cokernel is the abelianization."""
        cols = [exponent_sums(r, self.rank) for r in self.relators]
        return IntMatrix(self.rank, len(cols), [[c[i] for c in cols] for i in range(self.rank)])


def _is_commutator(r: Word) -> tuple[int, int] | None:
    if len(r) != 4:
        return None
    a, b, c, d = r
    if a[0] != c[0] or b[0] != d[0] or a[0] == b[0]:
        return None
    if a[1] != -c[1] or b[1] != -d[1]:
        return None
    return tuple(sorted((a[0], b[0])))


class SimplifiedGroup:
    """A presentation together with its Tietze simplification.

    ``to_simplified[i]`` expresses original generator ``i`` as a word in the
    surviving generators (renumbered ``0..rank-1``); ``survivors[j]`` is the
    original index of simplified generator ``j``.
    """

    def __init__(self, presentation: Presentation):
        self.original = presentation
        survivors, images, relators = _tietze(presentation.rank, presentation.relators)
        self.survivors = tuple(survivors)
        self.rank = len(survivors)
        self.to_simplified = tuple(images)
        self.relators = tuple(relators)
        self.names = tuple(presentation.names[i] for i in survivors)
        self.tier = self._classify()
        self._lattice = None
        if self.tier == "abelian":
            rows = [exponent_sums(r, self.rank) for r in self.relators]
            self._lattice = LatticeQuotient(IntMatrix(len(rows), self.rank, rows))

    def _classify(self) -> str:
        if self.rank <= 1:
            return "abelian"
        if not self.relators:
            return "free"
        pairs = {_is_commutator(cyclic_reduce(r)) for r in self.relators}
        needed = {(i, j) for i in range(self.rank) for j in range(i + 1, self.rank)}
        if needed <= pairs:
            return "abelian"
        return "presented"

    @property
    def has_normal_form(self) -> bool:
        return self.tier in ("abelian", "free")

    @property
    def lattice(self) -> LatticeQuotient | None:
        return self._lattice

    def simplify(self, w: Word) -> Word:
        """Rewrite a word in original generators into the simplified generators."""
        return substitute(w, self.to_simplified)

    def normal_form(self, w: Word, simplified: bool = False):
        """Canonical hashable form of ``w``; raises when the tier has none."""
        s = w if simplified else self.simplify(w)
        if self.tier == "abelian":
            return self._lattice.normal_form(exponent_sums(s, self.rank))
        if self.tier == "free":
            return free_reduce(s)
        raise ValueError("no normal form for a general presented group")

    def reduced(self, w: Word) -> Word:
        """Best-effort form: always sound, canonical only in the free tier."""
        return free_reduce(self.simplify(w))

    def element_from_key(self, key) -> Word:
        """A word (in simplified generators) with the given normal form."""
        if self.tier == "abelian":
            return from_exponents(self._lattice.representative(key))
        return key

    def is_trivial(self, w: Word, simplified: bool = False) -> bool | None:
        if not self.has_normal_form:
            s = w if simplified else self.simplify(w)
            return True if not free_reduce(s) else None
        return self.normal_form(w, simplified) == self.normal_form((), True)

    def format(self, w: Word) -> str:
        return format_word(w, self.names)

    def induced_endomorphism(self, images: Sequence[Word]) -> tuple:
        """Images of simplified generators from images of original generators."""
        return tuple(self.simplify(images[o]) for o in self.survivors)

    def check_homomorphism(self, images: Sequence[Word]) -> None:
        """Check that relators map to the identity (only possible with a normal form)."""
        if not self.has_normal_form:
            return
        for r in self.original.relators:
            img = substitute(r, images)
            if not self.is_trivial(img):
                raise NotHomomorphismError(
                    f"relator {format_word(r, self.original.names)} does not map to the identity")


def _tietze(rank: int, relators: Sequence[Word]):
    alive = list(range(rank))
    images: list[Word] = [((i, 1),) for i in range(rank)]
    rels = [cyclic_reduce(r) for r in relators]
    rels = [r for r in rels if r]
    while True:
        choice = None
        for ri, r in sorted(enumerate(rels), key=lambda p: (len(p[1]), p[0])):
            counts: dict[int, int] = {}
            for g, _ in r:
                counts[g] = counts.get(g, 0) + 1
            singles = [g for g, c in counts.items() if c == 1]
            if singles:
                choice = (ri, max(singles))
                break
        if choice is None:
            break
        ri, x = choice
        r = rels.pop(ri)
        pos = next(i for i, (g, _) in enumerate(r) if g == x)
        eps = r[pos][1]
        u, v = r[:pos], r[pos + 1:]
        # u x^eps v = 1  =>  x^eps = u^-1 v^-1
        sol = free_reduce(inverse(u) + inverse(v))
        if eps < 0:
            sol = inverse(sol)
        subst = [((g, 1),) for g in range(rank)]
        subst[x] = sol
        images = [substitute(w, subst) for w in images]
        rels = [cyclic_reduce(substitute(q, subst)) for q in rels]
        rels = [q for q in rels if q]
        alive.remove(x)
    renumber = {old: new for new, old in enumerate(alive)}
    relabel = lambda w: tuple((renumber[g], s) for g, s in w)
    images = [relabel(w) for w in images]
    rels = sorted({relabel(r) for r in rels}, key=shortlex_key)
    return alive, images, rels
