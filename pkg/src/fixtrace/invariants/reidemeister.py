"""Twisted conjugacy (Reidemeister) classes and the Reidemeister trace.

Classes are for the relation ``y ~ f(a) x a^-1``. Three solvers:

finite-exact    orbits over a finite group table
abelian-exact   elements of ``coker(1 - f_*)`` via Smith normal form
bounded         union-find saturation over conjugators up to a word-length
                bound; every merge is witnessed, but classes may over-split
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from ..cover import (Pi1Presentation, SpanningTree, equivariant_boundary, induced_pi1_map,
                     pi1_presentation, spanning_tree, twisted_chain_lift)
from ..errors import BasepointError
from ..groupring import GroupRingElement
from ..groups import FiniteGroupTable
from ..presentation import Presentation, SimplifiedGroup
from ..simplicial import SimplicialComplex, SimplicialMap, require_valid
from ..smith import IntMatrix, LatticeQuotient
from ..words import (Word, exponent_sums, free_reduce, from_exponents, inverse, multiply, reduced_words,
                     shortlex_key, substitute)

# conjugators enumerated per class-set before the bounded solver stops early
CONJUGATOR_BUDGET = 20000


class ReidemeisterClassSet:
    """Common surface of the three solvers.

    ``partition(elements)`` returns a dict element -> class representative for
    all given elements at once (joint classification matters for the bounded
    solver). Representatives are canonical group elements.
    """

    tier: str
    exact: bool

    def partition(self, elements: Iterable) -> dict:
        raise NotImplementedError

    def project(self, *xs: GroupRingElement) -> list[dict]:
        """Each group ring element as ``{representative: coefficient}``, classified jointly."""
        keys = [g for x in xs for g in x._terms]
        reps = self.partition(keys)
        out = []
        for x in xs:
            acc: dict = {}
            for g, c in x._terms.items():
                r = reps[g]
                acc[r] = acc.get(r, 0) + c
            out.append({r: c for r, c in acc.items() if c})
        return out

    def sort_key(self, rep):
        raise NotImplementedError

    def format(self, rep) -> str:
        raise NotImplementedError

    @property
    def count(self) -> int | None:
        return None


class FiniteClassSet(ReidemeisterClassSet):
    tier = "finite-exact"
    exact = True

    def __init__(self, group: FiniteGroupTable, phi: Sequence[int]):
        self.group = group
        self.phi = group.check_endomorphism(phi)
        self.classes = group.twisted_classes(self.phi)
        self._rep = {x: c[0] for c in self.classes for x in c}

    def classify(self, x: int) -> int:
        return self._rep[x]

    def partition(self, elements):
        return {x: self._rep[x] for x in elements}

    @property
    def representatives(self) -> list[int]:
        return [c[0] for c in self.classes]

    @property
    def count(self) -> int:
        return len(self.classes)

    def related(self, x: int, y: int) -> bool:
        """Exhaustive check: is there ``a`` with ``y = phi(a) x a^-1``?"""
        G = self.group
        return any(G.mul(G.mul(self.phi[a], x), G.inv(a)) == y for a in range(G.order))

    def sort_key(self, rep):
        return rep

    def format(self, rep) -> str:
        return self.group.format(rep)


class AbelianClassSet(ReidemeisterClassSet):
    """Classes of an abelian ``pi`` are ``Z^r / (relators + im(Phi - I))``.

    Input elements are words in the original generators; representatives are
    words in the simplified generators rebuilt from normal-form coordinates.
    """

    tier = "abelian-exact"
    exact = True

    def __init__(self, group: SimplifiedGroup, images: Sequence[Word]):
        self.group = group
        self.fstar = group.induced_endomorphism(images)
        r = group.rank
        rows = [exponent_sums(w, r) for w in group.relators]
        self.twist_matrix = [exponent_sums(w, r) for w in self.fstar]  # row i = f_*(g_i)
        for i in range(r):
            rows.append([self.twist_matrix[i][j] - (1 if i == j else 0) for j in range(r)])
        self.lattice = LatticeQuotient(IntMatrix(len(rows), r, rows))

    def key(self, w: Word) -> tuple:
        return self.lattice.normal_form(exponent_sums(self.group.simplify(w), self.group.rank))

    def element_from_key(self, key: tuple) -> Word:
        return from_exponents(self.lattice.representative(key))

    def classify(self, w: Word) -> Word:
        return self.element_from_key(self.key(w))

    def partition(self, elements):
        return {w: self.classify(w) for w in elements}

    @property
    def count(self) -> int | None:
        return self.lattice.order

    def representatives(self, radius: int = 2) -> list[Word]:
        return [self.element_from_key(k) for k in self.lattice.keys(radius)]

    def sort_key(self, rep):
        return shortlex_key(rep)

    def format(self, rep) -> str:
        return self.group.format(rep)


@dataclass
class Merge:
    x: Word
    y: Word
    conjugator: Word


class BoundedClassSet(ReidemeisterClassSet):
    """Union-find saturation ``x -> f_*(a) x a^-1`` over reduced conjugators ``|a| <= bound``.

    Works on freely reduced words in the simplified generators, which is
    sound (equal words are equal in pi) but not complete when relators remain.
    Seeds are first split by their class in ``coker(1 - f_ab)`` on the
    abelianization, a sound invariant, so only same-invariant seeds are searched.
    """

    tier = "bounded"
    exact = False

    def __init__(self, group: SimplifiedGroup, images: Sequence[Word], bound: int = 6,
                 budget: int = CONJUGATOR_BUDGET):
        self.group = group
        self.fstar = group.induced_endomorphism(images)
        self.bound = bound
        self.budget = budget
        self.searched_length = None
        self.merges: list[Merge] = []
        r = group.rank
        rows = [exponent_sums(w, r) for w in group.relators]
        for i in range(r):
            img = exponent_sums(self.fstar[i], r)
            rows.append([img[j] - (1 if i == j else 0) for j in range(r)])
        self._ab = LatticeQuotient(IntMatrix(len(rows), r, rows))
        self._conjugators = None

    def _conjugator_table(self):
        if self._conjugators is None:
            r = self.group.rank
            # only whole length layers, stopping before one that would exceed the budget
            total, length = 1, 0
            while length < self.bound and r:
                layer = 2 * r * (2 * r - 1) ** length
                if total + layer > self.budget:
                    break
                total += layer
                length += 1
            self.searched_length = length
            table = []
            images: dict[Word, Word] = {(): ()}
            for a in reduced_words(r, length):
                if a:
                    images[a] = multiply(images[a[:-1]], substitute((a[-1],), self.fstar))
                table.append((a, images[a], inverse(a)))
            self._conjugators = table
        return self._conjugators

    def _reduce(self, w: Word) -> Word:
        return free_reduce(self.group.simplify(w))

    def partition(self, elements):
        elements = list(dict.fromkeys(elements))
        reduced = {w: self._reduce(w) for w in elements}
        seeds = list(dict.fromkeys(reduced.values()))
        parent = {s: s for s in seeds}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x, y):
            rx, ry = find(x), find(y)
            if rx != ry:
                if shortlex_key(ry) < shortlex_key(rx):
                    rx, ry = ry, rx
                parent[ry] = rx

        buckets: dict[tuple, list[Word]] = {}
        for s in seeds:
            buckets.setdefault(self._ab.normal_form(exponent_sums(s, self.group.rank)), []).append(s)
        for bucket in buckets.values():
            if len(bucket) < 2:
                continue
            members = set(bucket)
            for x in bucket:
                for a, fa, a_inv in self._conjugator_table():
                    y = multiply(fa, x, a_inv)
                    if y in members and find(y) != find(x):
                        self.merges.append(Merge(x, y, a))
                        union(x, y)
        return {w: find(reduced[w]) for w in elements}

    def sort_key(self, rep):
        return shortlex_key(rep)

    def format(self, rep) -> str:
        return self.group.format(rep)

    def verify_merges(self) -> bool:
        return all(multiply(substitute(m.conjugator, self.fstar), m.x, inverse(m.conjugator)) == m.y
                   for m in self.merges)


def reidemeister_classes(group, fstar, bound: int = 6) -> ReidemeisterClassSet:
    """Pick the strongest available solver.

    ``group`` is a :class:`FiniteGroupTable` (``fstar`` maps element indices), or
    a :class:`Presentation` / :class:`SimplifiedGroup` (``fstar`` lists the
    images of the generators as words).
    """
    if isinstance(group, FiniteGroupTable):
        return FiniteClassSet(group, fstar)
    if isinstance(group, Presentation):
        group = SimplifiedGroup(group)
    group.check_homomorphism(fstar)
    if group.tier == "abelian":
        return AbelianClassSet(group, fstar)
    return BoundedClassSet(group, fstar, bound)


@dataclass
class TraceValue:
    """Integer combination of Reidemeister classes."""
    classes: ReidemeisterClassSet | None
    coefficients: dict = field(default_factory=dict)

    @property
    def exact(self) -> bool:
        return True if self.classes is None else self.classes.exact

    def augmentation(self) -> int:
        return sum(self.coefficients.values())

    def items(self):
        if self.classes is None:
            return []
        return sorted(self.coefficients.items(), key=lambda kv: self.classes.sort_key(kv[0]))

    def nonzero_classes(self) -> int:
        return sum(1 for c in self.coefficients.values() if c)

    def to_dict(self) -> dict:
        return {
            "classes": [{"representative": self.classes.format(r), "coefficient": c}
                        for r, c in self.items()],
            "coefficients": [c for _, c in self.items()],
            "exact": self.exact,
            "tier": self.classes.tier if self.classes is not None else None,
        }

    def __eq__(self, other):
        return isinstance(other, TraceValue) and self.coefficients == other.coefficients


@dataclass
class LiftedSelfMap:
    """Everything the chain-level and geometric routes share for one based self-map."""
    complex: SimplicialComplex
    map: SimplicialMap
    tree: SpanningTree
    presentation: Pi1Presentation
    group: SimplifiedGroup
    fstar: tuple

    def class_set(self, bound: int = 6) -> ReidemeisterClassSet:
        return reidemeister_classes(self.group, self.fstar, bound)


def lift_self_map(K: SimplicialComplex, f: SimplicialMap, v0: int = 0) -> LiftedSelfMap:
    require_valid(f)
    if f(v0) != v0:
        raise BasepointError(f"map sends basepoint {K.vertices[v0]!r} to {K.vertices[f(v0)]!r}")
    T = spanning_tree(K, v0)
    pres = pi1_presentation(K, T)
    fstar = induced_pi1_map(f, T, pres)
    return LiftedSelfMap(K, f, T, pres, SimplifiedGroup(pres.presentation()), fstar)


def raw_reidemeister_trace(lifted: LiftedSelfMap) -> GroupRingElement:
    """``sum_n (-1)^n`` (diagonal of the lift on C_n) in the free group ring, unprojected."""
    chain = equivariant_boundary(lifted.complex, lifted.tree, lifted.presentation)
    lift = twisted_chain_lift(lifted.map, lifted.tree, chain)
    total = GroupRingElement.zero(chain.group)
    for n, M in lift.matrices.items():
        d = M.diagonal_sum()
        total = total + (d if n % 2 == 0 else -d)
    return total


def reidemeister_trace(K: SimplicialComplex, f: SimplicialMap, v0: int = 0, bound: int = 6) -> TraceValue:
    lifted = lift_self_map(K, f, v0)
    classes = lifted.class_set(bound)
    (coeffs,) = classes.project(raw_reidemeister_trace(lifted))
    return TraceValue(classes, coeffs)


def nielsen_lower_bound(R: TraceValue) -> tuple[int, bool]:
    """``(number of classes with nonzero coefficient, certified)``."""
    return R.nonzero_classes(), R.exact
