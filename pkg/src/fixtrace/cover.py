"""Edge-path presentation of pi_1 and the universal-cover chain complex over Z[pi].

Conventions (all deterministic):

* The spanning tree is breadth-first from the basepoint, neighbours in index order.
* Generator ``g_e`` is attached to every non-tree edge ``e = (u, v)``, ``u < v``;
  it is the class of the loop ``tree(v0 -> u) . e . tree(v -> v0)``.
* The based lift of a simplex is the lift containing the based lift of its
  least vertex. pi acts on the left; a cell ``a * s~`` has coefficient ``a``.
* Matrices use the column convention: column ``c`` holds the image of basis
  cell ``c``. Composition of such maps is :func:`grmatrix.compose_left`.

Entries live in the free group ring on the generators; relators are applied
only when comparing, through :class:`presentation.SimplifiedGroup`.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import BasepointError, DisconnectedComplexError
from .groupring import GroupRingElement
from .groups import FreeGroup
from .grmatrix import GRMatrix, compose_left
from .presentation import Presentation, SimplifiedGroup
from .simplicial import SimplicialComplex, SimplicialMap, require_valid
from .smith import IntMatrix
from .words import Word, free_reduce, inverse, multiply


@dataclass(frozen=True)
class SpanningTree:
    root: int
    edges: frozenset
    parent: tuple  # parent[v], -1 for the root
    paths: tuple  # paths[v] = vertex sequence root -> v along the tree

    def path(self, v: int) -> tuple:
        return self.paths[v]


def spanning_tree(K: SimplicialComplex, root: int = 0) -> SpanningTree:
    n = len(K.vertices)
    if not 0 <= root < n:
        raise DisconnectedComplexError(f"basepoint index {root} outside the complex")
    adj: list[list[int]] = [[] for _ in range(n)]
    for a, b in K.edges():
        adj[a].append(b)
        adj[b].append(a)
    parent = [-2] * n
    parent[root] = -1
    paths: list = [None] * n
    paths[root] = (root,)
    edges = set()
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in sorted(adj[u]):
            if parent[w] == -2:
                parent[w] = u
                paths[w] = paths[u] + (w,)
                edges.add((min(u, w), max(u, w)))
                queue.append(w)
    if any(p == -2 for p in parent):
        missing = [K.vertices[v] for v in range(n) if parent[v] == -2]
        raise DisconnectedComplexError(f"complex is disconnected; unreachable vertices {missing}")
    return SpanningTree(root, frozenset(edges), tuple(parent), tuple(paths))


@dataclass(frozen=True)
class Pi1Presentation:
    """Generators are the non-tree edges; one relator per 2-simplex."""
    tree: SpanningTree
    generators: tuple  # non-tree edges (u, v), u < v
    relators: tuple

    @property
    def rank(self) -> int:
        return len(self.generators)

    @property
    def names(self) -> tuple:
        return tuple(f"g{i}" for i in range(self.rank))

    def presentation(self) -> Presentation:
        return Presentation(self.rank, self.relators, self.names)

    def abelianization_matrix(self) -> IntMatrix:
        return self.presentation().abelianization_matrix()

    def edge_word(self, u: int, v: int) -> Word:
        """Element read along the oriented edge ``u -> v`` (identity on tree edges)."""
        if u == v:
            return ()
        a, b = (u, v) if u < v else (v, u)
        gen = self._gen_index.get((a, b))
        if gen is None:
            return ()
        return ((gen, 1 if u < v else -1),)

    def path_word(self, vertices) -> Word:
        out: list = []
        for x, y in zip(vertices, vertices[1:]):
            out.extend(self.edge_word(x, y))
        return free_reduce(out)

    @property
    def _gen_index(self):
        cache = self.__dict__.get("_gi")
        if cache is None:
            cache = {e: i for i, e in enumerate(self.generators)}
            object.__setattr__(self, "_gi", cache)
        return cache


def pi1_presentation(K: SimplicialComplex, T: SpanningTree) -> Pi1Presentation:
    gens = tuple(e for e in K.edges() if e not in T.edges)
    pres = Pi1Presentation(T, gens, ())
    rels = []
    if K.dim >= 2:
        for a, b, c in K.simplices[2]:
            rels.append(multiply(pres.edge_word(a, b), pres.edge_word(b, c), pres.edge_word(c, a)))
    return Pi1Presentation(T, gens, tuple(rels))


@dataclass(frozen=True)
class EquivariantChainData:
    """Boundary matrices of C_*(X~) as free Z[pi]-modules (column convention)."""
    complex: SimplicialComplex
    tree: SpanningTree
    presentation: Pi1Presentation
    group: FreeGroup
    boundaries: dict  # n -> GRMatrix, rows (n-1)-simplices, cols n-simplices

    def boundary(self, n: int) -> GRMatrix:
        return self.boundaries[n]


def equivariant_boundary(K: SimplicialComplex, T: SpanningTree,
                         pres: Pi1Presentation | None = None) -> EquivariantChainData:
    if not K.is_connected():
        raise DisconnectedComplexError("universal cover needs a connected complex")
    pres = pi1_presentation(K, T) if pres is None else pres
    F = FreeGroup(pres.rank, pres.names)
    bounds = {}
    for n in range(1, K.dim + 1):
        M = GRMatrix.zeros(F, K.count(n - 1), K.count(n))
        for j, s in enumerate(K.simplices[n]):
            # face 0 of the based lift sits over the lift of s[1] reached from s[0]
            M.entries[K.index(s[1:])][j] = M.entries[K.index(s[1:])][j] + \
                GroupRingElement.basis(F, pres.edge_word(s[0], s[1]))
            for i in range(1, len(s)):
                face = s[:i] + s[i + 1:]
                row = K.index(face)
                M.entries[row][j] = M.entries[row][j] + GroupRingElement.basis(F, (), -1 if i % 2 else 1)
        bounds[n] = M
    return EquivariantChainData(K, T, pres, F, bounds)


def _check_self_map(f: SimplicialMap, T: SpanningTree):
    require_valid(f)
    if f.source is not f.target and f.source != f.target:
        raise ValueError("expected a self-map")
    if f(T.root) != T.root:
        raise BasepointError(
            f"map sends basepoint {f.source.vertices[T.root]!r} to {f.source.vertices[f(T.root)]!r}")


def induced_pi1_map(f: SimplicialMap, T: SpanningTree, pres: Pi1Presentation | None = None) -> tuple:
    """Images of the generators as words in the generators (relator-free reading)."""
    _check_self_map(f, T)
    pres = pi1_presentation(f.source, T) if pres is None else pres
    images = []
    for u, v in pres.generators:
        loop = [f(x) for x in T.path(u)] + [f(x) for x in reversed(T.path(v))]
        images.append(pres.path_word(loop))
    return tuple(images)


def lift_class(f: SimplicialMap, pres: Pi1Presentation, v: int) -> Word:
    """``c_v``: f~ sends the based lift of ``v`` to ``c_v`` times the based lift of ``f(v)``."""
    return pres.path_word([f(x) for x in pres.tree.path(v)])


@dataclass(frozen=True)
class TwistedChainMap:
    """Matrices of the lift f~ (column convention) and the generator images of f_*."""
    chain: EquivariantChainData
    fstar: tuple
    matrices: dict  # n -> GRMatrix

    def matrix(self, n: int) -> GRMatrix:
        return self.matrices[n]

    def twist(self, x: GroupRingElement) -> GroupRingElement:
        """Apply f_* to a group ring element (free reading)."""
        from .words import substitute
        return x.map(lambda w: substitute(w, self.fstar))


def twisted_chain_lift(f: SimplicialMap, T: SpanningTree,
                       chain: EquivariantChainData | None = None) -> TwistedChainMap:
    _check_self_map(f, T)
    K = f.source
    chain = equivariant_boundary(K, T) if chain is None else chain
    pres, F = chain.presentation, chain.group
    fstar = induced_pi1_map(f, T, pres)
    c = [lift_class(f, pres, v) for v in range(len(K.vertices))]
    mats = {}
    for n in range(K.dim + 1):
        M = GRMatrix.zeros(F, K.count(n), K.count(n))
        for j, s in enumerate(K.simplices[n]):
            oi = f.oriented_image(s)
            if oi is None:
                continue
            sign, img = oi
            # lift of img containing c_{s0} . f(s0)~, relative to img's based lift
            h = pres.edge_word(img[0], f(s[0]))
            coeff = multiply(c[s[0]], inverse(h))
            M.entries[K.index(img)][j] = GroupRingElement.basis(F, coeff, sign)
        mats[n] = M
    return TwistedChainMap(chain, fstar, mats)


def normalize_matrix(M: GRMatrix, G: SimplifiedGroup):
    """Entries pushed to normal forms (``dict key -> coeff``); requires a normal form."""
    out = []
    for row in M.entries:
        r = []
        for x in row:
            acc: dict = {}
            for w, k in x._terms.items():
                key = G.normal_form(w)
                acc[key] = acc.get(key, 0) + k
            r.append({k: v for k, v in acc.items() if v})
        out.append(r)
    return out


def boundary_squared(chain: EquivariantChainData, n: int) -> GRMatrix:
    """``d_{n-1} o d_n`` computed with relator-free arithmetic."""
    return compose_left(chain.boundaries[n - 1], chain.boundaries[n])


def equivariance_defect(lift: TwistedChainMap, n: int) -> GRMatrix:
    """``M_{n-1} o f_*(d_n) - d_n o M_n``; zero in Z[pi] exactly when f~ is a chain map."""
    d = lift.chain.boundaries[n]
    twisted = d.map_entries(lift.twist)
    return compose_left(lift.matrices[n - 1], twisted) - compose_left(d, lift.matrices[n])
