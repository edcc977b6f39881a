"""Random matrices and a brute-force class oracle for the shadow suites."""

import random

from fixtrace.groupring import GroupRingElement
from fixtrace.grmatrix import GRMatrix


def brute_classes(G, phi=None):
    """Count classes of ``x ~ phi(a) x a^-1`` by flood fill, independent of the library."""
    phi = list(range(G.order)) if phi is None else list(phi)
    seen, count = set(), 0
    for x in range(G.order):
        if x in seen:
            continue
        count += 1
        stack = [x]
        seen.add(x)
        while stack:
            y = stack.pop()
            for a in range(G.order):
                z = G.mul(G.mul(phi[a], y), G.inv(a))
                if z not in seen:
                    seen.add(z)
                    stack.append(z)
    return count


def random_element(rng, G, terms=3, coeff=3):
    return GroupRingElement(G, {rng.randrange(G.order): rng.randint(-coeff, coeff) for _ in range(rng.randint(0, terms))})


def random_matrix(rng, G, rows, cols=None, terms=2):
    cols = rows if cols is None else cols
    return GRMatrix(G, rows, cols, [[random_element(rng, G, terms) for _ in range(cols)] for _ in range(rows)])


def random_monomial(rng, G, n):
    """An invertible monomial matrix and its inverse."""
    perm = list(range(n))
    rng.shuffle(perm)
    g = [rng.randrange(G.order) for _ in range(n)]
    P = GRMatrix.zeros(G, n, n)
    Q = GRMatrix.zeros(G, n, n)
    for i, j in enumerate(perm):
        P = P.with_entry(j, i, GroupRingElement.basis(G, g[i]))
        Q = Q.with_entry(i, j, GroupRingElement.basis(G, G.inv(g[i])))
    return P, Q


def manual_trace_classes(G, F, phi=None):
    """Diagonal sum reduced to least class representatives by brute force."""
    phi = list(range(G.order)) if phi is None else list(phi)
    rep = {}
    for x in range(G.order):
        orbit = {G.mul(G.mul(phi[a], y), G.inv(a)) for y in [x] for a in range(G.order)}
        changed = True
        while changed:
            new = {G.mul(G.mul(phi[a], y), G.inv(a)) for y in orbit for a in range(G.order)} | orbit
            changed = new != orbit
            orbit = new
        rep[x] = min(orbit)
    acc = {}
    for i in range(F.rows):
        for g, c in F.entries[i][i]._terms.items():
            acc[rep[g]] = acc.get(rep[g], 0) + c
    return {r: c for r, c in acc.items() if c}


def seeded(seed):
    return random.Random(seed)
