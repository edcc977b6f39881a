"""All groups of order at most 8, as tables (one representative per isomorphism type)."""

from fixtrace.groups import (cyclic_group, dihedral_group, direct_product, quaternion_group,
                             symmetric_group, trivial_group)


def small_groups():
    C = cyclic_group
    return {
        "C1": trivial_group(),
        "C2": C(2),
        "C3": C(3),
        "C4": C(4),
        "C2xC2": direct_product(C(2), C(2)),
        "C5": C(5),
        "C6": C(6),
        "S3": symmetric_group(3),
        "C7": C(7),
        "C8": C(8),
        "C4xC2": direct_product(C(4), C(2)),
        "C2xC2xC2": direct_product(direct_product(C(2), C(2)), C(2)),
        "D4": dihedral_group(4),
        "Q8": quaternion_group(),
    }


def endomorphisms(G, limit=None):
    """Every endomorphism of ``G`` by brute force over generator images (small groups only)."""
    gens = generators(G)
    out = []

    def extend(assign):
        if len(assign) == len(gens):
            phi = close_homomorphism(G, gens, assign)
            if phi is not None and phi not in out:
                out.append(phi)
            return
        for y in range(G.order):
            extend(assign + [y])
            if limit and len(out) >= limit:
                return

    extend([])
    return out


def generators(G):
    """A small generating set, greedily."""
    gens, span = [], {G.identity}
    for x in range(G.order):
        if x not in span:
            gens.append(x)
            span = _closure(G, gens)
    return gens


def _closure(G, gens):
    seen = {G.identity}
    frontier = [G.identity]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = G.mul(a, g)
                if b not in seen:
                    seen.add(b)
                    nxt.append(b)
        frontier = nxt
    return seen


def close_homomorphism(G, gens, images):
    """Extend generator images along words; None when inconsistent."""
    phi = {G.identity: G.identity}
    frontier = [G.identity]
    while frontier:
        nxt = []
        for a in frontier:
            for g, y in zip(gens, images):
                b, img = G.mul(a, g), G.mul(phi[a], y)
                if b in phi:
                    if phi[b] != img:
                        return None
                else:
                    phi[b] = img
                    nxt.append(b)
        frontier = nxt
    phi = tuple(phi[x] for x in range(G.order))
    for a in range(G.order):
        for b in range(G.order):
            if phi[G.mul(a, b)] != G.mul(phi[a], phi[b]):
                return None
    return phi
