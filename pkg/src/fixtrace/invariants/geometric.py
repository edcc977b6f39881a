"""The Reidemeister trace as a weighted sum of fixed points, and its chain-level cross-check."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..cover import lift_class
from ..errors import NonVertexFixedPointError
from ..groupring import GroupRingElement
from ..simplicial import SimplicialComplex, SimplicialMap, require_valid
from .index import EmbeddingData, index_with_diagnostic, realized_map, retraction
from .lefschetz import lefschetz_chain
from .reidemeister import TraceValue, lift_self_map, raw_reidemeister_trace


@dataclass
class FixedPointReport:
    fixed_vertices: list
    indices: dict  # vertex -> index
    class_elements: dict  # vertex -> word (loop class in the original generators)
    trace: TraceValue
    samples: dict = field(default_factory=dict)  # vertex -> sample count (diagnostic)

    def index_sum(self) -> int:
        return sum(self.indices.values())


def check_vertex_fixed_points(K: SimplicialComplex, f: SimplicialMap) -> None:
    """Reject maps whose realization fixes a non-vertex point.

    A point in an open simplex ``s`` of dimension >= 1 can be fixed only if
    ``f`` maps ``s`` onto itself, and then the barycentre is fixed.
    """
    for dim in K.simplices[1:]:
        for s in dim:
            if f.image(s) == s:
                raise NonVertexFixedPointError(
                    f"simplex {K.labels(s)} is mapped onto itself, so its interior contains a fixed point")


def fixed_point_indices(K: SimplicialComplex, f: SimplicialMap, E: EmbeddingData, eps=None):
    require_valid(f)
    check_vertex_fixed_points(K, f)
    F = realized_map(K, f, E)
    p = retraction(K, E)
    out = {}
    for x in f.fixed_vertices():
        out[x] = index_with_diagnostic(E, F, x, None if eps is None else Fraction(eps), p)
    return out


def geometric_reidemeister(K: SimplicialComplex, f: SimplicialMap, v0: int, E: EmbeddingData,
                           eps=None, bound: int = 6) -> FixedPointReport:
    """``sum ind(x) [x]`` over the (vertex) fixed points."""
    results = fixed_point_indices(K, f, E, eps)
    if not results:
        return FixedPointReport([], {}, {}, TraceValue(None, {}))
    lifted = lift_self_map(K, f, v0)
    raw, words = _geometric_raw(lifted, results)
    classes = lifted.class_set(bound)
    (coeffs,) = classes.project(raw)
    return FixedPointReport(sorted(results), {x: r.index for x, r in results.items()}, words,
                            TraceValue(classes, coeffs), {x: r.samples for x, r in results.items()})


def _geometric_raw(lifted, results):
    from ..groups import FreeGroup
    pres = lifted.presentation
    F = FreeGroup(pres.rank, pres.names)
    raw = GroupRingElement.zero(F)
    words = {}
    for x, r in sorted(results.items()):
        # the constant path at x reads as the lift class of x
        w = lift_class(lifted.map, pres, x)
        words[x] = w
        raw = raw + GroupRingElement.basis(F, w, r.index)
    return raw, words


@dataclass
class GeomCheck:
    algebraic: TraceValue
    geometric: TraceValue
    indices: dict
    lefschetz: int

    @property
    def agree(self) -> bool:
        return self.algebraic.coefficients == self.geometric.coefficients

    @property
    def lefschetz_hopf(self) -> bool:
        return sum(self.indices.values()) == self.lefschetz


def geomcheck(K: SimplicialComplex, f: SimplicialMap, v0: int, E: EmbeddingData, eps=None,
              bound: int = 6) -> GeomCheck:
    """Both traces projected with one jointly-built class set."""
    results = fixed_point_indices(K, f, E, eps)
    lifted = lift_self_map(K, f, v0)
    classes = lifted.class_set(bound)
    geo_raw, _ = _geometric_raw(lifted, results)
    alg, geo = classes.project(raw_reidemeister_trace(lifted), geo_raw)
    return GeomCheck(TraceValue(classes, alg), TraceValue(classes, geo),
                     {x: r.index for x, r in results.items()}, lefschetz_chain(K, f))
