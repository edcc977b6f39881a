import pytest

from embedded import admissible_maps, embedded_fixtures
from fixtrace import library
from fixtrace.errors import NonVertexFixedPointError
from fixtrace.invariants import (check_vertex_fixed_points, geomcheck, geometric_reidemeister,
                                 lefschetz_chain, reidemeister_trace)
from fixtrace.simplicial import SimplicialMap


def test_hexagon_flip_has_two_classes():
    K = library.hexagon()
    f = library.hexagon_flip(K)
    rep = geometric_reidemeister(K, f, 0, library.hexagon_embedding())
    assert rep.fixed_vertices == [0, 3]
    assert rep.indices == {0: 1, 3: 1}
    assert sorted(rep.trace.coefficients.values()) == [1, 1]
    assert rep.trace == reidemeister_trace(K, f, 0)
    assert rep.index_sum() == lefschetz_chain(K, f) == 2


def test_basepoint_fixed_point_reads_as_identity_class():
    K = library.hexagon()
    rep = geometric_reidemeister(K, library.hexagon_flip(K), 0, library.hexagon_embedding())
    assert rep.class_elements[0] == ()
    assert rep.class_elements[3] != ()


def test_rotation_has_empty_report():
    K = library.hexagon()
    rep = geometric_reidemeister(K, library.hexagon_rotation(K), 0, library.hexagon_embedding())
    assert rep.fixed_vertices == [] and rep.index_sum() == 0
    assert rep.trace.coefficients == {}
    assert lefschetz_chain(K, library.hexagon_rotation(K)) == 0


def test_coned_contraction_has_one_identity_class():
    K = library.coned_triangle()
    rep = geometric_reidemeister(K, library.coned_triangle_contraction(K), 3, library.coned_triangle_embedding())
    assert rep.indices == {3: 1}
    assert rep.class_elements == {3: ()}
    assert rep.trace.augmentation() == 1


def test_identity_map_is_rejected():
    K = library.hexagon()
    with pytest.raises(NonVertexFixedPointError):
        check_vertex_fixed_points(K, SimplicialMap.identity(K))


def test_even_path_reflection_fixes_an_edge_midpoint():
    K = library.path_complex(4)
    with pytest.raises(NonVertexFixedPointError):
        geomcheck(K, library.path_reflection(4), 0, library.path_embedding(4))


def test_edge_swap_in_triangle_is_rejected():
    K = library.solid_triangle()
    f = SimplicialMap(K, K, (1, 0, 2))
    with pytest.raises(NonVertexFixedPointError):
        check_vertex_fixed_points(K, f)


@pytest.mark.parametrize("row", embedded_fixtures(), ids=lambda r: r[0])
def test_named_fixtures_agree(row):
    _, K, f, v0, E = row
    g = geomcheck(K, f, v0, E)
    assert g.agree and g.lefschetz_hopf


@pytest.mark.parametrize("name,K,E", [
    ("hexagon", library.hexagon(), library.hexagon_embedding()),
    ("coned-triangle", library.coned_triangle(), library.coned_triangle_embedding()),
    ("path", library.path_complex(5), library.path_embedding(5)),
], ids=lambda x: x if isinstance(x, str) else "")
def test_exhaustive_self_maps_agree(name, K, E):
    count = 0
    for f in admissible_maps(K):
        g = geomcheck(K, f, f.fixed_vertices()[0], E)
        assert g.lefschetz_hopf, f.vertex_map
        assert g.agree, f.vertex_map
        count += 1
    assert count > 0


def test_geometric_trace_is_independent_of_basepoint_choice_in_augmentation():
    K = library.hexagon()
    f = library.hexagon_flip(K)
    E = library.hexagon_embedding()
    for v0 in (0, 3):
        g = geomcheck(K, f, v0, E)
        assert g.agree and g.geometric.augmentation() == 2
