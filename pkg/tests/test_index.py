from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from fixtrace import library
from fixtrace.errors import IndexComputationError, MalformedInputError, UnsupportedDimensionError
from fixtrace.invariants import (EmbeddingData, default_epsilon, fixed_point_index, fixed_point_indices,
                                 index_with_diagnostic, realized_map)

LINE = EmbeddingData.from_values(1, [(0,)])
PLANE = EmbeddingData.from_values(2, [(0, 0)])
ORIGIN1, ORIGIN2 = (0,), (0, 0)


def linear(A):
    return lambda v: (A[0][0] * v[0] + A[0][1] * v[1], A[1][0] * v[0] + A[1][1] * v[1])


def complex_power(k, conjugate=False):
    """Realized map whose displacement is z**k (or conj(z)**k)."""
    def f(v):
        z = complex_mul_pow((v[0], -v[1] if conjugate else v[1]), k)
        return (v[0] - z[0], v[1] - z[1])
    return f


def complex_mul_pow(z, k):
    out = (Fraction(1), Fraction(0))
    for _ in range(k):
        out = (out[0] * z[0] - out[1] * z[1], out[0] * z[1] + out[1] * z[0])
    return out


def test_expanding_line_map_has_index_minus_one():
    assert fixed_point_index(LINE, lambda v: (2 * v[0],), ORIGIN1, eps=Fraction(1, 2)) == -1


def test_contracting_line_map_has_index_plus_one():
    assert fixed_point_index(LINE, lambda v: (v[0] / 2,), ORIGIN1, eps=Fraction(1, 2)) == 1


def test_tangential_line_map_has_index_zero():
    assert fixed_point_index(LINE, lambda v: (v[0] - v[0] ** 2,), ORIGIN1, eps=Fraction(1, 4)) == 0


@pytest.mark.parametrize("A,expected", [
    ([[0, 0], [0, 0]], 1),            # constant
    ([[2, 0], [0, 2]], 1),            # source
    ([[2, 0], [0, 0]], -1),           # saddle
    ([[0, -1], [1, 0]], 1),           # rotation by a quarter turn
    ([[-1, 0], [0, -1]], 1),          # half turn
    ([[1, 1], [-1, 1]], 1),           # spiral
])
def test_linear_planar_indices(A, expected):
    assert fixed_point_index(PLANE, linear(A), ORIGIN2, eps=1) == expected


@given(st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=6), min_size=4, max_size=4))
def test_linear_index_is_sign_of_det(entries):
    A = [entries[:2], entries[2:]]
    det = (1 - A[0][0]) * (1 - A[1][1]) - A[0][1] * A[1][0]
    if det == 0:
        return
    assert fixed_point_index(PLANE, linear(A), ORIGIN2, eps=1) == (1 if det > 0 else -1)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_higher_degree_displacements(k):
    assert fixed_point_index(PLANE, complex_power(k), ORIGIN2, eps=Fraction(1, 2)) == k
    assert fixed_point_index(PLANE, complex_power(k, True), ORIGIN2, eps=Fraction(1, 2)) == -k


def test_index_of_identity_is_rejected():
    with pytest.raises(IndexComputationError):
        fixed_point_index(PLANE, lambda v: v, ORIGIN2, eps=1)
    with pytest.raises(IndexComputationError):
        fixed_point_index(LINE, lambda v: v, ORIGIN1, eps=1)


def test_three_dimensional_embedding_is_unsupported():
    with pytest.raises(UnsupportedDimensionError):
        EmbeddingData.from_values(3, [(0, 0, 0)])


def test_coordinate_fixed_point_needs_epsilon():
    with pytest.raises(ValueError):
        fixed_point_index(PLANE, linear([[0, 0], [0, 0]]), ORIGIN2)


def test_bad_embedding_data():
    with pytest.raises(MalformedInputError):
        EmbeddingData.from_values(2, [(0, 0)], "sideways")
    with pytest.raises(MalformedInputError):
        EmbeddingData.from_values(2, [(0, 0, 1)])


def test_default_epsilon_is_quarter_of_nearest_max_norm_distance():
    E = library.hexagon_embedding()
    assert default_epsilon(E, 0) == Fraction(1, 2)  # nearest neighbour (1, 2): max-norm 2
    assert default_epsilon(EmbeddingData.from_values(1, [(0,)]), 0) == Fraction(1, 4)


def test_hexagon_flip_vertices_have_index_one():
    K = library.hexagon()
    for retr in ("radial", "nearest-star"):
        res = fixed_point_indices(K, library.hexagon_flip(K), library.hexagon_embedding(retr))
        assert {x: r.index for x, r in res.items()} == {0: 1, 3: 1}
        assert all(r.samples >= 16 and r.min_step > 0 for r in res.values())


def test_coned_triangle_contraction_index():
    K = library.coned_triangle()
    res = fixed_point_indices(K, library.coned_triangle_contraction(K), library.coned_triangle_embedding())
    assert {x: r.index for x, r in res.items()} == {3: 1}


def test_realized_map_is_piecewise_linear():
    K = library.hexagon()
    E = library.hexagon_embedding()
    F = realized_map(K, library.hexagon_rotation(K), E)
    assert F((2, 0)) == (1, 2)
    mid = (Fraction(3, 2), Fraction(1))
    assert F(mid) == (0, 2)


def test_explicit_epsilon_matches_default():
    K = library.hexagon()
    E = library.hexagon_embedding()
    F = realized_map(K, library.hexagon_flip(K), E)
    from fixtrace.invariants import retraction
    p = retraction(K, E)
    for eps in (Fraction(1, 2), Fraction(1, 5), Fraction(1, 100)):
        assert index_with_diagnostic(E, F, 0, eps, p).index == 1
