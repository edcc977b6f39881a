import pytest
from hypothesis import given, strategies as st

from fixtrace.errors import GroupContextError, MalformedInputError
from fixtrace.groupring import GroupRingElement, augmentation, gr_mul, parse_group_ring
from fixtrace.groups import FreeGroup, cyclic_group, symmetric_group
from strategies import finite_elements, group_ring_elements, words

C2, S3, F2 = cyclic_group(2), symmetric_group(3), FreeGroup(2)
g = ((0, 1),)


def el(group, terms):
    return GroupRingElement(group, terms)


def test_unit():
    x = el(S3, {1: 2, 4: -1})
    assert gr_mul(GroupRingElement.one(S3), x) == x
    assert gr_mul(x, GroupRingElement.one(S3)) == x


def test_difference_of_squares_in_free_group_ring():
    one = GroupRingElement.one(F2)
    G = GroupRingElement.basis(F2, g)
    # expand (1 + g)(1 - g) = 1 - g + g - g^2 by hand
    assert gr_mul(one + G, one - G) == el(F2, {(): 1, g + g: -1})


def test_square_in_c2():
    t = GroupRingElement.basis(C2, 1)
    one = GroupRingElement.one(C2)
    # brute force with the table: 1*1 + 1*t + t*1 + t*t, and t*t = e
    assert gr_mul(one + t, one + t) == el(C2, {0: 2, 1: 2})


def test_zero_coefficients_dropped_and_keys_canonical():
    x = el(F2, {((0, 1), (0, -1)): 3, (): -3, g: 0})
    assert x.is_zero() and x.terms == {}
    y = el(F2, [(((1, 1), (1, -1), (0, 1)), 2)])
    assert y.terms == {g: 2}


def test_augmentation_examples():
    G = GroupRingElement.basis(F2, g)
    assert augmentation(2 + 3 * G) == 5
    assert augmentation(GroupRingElement.zero(F2)) == 0
    assert augmentation(1 - G * G) == 0


def test_context_mismatch():
    with pytest.raises(GroupContextError):
        gr_mul(GroupRingElement.one(C2), GroupRingElement.one(S3))


contexts = [
    (C2, finite_elements(C2)),
    (S3, finite_elements(S3)),
    (F2, group_ring_elements(F2, words(max_size=4), max_terms=3)),
]


@pytest.mark.parametrize("group,strategy", contexts, ids=["C2", "S3", "F2"])
def test_ring_axioms(group, strategy):
    @given(strategy, strategy, strategy)
    def check(a, b, c):
        assert gr_mul(gr_mul(a, b), c) == gr_mul(a, gr_mul(b, c))
        assert gr_mul(a, b + c) == gr_mul(a, b) + gr_mul(a, c)
        assert gr_mul(a + b, c) == gr_mul(a, c) + gr_mul(b, c)
        assert augmentation(gr_mul(a, b)) == augmentation(a) * augmentation(b)
        assert a - a == GroupRingElement.zero(group)
        assert 0 not in a.terms.values()
    check()


@given(finite_elements(S3, coeff=9))
def test_format_parse_round_trip(x):
    assert parse_group_ring(x.format(), S3) == x


def test_parse_examples():
    assert parse_group_ring("2*p021 - p120 + 3", S3) == el(S3, {S3.element("p021"): 2,
                                                                S3.element("p120"): -1, 0: 3})
    assert parse_group_ring("-t", C2) == el(C2, {1: -1})
    assert parse_group_ring("0", C2).is_zero()
    assert parse_group_ring("t - t", C2).is_zero()
    for bad in ("", "t +", "2*z", "t t", "*t"):
        with pytest.raises(MalformedInputError):
            parse_group_ring(bad, C2)


@given(finite_elements(S3))
def test_conjugate_is_antiautomorphism(a):
    b = el(S3, {2: 1, 3: -2})
    assert gr_mul(a, b).conjugate() == gr_mul(b.conjugate(), a.conjugate())


@given(st.integers(-5, 5), finite_elements(C2))
def test_scalar_multiplication(k, x):
    assert x * k == x.scale(k) == k * x
    assert augmentation(x * k) == k * augmentation(x)
