import pytest

from fixtrace.errors import NotHomomorphismError
from fixtrace.presentation import Presentation, SimplifiedGroup
from fixtrace.words import exponent_sums, multiply, substitute

a, A, b, B, c = (0, 1), (0, -1), (1, 1), (1, -1), (2, 1)


def test_free_and_abelian_tiers():
    assert SimplifiedGroup(Presentation(2, ())).tier == "free"
    assert SimplifiedGroup(Presentation(1, ())).tier == "abelian"
    assert SimplifiedGroup(Presentation(0, ())).tier == "abelian"
    assert SimplifiedGroup(Presentation(2, ((a, b, A, B),))).tier == "abelian"
    assert SimplifiedGroup(Presentation(2, ((a, a, b, b),))).tier == "presented"


def test_tietze_eliminates_singletons():
    # <a, b, c | c a^-1 b^-1> is free on a, b
    G = SimplifiedGroup(Presentation(3, ((c, A, B),)))
    assert G.rank == 2 and G.tier == "free"
    assert G.normal_form((c,)) == G.normal_form((b, a))


def test_abelian_normal_forms():
    G = SimplifiedGroup(Presentation(2, ((a, b, A, B), (a, a))))
    assert G.tier == "abelian"
    assert G.normal_form((b, a)) == G.normal_form((a, b))
    assert G.normal_form((a, a, b)) == G.normal_form((b,))
    assert G.is_trivial((a, a))
    assert not G.is_trivial((a,))
    for key in [G.normal_form(w) for w in [(), (a,), (b, b, b), (A, B)]]:
        assert G.normal_form(G.element_from_key(key), simplified=True) == key


def test_element_from_key_round_trip_cyclic():
    G = SimplifiedGroup(Presentation(1, ((a,) * 5,)))
    keys = {G.normal_form((a,) * k) for k in range(10)}
    assert len(keys) == 5


def test_homomorphism_check():
    G = SimplifiedGroup(Presentation(1, ((a, a, a),)))
    G.check_homomorphism([(a, a)])
    Z = SimplifiedGroup(Presentation(2, ((a, b, A, B),)))
    Z.check_homomorphism([(b,), (a,)])
    T = SimplifiedGroup(Presentation(2, ((a, b, A, B), (a, a))))
    with pytest.raises(NotHomomorphismError):
        T.check_homomorphism([(b,), (a,)])  # a has order 2 but b does not


def test_simplification_preserves_abelianization():
    from fixtrace.smith import cokernel_invariants
    pres = Presentation(3, ((a, b, A, B), (c, a, a), (b, c, B, (2, -1))))
    G = SimplifiedGroup(pres)
    before = cokernel_invariants(pres.abelianization_matrix())
    after = cokernel_invariants(Presentation(G.rank, G.relators).abelianization_matrix())
    assert before == after
    for i in range(3):
        # the substitution sends each original relator to a consequence of the simplified ones
        img = substitute(pres.relators[i], G.to_simplified)
        assert G.is_trivial(img, simplified=True) in (True, None)
