import pytest
from hypothesis import given, settings, strategies as st

from bicat_helpers import brute_classes, manual_trace_classes, random_matrix, random_monomial, seeded
from groupfixtures import endomorphisms, small_groups
from fixtrace import bicat
from fixtrace.errors import DimensionError, LinearityError, NotIdempotentError, RingMismatchError
from fixtrace.groupring import GroupRingElement
from fixtrace.groups import cyclic_group, direct_product, symmetric_group
from fixtrace.grmatrix import GRMatrix

C2, C3, S3 = cyclic_group(2), cyclic_group(3), symmetric_group(3)
GROUPS = small_groups()


def elt(G, label, c=1):
    return GroupRingElement.basis(G, G.element(label), c)


def test_hh0_of_s3_has_rank_three():
    H = bicat.hh0(S3)
    assert H.rank == 3
    assert sorted(len(c) for c in H.classes) == [1, 2, 3]
    assert H.basis[0] == S3.identity


def test_diagonal_trace_over_c2():
    F = GRMatrix.diagonal(C2, [elt(C2, "t"), elt(C2, "t")])
    tr = bicat.shadow_trace(F)
    assert tr.coefficients == {C2.element("t"): 2}
    assert tr.augmentation() == 2
    assert tr.to_dict() == {"classes": [{"representative": "t", "coefficient": 2}], "twisted": False}


@pytest.mark.parametrize("name", sorted(GROUPS))
def test_hh0_rank_matches_brute_force(name):
    G = GROUPS[name]
    assert bicat.hh0(G).rank == brute_classes(G)
    for phi in endomorphisms(G, limit=40):
        assert bicat.hh0(G, phi).rank == brute_classes(G, phi), phi


def test_identity_twist_is_untwisted():
    H = bicat.hh0(S3, tuple(range(6)))
    assert H.twist is None and H.rank == 3


def test_trivial_twist_on_cyclic_group_leaves_single_class():
    G = cyclic_group(5)
    trivial = [G.identity] * 5
    assert bicat.hh0(G, trivial).rank == 1  # coker(1 - 0) = 0


@pytest.mark.parametrize("G", [C2, S3], ids=["C2", "S3"])
def test_trace_matches_manual_reduction(G):
    rng = seeded(1)
    for _ in range(30):
        F = random_matrix(rng, G, rng.randint(1, 3))
        assert bicat.shadow_trace(F).coefficients == manual_trace_classes(G, F)


@pytest.mark.parametrize("G", [C2, S3], ids=["C2", "S3"])
def test_cyclic_invariance_and_additivity(G):
    rng = seeded(2)
    for _ in range(100):
        n, m = rng.randint(1, 3), rng.randint(1, 3)
        F, K = random_matrix(rng, G, n, m), random_matrix(rng, G, m, n)
        assert bicat.shadow_trace(F @ K) == bicat.shadow_trace(K @ F)
        A, B = random_matrix(rng, G, n), random_matrix(rng, G, n)
        assert bicat.shadow_trace(A + B) == bicat.shadow_trace(A) + bicat.shadow_trace(B)


@pytest.mark.parametrize("G", [C2, S3], ids=["C2", "S3"])
def test_conjugation_invariance(G):
    rng = seeded(3)
    for _ in range(40):
        n = rng.randint(1, 3)
        F = random_matrix(rng, G, n)
        P, Q = random_monomial(rng, G, n)
        assert P @ Q == GRMatrix.identity(G, n)
        assert bicat.shadow_trace(P @ F @ Q) == bicat.shadow_trace(F)


@pytest.mark.parametrize("name", ["C4", "S3", "D4", "Q8"])
def test_twisted_cyclic_identity(name):
    G = GROUPS[name]
    rng = seeded(4)
    for phi in endomorphisms(G, limit=8):
        for _ in range(6):
            n, m = rng.randint(1, 3), rng.randint(1, 3)
            F, K = random_matrix(rng, G, n, m), random_matrix(rng, G, m, n)
            lhs = bicat.shadow_trace(bicat.twist_matrix(K, phi) @ F, phi)
            assert lhs == bicat.shadow_trace(F @ K, phi)
            assert lhs.coefficients == manual_trace_classes(G, F @ K, phi)


def test_twisted_conjugation_invariance():
    G = S3
    rng = seeded(5)
    for phi in endomorphisms(G):
        F = random_matrix(rng, G, 2)
        P, Q = random_monomial(rng, G, 2)
        assert bicat.shadow_trace(bicat.twist_matrix(P, phi) @ F @ Q, phi) == bicat.shadow_trace(F, phi)


def test_multiplicativity_over_product_group():
    rng = seeded(6)
    GH = direct_product(C2, C3)
    for _ in range(50):
        F = random_matrix(rng, C2, rng.randint(1, 3))
        K = random_matrix(rng, C3, rng.randint(1, 3))
        T = bicat.external_tensor(F, K)
        assert T.group == GH
        assert bicat.shadow_trace(T) == bicat.shadow_product(bicat.shadow_trace(F), bicat.shadow_trace(K))


@given(st.integers(1, 3), st.integers(1, 4), st.integers(0, 10 ** 6))
@settings(max_examples=30)
def test_morita_invariance(n, k, seed):
    rng = seeded(seed)
    F = random_matrix(rng, S3, n)
    slot = rng.randrange(k)
    assert bicat.shadow_trace(bicat.morita_embed(F, k, slot)) == bicat.shadow_trace(F)


@pytest.mark.parametrize("G", [C2, S3], ids=["C2", "S3"])
@pytest.mark.parametrize("pattern", [(1,), (0,), (1, 0), (1, 1), (0, 1, 1), (1, 1, 1, 0)])
def test_hattori_stallings_of_diagonal_idempotent_is_rank(G, pattern):
    e = GRMatrix.diagonal(G, list(pattern))
    hs = bicat.hattori_stallings(e)
    assert hs.coefficients == ({G.identity: sum(pattern)} if sum(pattern) else {})
    rng = seeded(len(pattern))
    P, Q = random_monomial(rng, G, len(pattern))
    assert bicat.hattori_stallings(P @ e @ Q) == hs


def test_hattori_stallings_of_nondiagonal_idempotent():
    x = elt(S3, S3.labels[1]) + elt(S3, S3.labels[4], -2)
    e = GRMatrix.from_rows(S3, [[1, x], [0, 0]])
    assert bicat.hattori_stallings(e).coefficients == {S3.identity: 1}


def test_hattori_stallings_rejects_non_idempotents():
    with pytest.raises(NotIdempotentError):
        bicat.hattori_stallings(GRMatrix.diagonal(C2, [2]))
    with pytest.raises(DimensionError):
        bicat.hattori_stallings(GRMatrix.zeros(C2, 1, 2))


def test_non_square_trace_is_rejected():
    with pytest.raises(DimensionError):
        bicat.shadow_trace(GRMatrix.zeros(C2, 2, 3))


def test_shadow_sums_need_matching_rings():
    with pytest.raises(RingMismatchError):
        bicat.shadow_trace(GRMatrix.identity(C2, 1)) + bicat.shadow_trace(GRMatrix.identity(C3, 1))


def test_tensor_of_free_cells_has_product_rank():
    M = bicat.free_cell(C2, 2)
    N = bicat.free_cell(C3, 3, left=C2)
    MN = bicat.tensor_cells(M, N)
    assert MN.rank == 6 and MN.right.group == C3


def test_tensor_trace_through_trivial_action_scales_by_augmentation():
    rng = seeded(7)
    M, N = bicat.free_cell(C2, 2), bicat.free_cell(C3, 3, left=C2)
    for _ in range(10):
        F, K = random_matrix(rng, C2, 2), random_matrix(rng, C3, 3)
        T = bicat.tensor_endos(bicat.endo(F, M), bicat.endo(K, N))
        eps = bicat.shadow_trace(F).augmentation()
        expected = {r: eps * c for r, c in bicat.shadow_trace(K).coefficients.items()}
        assert bicat.shadow_trace(T).coefficients == {r: c for r, c in expected.items() if c}


def test_unitors():
    rng = seeded(8)
    M = bicat.free_cell(S3, 2, left=C2)
    for _ in range(5):
        F = bicat.endo(random_matrix(rng, S3, 2), M)
        right = bicat.tensor_endos(F, bicat.endo(GRMatrix.identity(S3, 1), bicat.unit_cell(S3)))
        left = bicat.tensor_endos(bicat.endo(GRMatrix.identity(C2, 1), bicat.unit_cell(C2)), F)
        assert right.matrix == F.matrix and left.matrix == F.matrix


def test_permutation_cell_trace_of_equivariant_map():
    # C2 swapping two coordinates; [[x, y], [y, x]] commutes with the swap
    swap = bicat.permutation_cell(S3, C2, [(0, 1), (1, 0)])
    x, y = elt(S3, S3.labels[1]), elt(S3, S3.labels[3], 2)
    F = bicat.endo(GRMatrix.from_rows(S3, [[x, y], [y, x]]), swap)
    assert bicat.shadow_trace(F).augmentation() == 2


def test_non_equivariant_matrix_is_rejected():
    swap = bicat.permutation_cell(S3, C2, [(0, 1), (1, 0)])
    with pytest.raises(LinearityError):
        bicat.endo(GRMatrix.diagonal(S3, [1, 0]), swap)


def test_bad_actions_are_rejected():
    I = GRMatrix.identity(C3, 1)
    with pytest.raises(LinearityError):
        bicat.BimoduleCell(bicat.RingSpec(C2), bicat.RingSpec(C3), 1, (GRMatrix.diagonal(C3, [2]), I))
    with pytest.raises(LinearityError):
        bicat.BimoduleCell(bicat.RingSpec(C2), bicat.RingSpec(C3), 1, (I,))
    t = GRMatrix.from_rows(C3, [[elt(C3, "t")]])
    with pytest.raises(LinearityError):  # t has order 3, so it cannot represent an element of order 2
        bicat.BimoduleCell(bicat.RingSpec(C2), bicat.RingSpec(C3), 1, (I, t))


def test_mismatched_composite_is_rejected():
    with pytest.raises(RingMismatchError):
        bicat.tensor_cells(bicat.free_cell(C2, 1), bicat.free_cell(C3, 1, left=C3))


@pytest.mark.parametrize("G", [C2, S3], ids=["C2", "S3"])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_dual_pair_perturbations(G, n):
    cell = bicat.free_cell(G, n)
    coev, ev = bicat.canonical_dual_pair(cell)
    assert bicat.dual_pair_check(cell, coev, ev).ok
    bump = GroupRingElement.basis(G, G.order - 1)
    for which in ("coev", "ev"):
        for i in range(n):
            for j in range(n):
                X = coev if which == "coev" else ev
                Y = X.with_entry(i, j, X.entries[i][j] + bump)
                res = bicat.dual_pair_check(cell, Y, ev) if which == "coev" else bicat.dual_pair_check(cell, coev, Y)
                assert not res.ok
                assert res.failing and set(res.failing) <= {"first", "second"}


def test_dual_pair_shape_and_ring_errors():
    cell = bicat.free_cell(C2, 2)
    with pytest.raises(DimensionError):
        bicat.dual_pair_check(cell, GRMatrix.identity(C2, 3), GRMatrix.identity(C2, 2))
    with pytest.raises(RingMismatchError):
        bicat.dual_pair_check(cell, GRMatrix.identity(C3, 2), GRMatrix.identity(C2, 2))


def test_dual_pair_accepts_inverse_pairs():
    rng = seeded(9)
    cell = bicat.free_cell(S3, 3)
    P, Q = random_monomial(rng, S3, 3)
    assert bicat.dual_pair_check(cell, P, Q).ok
