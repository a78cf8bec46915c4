import numpy as np
import pytest

from hsw import algebra as alg
from hsw import catalog, coherent, perm, schur
from hsw.errors import (
    GroupTooLarge,
    IncompatibleInputs,
    InvalidSchurPartition,
    NotAutomorphism,
    NotCyclic,
    NotRegular,
)
from tests.conftest import powers_of


def s3_table():
    G = catalog.symmetric_natural(3)
    elems = sorted(G.elements(), key=lambda g: g.images)
    idx = {g.images: i for i, g in enumerate(elems)}
    mul = [[idx[perm.compose(a, b).images] for b in elems] for a in elems]
    return schur.FiniteGroupTable(np.array(mul)), elems


# ------------------------------------------------------------- validate

def test_trivial_partition_c6():
    ring = schur.validate(schur.SchurPartition(schur.cyclic_table(6), [[0], range(1, 6)]))
    assert ring.rank == 2
    # X^2 = 5 e + 4 X
    assert ring.tensor[1, 1].tolist() == [5, 4]


def test_singleton_partition_is_group_algebra():
    C5 = schur.cyclic_table(5)
    ring = schur.validate(schur.SchurPartition(C5, [[i] for i in range(5)]))
    assert ring.rank == 5
    assert ring.tensor[2, 4, 1] == 1  # 2 + 4 = 1 mod 5


def test_invalid_partition_c5_carries_witness():
    bad = schur.SchurPartition(schur.cyclic_table(5), [[0], [1, 4], [2], [3]])
    # {2}^{-1} = {3}: inverse-closed, but 1+1 = 2 vs 4+4 = 3 splits a product
    with pytest.raises(InvalidSchurPartition) as exc:
        schur.validate(bad)
    assert exc.value.witness is not None


def test_invalid_partition_inverse_closure():
    bad = schur.SchurPartition(schur.cyclic_table(5), [[0], [1], [2, 3, 4]])
    with pytest.raises(InvalidSchurPartition) as exc:
        schur.validate(bad)
    assert "inverse-closure" in str(exc.value)


# ------------------------------------------------- regular-action transfer

def test_from_regular_action_d8(d8):
    c = perm.find_cyclic_regular(d8)
    part = schur.from_regular_action(d8, powers_of(c, 4))
    canon = schur.canonicalize_cyclic(part)
    assert canon.cells == ((0,), (1, 3), (2,))


def test_from_regular_action_regular_group_gives_group_algebra():
    G = catalog.cyclic(5)
    part = schur.from_regular_action(G, powers_of(G.generators[0], 5))
    assert all(len(c) == 1 for c in part.cells)


def test_from_regular_action_s3(s3_natural):
    c = perm.find_cyclic_regular(s3_natural)
    part = schur.from_regular_action(s3_natural, powers_of(c, 3))
    canon = schur.canonicalize_cyclic(part)
    assert canon.cells == ((0,), (1, 2))


def test_from_regular_action_rejects_nonregular(d8):
    with pytest.raises(NotRegular):
        schur.from_regular_action(d8, [perm.identity(4)] * 4)


# ----------------------------------------------------------- constructions

def test_cyclotomic_c5():
    part = schur.cyclotomic(schur.cyclic_table(5), schur.unit_multiplier_auts(5, [2]))
    assert sorted(len(c) for c in part.cells) == [1, 4]


def test_cyclotomic_trivial_group_gives_group_algebra():
    part = schur.cyclotomic(schur.cyclic_table(7), schur.unit_multiplier_auts(7, [1]))
    assert part.rank == 7


def test_cyclotomic_c6_inversion():
    part = schur.cyclotomic(schur.cyclic_table(6), schur.unit_multiplier_auts(6, [5]))
    assert part.cells == ((0,), (1, 5), (2, 4), (3,))


def test_cyclotomic_rejects_non_automorphism():
    C6 = schur.cyclic_table(6)
    with pytest.raises(NotAutomorphism):
        schur.cyclotomic(C6, [[0, 2, 1, 3, 4, 5]])  # swapping 1,2 breaks addition


def test_tensor_trivial_by_trivial():
    t2 = schur.SchurPartition(schur.cyclic_table(2), [[0], [1]])
    t3 = schur.SchurPartition(schur.cyclic_table(3), [[0], [1, 2]])
    part = schur.tensor(t2, t3)
    assert part.rank == 4


def test_tensor_of_group_algebras():
    g2 = schur.SchurPartition(schur.cyclic_table(2), [[0], [1]])
    g3 = schur.SchurPartition(schur.cyclic_table(3), [[0], [1], [2]])
    part = schur.tensor(g2, g3)
    assert all(len(c) == 1 for c in part.cells) and part.group.order == 6


def test_tensor_sizes_1_1_4_4():
    cyc = schur.cyclotomic(schur.cyclic_table(5), schur.unit_multiplier_auts(5, [2]))
    t2 = schur.SchurPartition(schur.cyclic_table(2), [[0], [1]])
    part = schur.tensor(cyc, t2)
    assert sorted(len(c) for c in part.cells) == [1, 1, 4, 4]


def test_wedge_c6_over_c3():
    G = schur.cyclic_table(6)
    H = [0, 2, 4]
    Htab, _ = schur.subgroup_table(G, H)
    A_H = schur.SchurPartition(Htab, [[0], [1], [2]])
    Qtab, _ = schur.quotient_table(G, H)
    A_Q = schur.SchurPartition(Qtab, [[0], [1]])
    part = schur.wedge(G, H, H, A_H, A_Q)
    assert part.cells == ((0,), (1, 3, 5), (2,), (4,))


def test_wedge_c4():
    G = schur.cyclic_table(4)
    H = [0, 2]
    Htab, _ = schur.subgroup_table(G, H)
    Qtab, _ = schur.quotient_table(G, H)
    both = schur.SchurPartition(Htab, [[0], [1]])
    quo = schur.SchurPartition(Qtab, [[0], [1]])
    part = schur.wedge(G, H, H, both, quo)
    assert part.cells == ((0,), (1, 3), (2,))


def test_wedge_rejects_full_h():
    G = schur.cyclic_table(6)
    Htab, _ = schur.subgroup_table(G, range(6))
    A_H = schur.SchurPartition(Htab, [[i] for i in range(6)])
    Qtab, _ = schur.quotient_table(G, [0, 2, 4])
    A_Q = schur.SchurPartition(Qtab, [[0], [1]])
    with pytest.raises(IncompatibleInputs) as exc:
        schur.wedge(G, range(6), [0, 2, 4], A_H, A_Q)
    assert "proper" in exc.value.hypothesis


def test_wedge_rejects_trivial_u():
    G = schur.cyclic_table(6)
    H = [0, 2, 4]
    Htab, _ = schur.subgroup_table(G, H)
    A_H = schur.SchurPartition(Htab, [[0], [1], [2]])
    Qtab, _ = schur.quotient_table(G, [0])
    A_Q = schur.SchurPartition(Qtab, [[i] for i in range(6)])
    with pytest.raises(IncompatibleInputs) as exc:
        schur.wedge(G, H, [0], A_H, A_Q)
    assert "nontrivial" in exc.value.hypothesis


def test_wedge_rejects_non_normal_u():
    T, elems = s3_table()
    # a 2-element subgroup of S3 is not normal
    twos = [i for i, g in enumerate(elems) if not g.is_identity()
            and perm.compose(g, g).is_identity()]
    U = sorted([0] + twos[:1])
    Utab, _ = schur.subgroup_table(T, U)
    A_H = schur.SchurPartition(Utab, [[0], [1]])
    with pytest.raises(IncompatibleInputs) as exc:
        schur.wedge(T, U, U, A_H, A_H)
    assert "normal" in exc.value.hypothesis


def test_wedge_with_u_properly_inside_h():
    G = schur.cyclic_table(8)
    H, U = [0, 2, 4, 6], [0, 4]
    Htab, _ = schur.subgroup_table(G, H)
    A_H = schur.SchurPartition(Htab, [[i] for i in range(4)])
    Qtab, _ = schur.quotient_table(G, U)
    A_Q = schur.SchurPartition(Qtab, [[0], [2], [1, 3]])
    part = schur.wedge(G, H, U, A_H, A_Q)
    assert part.cells == ((0,), (1, 3, 5, 7), (2,), (4,), (6,))


def test_constructions_all_validate():
    # validate() runs inside every construction; spot-check it really did
    cyc = schur.cyclotomic(schur.cyclic_table(10), schur.unit_multiplier_auts(10, [3]))
    assert schur.validate(cyc).rank == len(cyc.cells)


# ------------------------------------------------------------ enumeration

def test_enumerate_c2():
    assert len(schur.enumerate_all(schur.cyclic_table(2))) == 1


def test_enumerate_c4_contains_expected():
    keys = {r.partition.key() for r in schur.enumerate_all(schur.cyclic_table(4))}
    assert ((0,), (1,), (2,), (3,)) in keys
    assert ((0,), (1, 2, 3)) in keys
    assert ((0,), (1, 3), (2,)) in keys
    assert len(keys) == 3


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6, 7, 8, 9, 10])
def test_enumerators_agree(n):
    fast = schur.enumerate_all(schur.cyclic_table(n))
    slow = schur.enumerate_all_naive(schur.cyclic_table(n))
    assert [r.partition.key() for r in fast] == [r.partition.key() for r in slow]


def test_enumerate_noncyclic_group():
    T, _ = s3_table()
    rings = schur.enumerate_all(T)
    # S3: group algebra, class algebra {e},{transpositions},{rotations}, trivial,
    # and the normal-subgroup wedge {e},{rotations},{transpositions} coincides
    # with the class algebra; at least these three distinct ones exist
    assert len(rings) >= 3


def test_enumerate_caps():
    with pytest.raises(GroupTooLarge):
        schur.enumerate_all(schur.cyclic_table(17))
    with pytest.raises(GroupTooLarge):
        schur.enumerate_all_naive(schur.cyclic_table(11))


# ----------------------------------------------------------- classification

def test_classify_trivial():
    C6 = schur.cyclic_table(6)
    assert schur.classify_cyclic(schur.SchurPartition(C6, [[0], range(1, 6)])) == "trivial"
    assert schur.classify_cyclic(schur.SchurPartition(C6, [[i] for i in range(6)])) == "trivial"


def test_classify_two_cell_cyclotomic_is_trivial_by_tiebreak():
    # the unit-group orbits of C5 give {e},{rest}, which label (i) claims first
    part = schur.cyclotomic(schur.cyclic_table(5), schur.unit_multiplier_auts(5, [2]))
    assert schur.classify_cyclic(part) == "trivial"


def test_classify_cyclotomic():
    part = schur.cyclotomic(schur.cyclic_table(8), schur.unit_multiplier_auts(8, [3]))
    assert part.cells == ((0,), (1, 3), (2, 6), (4,), (5, 7))
    assert schur.classify_cyclic(part) == "cyclotomic"


def test_classify_tensor_like_c6_matches_cyclotomic_first():
    part = schur.SchurPartition(schur.cyclic_table(6), [[0], [3], [2, 4], [1, 5]])
    schur.validate(part)
    assert schur.classify_cyclic(part) == "cyclotomic"


def test_classify_wedge():
    part = schur.SchurPartition(schur.cyclic_table(8), [[0], [4], [1, 5], [2, 6], [3, 7]])
    schur.validate(part)
    assert schur.classify_cyclic(part) == "wedge"


def test_classify_tensor():
    # (non-cyclotomic wedge ring over C8) tensor (trivial over C3), on C24
    c8_part = schur.SchurPartition(schur.cyclic_table(8), [[0], [4], [1, 5], [2, 6], [3, 7]])
    c3_triv = schur.SchurPartition(schur.cyclic_table(3), [[0], [1, 2]])
    prod = schur.tensor(c8_part, c3_triv)
    canon = schur.canonicalize_cyclic(prod)
    schur.validate(canon)
    assert schur.classify_cyclic(canon) == "tensor"


def test_classification_never_unclassified():
    for n in (4, 6, 8, 9, 10, 12):
        for ring in schur.enumerate_all(schur.cyclic_table(n)):
            assert schur.classify_cyclic(ring.partition) != "unclassified", (
                n, ring.partition.cells)


def test_classify_requires_canonical_table():
    T, _ = s3_table()
    with pytest.raises(NotCyclic):
        schur.classify_cyclic(schur.SchurPartition(T, [[i] for i in range(6)]))


# ------------------------------------------------------------- to_algebra

def test_group_algebra_partition_symmetric():
    ring = schur.validate(schur.SchurPartition(schur.cyclic_table(4), [[i] for i in range(4)]))
    A = ring.to_algebra(2)
    assert alg.is_symmetric(A).exists and alg.is_frobenius(A).exists


def test_d8_partition_matches_coherent_verdict(d8):
    c = perm.find_cyclic_regular(d8)
    part = schur.from_regular_action(d8, powers_of(c, 4))
    A = schur.validate(part).to_algebra(2)
    B = coherent.to_algebra(coherent.orbitals(d8), 2)
    assert alg.is_symmetric(A).exists == alg.is_symmetric(B).exists == False


def test_trivial_c6_symmetric_via_brute_force():
    ring = schur.validate(schur.SchurPartition(schur.cyclic_table(6), [[0], range(1, 6)]))
    A = ring.to_algebra(2)
    assert alg.brute_force_form_search(A, True).found
    assert alg.is_symmetric(A).exists


def test_inverse_closure_is_a_cell_permutation():
    for part in (
        schur.cyclotomic(schur.cyclic_table(10), schur.unit_multiplier_auts(10, [3])),
        schur.SchurPartition(schur.cyclic_table(8), [[0], [4], [1, 5], [2, 6], [3, 7]]),
    ):
        G = part.group
        cellset = set(part.cells)
        for cell in part.cells:
            assert tuple(sorted(int(G.inv[g]) for g in cell)) in cellset


def test_partition_json_roundtrip():
    part = schur.SchurPartition(schur.cyclic_table(6), [[0], [3], [1, 2, 4, 5]])
    data = part.to_json()
    back = schur.partition_from_json(data)
    assert back.cells == part.cells
    assert back.group.is_cyclic_canonical()


# ------------------------------------------------- true wedge behavior
# The wedge of two symmetric rings with p dividing |H| need NOT be
# symmetric; these regressions pin the actual landscape.

def test_wreath_type_ring_over_c6_is_the_flagship_nonsymmetric_algebra():
    part = schur.SchurPartition(schur.cyclic_table(6), [[0], [3], [1, 2, 4, 5]])
    ring = schur.validate(part)
    A = ring.to_algebra(2)
    # explicit isomorphism onto K[x,y]/(x^2, xy, y^2): cells sort as
    # ({0}, {1,2,4,5}, {3}); take u, the big cell sum, and u + {3}-sum
    S = np.array([[1, 0, 0], [0, 1, 0], [1, 0, 1]], dtype=np.int64)
    B = alg.change_of_basis(A, S)
    kxy = np.zeros((3, 3, 3), dtype=np.int64)
    kxy[0] = np.eye(3, dtype=np.int64)
    kxy[:, 0] = np.eye(3, dtype=np.int64)
    assert np.array_equal(B.constants, kxy)
    assert not alg.is_symmetric(A).exists
    assert not alg.brute_force_form_search(A, True).found


C6_EXPECTED_FAILURES = {
    ((0,), (1, 2, 4, 5), (3,)): (2,),
    ((0,), (1, 3, 5), (2,), (4,)): (3,),
    ((0,), (1, 3, 5), (2, 4)): (3,),
    ((0,), (1, 4), (2, 5), (3,)): (2,),
}

C10_EXPECTED_FAILURES = {
    ((0,), (1, 2, 3, 4, 6, 7, 8, 9), (5,)): (2,),
    ((0,), (1, 3, 5, 7, 9), (2,), (4,), (6,), (8,)): (5,),
    ((0,), (1, 3, 5, 7, 9), (2, 4, 6, 8)): (5,),
    ((0,), (1, 3, 5, 7, 9), (2, 8), (4, 6)): (5,),
    ((0,), (1, 4, 6, 9), (2, 3, 7, 8), (5,)): (2,),
    ((0,), (1, 6), (2, 7), (3, 8), (4, 9), (5,)): (2,),
}


@pytest.mark.parametrize("n,expected", [(6, C6_EXPECTED_FAILURES), (10, C10_EXPECTED_FAILURES)])
def test_symmetry_landscape_over_small_cyclic_groups(n, expected):
    seen = {}
    for ring in schur.enumerate_all(schur.cyclic_table(n)):
        fails = tuple(p for p in (2, 3, 5, 7)
                      if not alg.decide(ring.to_algebra(p), "symmetric", seed=0).exists)
        if fails:
            seen[ring.partition.key()] = fails
            for p in fails:
                # the independent exhaustive search agrees with the pencil
                A = ring.to_algebra(p)
                if p ** alg.pencil_slices(A, "symmetric").shape[0] <= 10 ** 6:
                    assert not alg.brute_force_form_search(A, True).found
    assert seen == expected


def test_octahedron_group_transfers_to_nonsymmetric_ring(octahedron):
    # a transitive overgroup of the regular C6 whose point stabilizer
    # cuts out the {0},{3},{rest} partition; its algebra at p=2 matches
    assert octahedron.order() == 48
    c = perm.find_cyclic_regular(octahedron)
    part = schur.from_regular_action(octahedron, powers_of(c, 6))
    canon = schur.canonicalize_cyclic(part)
    assert canon.cells == ((0,), (1, 2, 4, 5), (3,))
    A = coherent.to_algebra(coherent.orbitals(octahedron), 2)
    assert not alg.decide(A, "symmetric", seed=0).exists
