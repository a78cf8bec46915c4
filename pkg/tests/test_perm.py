import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hsw import catalog, perm
from hsw.errors import (
    CapExceeded,
    DegreeMismatch,
    MalformedCycle,
    NotTransitive,
    ParseError,
    PointOutOfRange,
    RepeatedPoint,
)


def test_parse_four_cycle():
    p = perm.parse_permutation("(1 2 3 4)", 4)
    assert p.one_based() == [2, 3, 4, 1]


def test_parse_identity():
    assert perm.parse_permutation("()", 3).one_based() == [1, 2, 3]


def test_parse_transposition():
    assert perm.parse_permutation("(2 4)", 4).one_based() == [1, 4, 3, 2]


def test_parse_multi_cycle_and_commas():
    p = perm.parse_permutation("(1,2)(3 4)", 4)
    assert p.one_based() == [2, 1, 4, 3]


@pytest.mark.parametrize(
    "text,exc",
    [
        ("(1 2", MalformedCycle),
        ("(1 (2 3))", MalformedCycle),
        ("1 2 3", MalformedCycle),
        ("(1 5)", PointOutOfRange),
        ("(1 2)(2 3)", RepeatedPoint),
        ("(3)", MalformedCycle),
    ],
)
def test_parse_errors(text, exc):
    with pytest.raises(exc):
        perm.parse_permutation(text, 4)


def test_compose_right_action():
    # (i)(pq) = ((i)p)q; image table computed by direct chasing:
    # 1 ->p 2 ->q 4, 2 ->p 3 ->q 3, 3 ->p 4 ->q 2, 4 ->p 1 ->q 1
    p = perm.parse_permutation("(1 2 3 4)", 4)
    q = perm.parse_permutation("(2 4)", 4)
    expected = [q(p(i)) for i in range(4)]
    assert expected == [3, 2, 1, 0]
    assert perm.compose(p, q).one_based() == [4, 3, 2, 1]


def test_compose_identity_and_inverse():
    p = perm.parse_permutation("(1 3 2)(4 5)", 5)
    e = perm.identity(5)
    assert perm.compose(p, e) == p
    assert perm.compose(p, p.inverse()) == e


def test_compose_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        perm.compose(perm.identity(3), perm.identity(4))


def test_enumerate_d8(d8):
    elems = perm.enumerate_elements(d8, cap=100)
    assert len(elems) == 8
    assert d8.cached_order == 8


def test_enumerate_trivial_group():
    G = perm.PermGroup([perm.identity(5)])
    assert len(perm.enumerate_elements(G, cap=10)) == 1


def test_enumerate_agl15():
    G = catalog.agl1(5)
    assert len(perm.enumerate_elements(G, cap=100)) == 20


def test_enumerate_cap_exceeded():
    G = catalog.symmetric_natural(6)
    with pytest.raises(CapExceeded) as exc:
        perm.enumerate_elements(G, cap=100)
    assert exc.value.partial_count > 100


def test_enumeration_closed_under_composition(s3_natural):
    elems = perm.enumerate_elements(s3_natural, cap=10)
    pool = set(elems)
    for x in elems:
        for y in elems:
            assert perm.compose(x, y) in pool


def test_orbits_d8(d8):
    assert perm.orbits(d8) == [[0, 1, 2, 3]]
    assert perm.is_transitive(d8)


def test_orbits_identity_group():
    G = perm.PermGroup([perm.identity(3)])
    assert perm.orbits(G) == [[0], [1], [2]]
    assert not perm.is_transitive(G)


def test_orbits_partial():
    G = perm.PermGroup([perm.parse_permutation("(1 2)", 4)])
    assert perm.orbits(G) == [[0, 1], [2], [3]]


def test_primitivity():
    assert not perm.is_primitive(catalog.dihedral(4))
    assert perm.is_primitive(catalog.symmetric_natural(4))
    assert not perm.is_primitive(catalog.cyclic(4))
    with pytest.raises(NotTransitive):
        perm.is_primitive(perm.PermGroup([perm.identity(3)]))


def test_regular_subgroup_checks(d8, s3_natural):
    c4 = perm.parse_permutation("(1 2 3 4)", 4)
    res = perm.is_regular_subgroup(d8, [c4])
    assert res and res.membership_verified
    assert perm.is_regular_subgroup(s3_natural, [perm.parse_permutation("(1 2 3)", 3)])
    assert not perm.is_regular_subgroup(s3_natural, [perm.parse_permutation("(1 2)", 3)])
    # a non-member is rejected when the ambient group is enumerable
    v4 = perm.PermGroup([perm.parse_permutation("(1 2)(3 4)", 4),
                         perm.parse_permutation("(1 3)(2 4)", 4)])
    alien = perm.parse_permutation("(1 2)", 4)
    assert not perm.is_regular_subgroup(v4, [alien])


def test_find_cyclic_regular(d8, s3_natural):
    c = perm.find_cyclic_regular(d8)
    assert c is not None and len(c.cycles()) == 1 and len(c.cycles()[0]) == 4
    c3 = perm.find_cyclic_regular(s3_natural)
    assert c3 is not None and len(c3.cycles()[0]) == 3
    klein = perm.PermGroup([perm.parse_permutation("(1 2)(3 4)", 4),
                            perm.parse_permutation("(1 3)(2 4)", 4)])
    assert perm.find_cyclic_regular(klein) is None
    # returned cycle always generates a regular subgroup
    assert perm.is_regular_subgroup(d8, [c])


def test_group_json_roundtrip(d8):
    data = perm.group_to_json(d8)
    assert data == {"degree": 4, "generators": [[2, 3, 4, 1], [1, 4, 3, 2]]}
    G = perm.group_from_json(data)
    assert G.generators == d8.generators


def test_group_json_rejects_repeats():
    with pytest.raises(ParseError):
        perm.group_from_json({"degree": 4, "generators": [[2, 2, 3, 4]]})


@st.composite
def permutations(draw, degree):
    images = draw(st.permutations(range(degree)))
    return perm.Permutation(images)


@given(permutations(degree=7))
def test_inverse_property(p):
    assert perm.compose(p, p.inverse()).is_identity()
    assert perm.compose(p.inverse(), p).is_identity()


@given(permutations(degree=6), permutations(degree=6), st.integers(0, 5))
def test_right_action_is_an_action(p, q, i):
    assert perm.compose(p, q)(i) == q(p(i))


@given(st.lists(permutations(degree=6), min_size=1, max_size=2))
@settings(max_examples=40, deadline=None)
def test_orbit_cells_are_stable(gens):
    G = perm.PermGroup(gens)
    for cell in perm.orbits(G):
        cell_set = set(cell)
        for g in G.generators:
            assert {g(a) for a in cell} == cell_set


def test_regular_check_membership_unverified_flag():
    fresh = perm.PermGroup([perm.parse_permutation("(1 2 3 4)", 4),
                            perm.parse_permutation("(2 4)", 4)])
    c4 = perm.parse_permutation("(1 2 3 4)", 4)
    # ambient closure exceeds the cap, subgroup closure does not
    res = perm.is_regular_subgroup(fresh, [c4], cap=4)
    assert res.is_regular and not res.membership_verified


def test_regular_check_subgroup_cap_exceeded(d8):
    with pytest.raises(CapExceeded):
        perm.is_regular_subgroup(d8, list(d8.generators), cap=4)
