import itertools

import pytest

from hsw import algebra as alg
from hsw import catalog, coherent, criteria, perm
from hsw.errors import EqualSubdegrees, NotRankThree, NotTransitive
from tests.conftest import powers_of


def test_rank3_d8(d8):
    data = criteria.rank3_lambda(coherent.orbitals(d8))
    assert (data.a, data.b, data.lam) == (1, 2, 0)
    assert data.gcd_tuple() == (4, 2, 0, 2)


def test_rank3_pairs_action_lambda_oracle():
    # independent oracle: D1 is the disjointness relation on 2-subsets of
    # {1..5}; its parameter is the number of 2-subsets disjoint from both
    # members of an intersecting pair of 2-subsets
    pairs = [frozenset(c) for c in itertools.combinations(range(5), 2)]
    alpha, beta = frozenset({0, 1}), frozenset({0, 2})
    lam = sum(1 for g in pairs if not (g & alpha) and not (g & beta))
    data = criteria.rank3_lambda(coherent.orbitals(catalog.sym_on_pairs(5)))
    assert (data.a, data.b) == (3, 6)
    assert data.lam == lam == 1
    assert data.gcd_tuple() == (10, 18, 1, 4)


def test_rank3_pairs4():
    data = criteria.rank3_lambda(coherent.orbitals(catalog.sym_on_pairs(4)))
    assert (data.a, data.b, data.lam) == (1, 4, 0)


def test_rank3_octahedron(octahedron):
    data = criteria.rank3_lambda(coherent.orbitals(octahedron))
    assert (data.a, data.b, data.lam) == (1, 4, 0)
    assert criteria.rank3_s_test(data).gcd_value == 2


def test_rank3_equal_subdegrees():
    with pytest.raises(EqualSubdegrees):
        criteria.rank3_lambda(coherent.orbitals(catalog.dihedral(5)))
    with pytest.raises(EqualSubdegrees):
        criteria.rank3_lambda(coherent.orbitals(catalog.sym_on_pairs(7)))


def test_rank3_wrong_rank():
    with pytest.raises(NotRankThree):
        criteria.rank3_lambda(coherent.orbitals(catalog.symmetric_natural(5)))


def test_rank3_s_test_arithmetic():
    assert criteria.rank3_s_test(criteria.Rank3Data(1, 2, 0, 4)).gcd_value == 2
    # hypothetical data, not tied to any group
    hypothetical = criteria.Rank3Data(3, 6, 0, 10)
    v = criteria.rank3_s_test(hypothetical)
    assert v.gcd_value == 2 and not v.is_s_permutation
    v2 = criteria.rank3_s_test(criteria.Rank3Data(1, 3, 0, 5))
    assert v2.gcd_value == 1 and v2.is_s_permutation


def test_p_s_report_d8(d8):
    cfg = coherent.orbitals(d8)
    r3 = criteria.p_s_report(d8, cfg, 3)
    assert r3.conditions["i"] is True and r3.direct.exists and r3.consistent
    r2 = criteria.p_s_report(d8, cfg, 2)
    assert not r2.any_fired and not r2.direct.exists and r2.consistent


def test_p_s_report_agl15_condition_ii():
    G = catalog.agl1(5)
    rep = criteria.p_s_report(G, coherent.orbitals(G), 2)
    assert rep.conditions["ii"] is True
    assert rep.direct.exists


def test_p_s_report_condition_iii_paths(d8):
    cfg = coherent.orbitals(d8)
    c4 = powers_of(perm.find_cyclic_regular(d8), 4)
    with_candidate = criteria.p_s_report(d8, cfg, 3, candidate_regular=c4[1:2])
    assert with_candidate.conditions["iii"] is True
    at_two = criteria.p_s_report(d8, cfg, 2, candidate_regular=c4[1:2])
    assert at_two.conditions["iii"] is False  # C4 is not a 2'-group
    without = criteria.p_s_report(d8, cfg, 3)
    assert without.conditions["iii"] is None


def test_p_s_report_condition_iv_large_prime(d8):
    rep = criteria.p_s_report(d8, coherent.orbitals(d8), 5)
    assert rep.conditions["iv"] is True  # 4 < 10


def test_p_s_report_not_transitive():
    G = perm.PermGroup([perm.identity(3)])
    with pytest.raises(NotTransitive):
        criteria.p_s_report(G, coherent.orbitals(G), 2)


def test_s_report_d8(d8):
    rep = criteria.s_report(d8, primes=[2, 3])
    assert [r.p for r in rep.per_prime] == [2, 3]
    assert not rep.s_verdict
    assert rep.rank3 is not None and rep.rank3.gcd_value == 2
    data = rep.to_json()
    assert data["prime_bound"] == 4 and data["s_verdict"] is False


def test_s_report_s5():
    rep = criteria.s_report(catalog.symmetric_natural(5), primes=[2, 3, 5])
    assert rep.s_verdict
    assert all(r.direct.exists for r in rep.per_prime)


def test_s_report_pairs5_symmetric_everywhere():
    rep = criteria.s_report(catalog.sym_on_pairs(5))
    assert rep.s_verdict
    assert rep.rank3 is not None and rep.rank3.is_s_permutation


def test_s_report_octahedron_fails_at_two(octahedron):
    rep = criteria.s_report(octahedron)
    per = {r.p: r.direct.exists for r in rep.per_prime}
    assert per[2] is False and per[3] is True and per[5] is True
    assert not rep.s_verdict
    assert rep.rank3 is not None and not rep.rank3.is_s_permutation


def test_primes_up_to():
    assert criteria.primes_up_to(10) == [2, 3, 5, 7]
    assert criteria.primes_up_to(1) == []
