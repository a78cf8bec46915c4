import pytest

from hsw import catalog, coherent, perm
from hsw.errors import BadParameter


def test_dihedral4_is_the_pinned_pair():
    G = catalog.dihedral(4)
    assert [g.cycle_string() for g in G.generators] == ["(1 2 3 4)", "(2 4)"]
    assert G.order() == 8


def test_dihedral_orders():
    for n in (3, 5, 6, 9):
        assert catalog.dihedral(n).order() == 2 * n


def test_cyclic_regular_rank_equals_order():
    G = catalog.cyclic(6)
    assert G.order() == 6
    assert coherent.orbitals(G).rank == 6


def test_symmetric_natural_two_transitive():
    cfg = coherent.orbitals(catalog.symmetric_natural(5))
    assert cfg.rank == 2
    assert catalog.symmetric_natural(5).order() == 120


def test_alternating_orders():
    assert catalog.alternating_natural(4).order() == 12
    assert catalog.alternating_natural(5).order() == 60
    assert catalog.alternating_natural(6).order() == 360


def test_sym_on_pairs():
    cfg = coherent.orbitals(catalog.sym_on_pairs(5))
    assert cfg.degree == 10 and cfg.rank == 3
    assert cfg.subdegrees() == [1, 3, 6]
    assert catalog.sym_on_pairs(4).degree == 6
    assert coherent.orbitals(catalog.builtin("sympairs:7")).rank == 3


def test_agl1():
    G = catalog.agl1(5)
    assert G.degree == 5 and G.order() == 20
    assert coherent.orbitals(G).subdegrees() == [1, 4]
    assert catalog.agl1(4).order() == 12
    assert catalog.agl1(2).order() == 2
    assert catalog.agl1(8).order() == 56
    assert catalog.agl1(9).order() == 72


def test_gl3_flags_2():
    G = catalog.gl3_flags(2)
    assert G.degree == 21
    assert G.order() == 168
    cfg = coherent.orbitals(G)
    assert cfg.rank == 6
    assert sorted(cfg.valencies) == [1, 2, 2, 4, 4, 8]


def test_gl3_flags_3():
    G = catalog.gl3_flags(3)
    assert G.degree == 52
    cfg = coherent.orbitals(G)
    assert cfg.rank == 6
    assert sorted(cfg.valencies) == [1, 3, 3, 9, 9, 27]


def test_psl2():
    assert catalog.psl2_line(5).degree == 6
    assert catalog.psl2_line(4).degree == 5
    assert coherent.orbitals(catalog.psl2_line(5)).rank == 2
    assert coherent.orbitals(catalog.psl2_line(8)).rank == 2
    assert coherent.orbitals(catalog.psl2_line(9)).rank == 2
    assert catalog.psl2_line(5).order() == 60
    assert catalog.psl2_line(7).order() == 168


def test_bad_parameters():
    for call in (
        lambda: catalog.dihedral(2),
        lambda: catalog.cyclic(1),
        lambda: catalog.sym_on_pairs(3),
        lambda: catalog.agl1(6),
        lambda: catalog.gl3_flags(4),
        lambda: catalog.psl2_line(50),
        lambda: catalog.builtin("nosuch:4"),
        lambda: catalog.builtin("dihedral:x"),
    ):
        with pytest.raises(BadParameter):
            call()


def test_roster_axioms_and_transitivity():
    for entry in catalog.roster():
        G = entry.group()
        assert perm.is_transitive(G), entry.name
        report = coherent.verify_axioms(coherent.orbitals(G))
        assert report.passed, (entry.name, report.failures)


def test_sweep_filters_by_degree():
    names = [name for name, _ in catalog.sweep_groups(30)]
    assert "gl3flags:3" not in names
    assert "gl3flags:2" in names
    assert len(names) == len(set(names))
