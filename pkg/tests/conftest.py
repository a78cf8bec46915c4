import pytest

from hsw import catalog, perm


@pytest.fixture(scope="session")
def d8():
    return perm.PermGroup(
        [perm.parse_permutation("(1 2 3 4)", 4), perm.parse_permutation("(2 4)", 4)],
        name="dihedral:4",
    )


@pytest.fixture(scope="session")
def s3_natural():
    return catalog.symmetric_natural(3)


@pytest.fixture(scope="session")
def octahedron():
    """Aut(K_{2,2,2}) as a degree-6 group: contains the regular C_6 and has
    point-stabilizer orbits {antipode}, {the other four}."""
    return perm.PermGroup(
        [perm.parse_permutation("(1 2 3 4 5 6)", 6),
         perm.parse_permutation("(1 2)(4 5)", 6)],
        name="octahedron",
    )


def powers_of(c, degree):
    """All powers of a permutation, identity first."""
    out = [perm.identity(degree)]
    x = c
    while not x.is_identity():
        out.append(x)
        x = perm.compose(x, c)
    return out
