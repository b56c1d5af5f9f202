from fractions import Fraction
from itertools import product
import pytest
from mckay3.impl.group import all_groups, character, new_group
from mckay3.impl.mckay import (
    cartan_entry, cartan_entry_closed_form, cartan_matrices, cartan_row, character_relation, exterior_weights,
    full_matrix, multiplicity,
)
from mckay3.impl.types.cyclotomic import CyclotomicNumber
from mckay3.impl.types.group import IndexOutOfRange
from mckay3.utils.linalg import identity, matmul


def test_exterior_weights():
    g = new_group(3, 1, 1, 1)
    assert exterior_weights(g, 1) == (1, 1, 1)
    assert exterior_weights(g, 2) == (2, 2, 2)
    assert exterior_weights(g, 0) == exterior_weights(g, 3) == (0,)
    h = new_group(7, 1, 2, 4)
    assert sorted(exterior_weights(h, 2)) == sorted((-w) % 7 for w in h.weights)


@pytest.mark.parametrize("i", [-1, 4])
def test_exterior_weights_range(i):
    with pytest.raises(IndexOutOfRange):
        exterior_weights(new_group(3, 1, 1, 1), i)


def test_multiplicity():
    g = new_group(3, 1, 1, 1)
    assert multiplicity(g, 1, 0, 1) == 3
    assert all(multiplicity(g, 0, k, k) == 1 for k in range(3))
    assert multiplicity(new_group(7, 1, 2, 4), 1, 0, 3) == 0


def test_matrices_of_z3():
    cm = cartan_matrices(new_group(3, 1, 1, 1))
    assert cm.full == ((0, -3, 3), (3, 0, -3), (-3, 3, 0))
    assert cm.reduced == ((0, -3), (3, 0))
    assert cm.inverse == ((0, Fraction(1, 3)), (Fraction(-1, 3), 0))
    assert cm.determinant == 9
    assert cm.labels == [1, 2]
    assert cm.full_labels == [0, 1, 2]


def test_serialize():
    data = cartan_matrices(new_group(3, 1, 1, 1)).serialize()
    assert data["group"] == "1/3(1,1,1)"
    assert data["full"] == [[0, -3, 3], [3, 0, -3], [-3, 3, 0]]
    assert data["reduced"] == [[0, -3], [3, 0]]
    assert data["inverse"] == [["0", "1/3"], ["-1/3", "0"]]
    assert data["determinant"] == 9


@pytest.mark.parametrize("r", [3, 5, 7])
def test_structure(r):
    for g in all_groups(r):
        full = full_matrix(g)
        for rho, sigma in product(range(r), repeat=2):
            assert cartan_entry(g, rho, sigma) == cartan_entry_closed_form(g, rho, sigma)
            assert full[rho][sigma] == -full[sigma][rho]
        assert all(sum(row) == 0 for row in full)

        cm = cartan_matrices(g)
        assert cm.determinant != 0
        assert matmul([list(row) for row in cm.reduced], [list(row) for row in cm.inverse]) == identity(r - 1)


@pytest.mark.parametrize("r", [3, 5, 7])
def test_character_relation(r):
    for g in all_groups(r)[:4]:
        assert all(character_relation(g, tau, j) for tau, j in product(range(r), range(r)))


def test_character_relation_against_field_products():
    g = new_group(7, 1, 2, 4)
    zero = CyclotomicNumber.rational(7, 0)
    for tau, j in product(range(7), range(7)):
        chi1 = sum((character(g, u, j) for u in exterior_weights(g, 1)), zero)
        chi2 = sum((character(g, u, j) for u in exterior_weights(g, 2)), zero)
        rhs = sum((cartan_entry(g, tau, rho) * character(g, rho, j) for rho in g.irreps), zero)
        assert ((chi1 - chi2) * character(g, tau, j) == -rhs) == character_relation(g, tau, j)
    assert cartan_row(g, 3) == tuple(full_matrix(g)[3])


@pytest.mark.parametrize("r", [11, 13])
def test_character_relation_for_every_group(r):
    for g in all_groups(r):
        assert all(character_relation(g, tau, j) for tau, j in product(range(r), range(1, r)))


@pytest.mark.slow
def test_structure_sweep():
    for r in [11, 13]:
        for g in all_groups(r):
            full = full_matrix(g)
            assert all(sum(row) == 0 for row in full)
            assert all(full[a][b] == -full[b][a] for a, b in product(range(r), repeat=2))
            assert cartan_matrices(g).determinant != 0
