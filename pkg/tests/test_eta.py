from fractions import Fraction
import pytest
from mckay3.impl.eta import NonRationalResult, ZeroDenominator, eta_float, eta_invariant, eta_of_difference, eta_table
from mckay3.impl.group import all_groups, character, det_one_minus, new_group, to_complex
from mckay3.impl.types.cyclotomic import CyclotomicNumber
from mckay3.impl.types.group import GroupAction


def test_eta_of_z3():
    g = new_group(3, 1, 1, 1)
    assert eta_invariant(g, lambda j: character(g, 0, j)) == 0
    assert eta_invariant(g, lambda j: character(g, 1, j)) == Fraction(2, 9)
    assert eta_invariant(g, lambda j: character(g, 2, j)) == Fraction(-2, 9)


def test_table_of_z3():
    table = eta_table(new_group(3, 1, 1, 1))
    assert table.by_difference == (0, Fraction(2, 9), Fraction(-2, 9))
    assert table.serialize() == {"group": "1/3(1,1,1)", "eta": {"0": "0/1", "1": "2/9", "2": "-2/9"}}
    assert table.pair(2, 1) == Fraction(2, 9)
    assert [table.pair_view[k][k] for k in range(3)] == [table[0]] * 3


def test_eta_of_difference_matches_general_formula():
    g = new_group(7, 1, 2, 4)
    for d in range(7):
        assert eta_of_difference(g, d) == eta_invariant(g, lambda j: character(g, d, j))


def test_non_character_is_caught():
    g = new_group(5, 1, 2, 2)
    with pytest.raises(NonRationalResult):
        eta_invariant(g, lambda j: CyclotomicNumber.rational(5, int(j == 1)))


def test_non_free_action_is_caught():
    # bypasses new_group validation
    with pytest.raises(ZeroDenominator):
        eta_table(GroupAction(order=3, weights=(1, 2, 0)))


def test_threads_do_not_change_the_table():
    g = new_group(7, 1, 1, 5)
    assert eta_table(g, threads=4) == eta_table(g)


@pytest.mark.parametrize("r", [3, 5, 7])
def test_antisymmetry_and_float_oracle(r):
    for g in all_groups(r):
        table = eta_table(g)
        for d in range(r):
            assert table[-d] == -table[d]
            exact = float(table[d])
            assert abs(exact - eta_float(g, d)) <= 1e-9 * max(1.0, abs(exact))


@pytest.mark.slow
def test_antisymmetry_sweep():
    for r in [11, 13]:
        for g in all_groups(r):
            table = eta_table(g)
            assert all(table[d] + table[r - d] == 0 for d in range(r))
            assert all(abs(float(table[d]) - eta_float(g, d)) <= 1e-9 * max(1.0, abs(float(table[d])))
                       for d in range(r))


@pytest.mark.parametrize("r", [3, 5, 7, 11])
def test_magnitude_is_bounded_by_the_largest_inverse_determinant(r):
    for g in all_groups(r):
        bound = 2 * max(1 / abs(to_complex(det_one_minus(g, j))) for j in range(1, r))
        table = eta_table(g)
        assert all(abs(float(table[d])) <= bound for d in range(r)), str(g)
