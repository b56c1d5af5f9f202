from fractions import Fraction
from itertools import product
import pytest
from mckay3.impl.correspondence import (
    chain_closed_form, chain_value, is_skew, predicted_intersection_matrix, solve_chain, verify_chain,
    verify_index_identity,
)
from mckay3.impl.eta import eta_table
from mckay3.impl.group import all_groups, new_group
from mckay3.impl.mckay import cartan_matrices
from mckay3.impl.types.reports import CheckRecord, VerificationReport
from mckay3.utils.linalg import identity, matmul, negate

CHECKS = [
    "row-sums", "skew", "determinant", "character-relation", "eta-antisymmetry", "index-identity",
    "third-term", "chain-value", "chain-inverse", "chain-equals-minus-inverse", "trivial-row",
]


def reduced_chern_pairing_on_total_space_of_o_minus_3(rho: int, sigma: int) -> Fraction:
    """int ch~(O(rho)) ch~(O(-sigma)) on Tot(O_P2(-3)), where int h^3 = -1/3 on compact support."""
    a, b = rho, -sigma
    # degree-3 part of (a h + a^2 h^2/2 + ...)(b h + b^2 h^2/2 + ...)
    coefficient = Fraction(a * b * b + a * a * b, 2)
    return coefficient * Fraction(-1, 3)


def test_verify_z3():
    report = verify_chain(new_group(3, 1, 1, 1))
    assert report.overall
    assert [c.name for c in report.checks] == CHECKS
    assert report.failures == []
    data = report.serialize()
    assert data["group"] == "1/3(1,1,1)"
    assert all(c["pass"] for c in data["checks"])


def test_index_identity_record():
    record = verify_index_identity(new_group(5, 1, 2, 2))
    assert record.passed
    assert record.witness == {"tau": 0, "sigma": 0}
    assert record.lhs == record.rhs == "-8/5"


def test_chain_values_z3():
    g = new_group(3, 1, 1, 1)
    cm, eta = cartan_matrices(g), eta_table(g)
    for tau, sigma in product(range(3), repeat=2):
        assert chain_value(cm, eta, tau, sigma) == chain_closed_form(3, tau, sigma)
        assert chain_closed_form(3, tau, sigma) == int(tau == 0) - int(tau == sigma)
    assert solve_chain(cm, eta) == [[0, Fraction(-1, 3)], [Fraction(1, 3), 0]]


def test_prediction_z3():
    prediction = predicted_intersection_matrix(new_group(3, 1, 1, 1))
    assert prediction.matrix == ((0, Fraction(-1, 3)), (Fraction(1, 3), 0))
    assert prediction.entry(1, 2) == Fraction(-1, 3)
    assert prediction.serialize()["matrix"] == [["0", "-1/3"], ["1/3", "0"]]


def test_prediction_matches_toric_computation():
    prediction = predicted_intersection_matrix(new_group(3, 1, 1, 1))
    for rho, sigma in product([1, 2], repeat=2):
        assert prediction.entry(rho, sigma) == reduced_chern_pairing_on_total_space_of_o_minus_3(rho, sigma)


@pytest.mark.parametrize("r", [3, 5, 7])
def test_chain_for_every_group(r):
    for g in all_groups(r):
        assert verify_chain(g).overall, str(g)
        m = [list(row) for row in predicted_intersection_matrix(g).matrix]
        assert is_skew(m)
        c = [list(row) for row in cartan_matrices(g).reduced]
        assert matmul(c, m) == negate(identity(r - 1))


def test_overall_is_derived():
    failing = CheckRecord(name="x", statement="1 = 2", passed=False, lhs="1/1", rhs="2/1", witness={"k": 0})
    passing = CheckRecord(name="y", statement="1 = 1", passed=True)
    report = VerificationReport(group="1/3(1,1,1)", checks=[passing, failing], overall=True)
    assert not report.overall
    assert report.failures == [failing]
    assert report.serialize()["checks"][1]["pass"] is False


@pytest.mark.slow
def test_index_identity_sweep():
    for r in [11, 13]:
        for g in all_groups(r):
            assert verify_index_identity(g).passed, str(g)
            assert verify_chain(g).overall, str(g)
