"""Exact check of the identity chain from the index argument, and -C^-1.

Index vanishing for every twisted Dirac operator is an input here: the
workbench never computes an analytic index. Everything downstream of it is
rational arithmetic and is checked with zero tolerance.
"""
import logging
from fractions import Fraction
from itertools import product
from typing import Dict, Iterable, List, Optional, Tuple
from mckay3.impl.types.group import GroupAction
from mckay3.impl.types.mckay import MckayMatrix
from mckay3.impl.types.eta import EtaTable
from mckay3.impl.types.reports import CheckRecord, VerificationReport, IntersectionPrediction
from mckay3.impl.types.validators import format_rational
from mckay3.impl.mckay import cartan_matrices, character_relation
from mckay3.impl.eta import eta_table
from mckay3.utils.linalg import identity, matmul, negate, solve, transpose

log = logging.getLogger(__name__)

Witness = Dict[str, int]
Instance = Tuple[Witness, Fraction, Fraction]


def _delta(a: int, b: int) -> int:
    return int(a == b)


def _check(name: str, statement: str, instances: Iterable[Instance]) -> CheckRecord:
    """Compare lhs == rhs over every instance; report the first failure, else the first instance."""
    first: Optional[Instance] = None
    for inst in instances:
        if first is None:
            first = inst
        witness, lhs, rhs = inst
        if lhs != rhs:
            return CheckRecord(name=name, statement=statement, passed=False,
                               lhs=format_rational(lhs), rhs=format_rational(rhs), witness=witness)
    if first is None:
        return CheckRecord(name=name, statement=statement, passed=True)
    witness, lhs, rhs = first
    return CheckRecord(name=name, statement=statement, passed=True,
                       lhs=format_rational(lhs), rhs=format_rational(rhs), witness=witness)


def _index_identity_instances(cm: MckayMatrix, eta: EtaTable) -> Iterable[Instance]:
    r = cm.group.order
    for tau, sigma in product(range(r), repeat=2):
        lhs = sum(cm.full[tau][rho] * eta.pair(rho, sigma) for rho in range(r))
        rhs = -2 * (_delta(tau, sigma) - Fraction(1, r))
        yield {"tau": tau, "sigma": sigma}, Fraction(lhs), rhs


def verify_index_identity(group: GroupAction,
                          cm: Optional[MckayMatrix] = None,
                          eta: Optional[EtaTable] = None) -> CheckRecord:
    """sum_rho c_{tau rho} eta_{rho (x) sigma*} == -2(delta_{tau sigma} - 1/r) for all tau, sigma."""
    cm = cm or cartan_matrices(group)
    eta = eta or eta_table(group)
    return _check("index-identity",
                  "sum_rho c[tau,rho] eta[rho-sigma] = -2(delta[tau,sigma] - 1/r)",
                  _index_identity_instances(cm, eta))


def chain_value(cm: MckayMatrix, eta: EtaTable, tau: int, sigma: int) -> Fraction:
    """m^_{tau sigma} = 1/2 [sum_rho c_{tau rho} eta_{rho (x) sigma*} - sum_rho c_{tau rho} eta_rho]"""
    r = cm.group.order
    row = cm.full[tau]
    twisted = sum(row[rho] * eta.pair(rho, sigma) for rho in range(r))
    untwisted = sum(row[rho] * eta[rho] for rho in range(r))
    return Fraction(twisted - untwisted) / 2


def chain_closed_form(r: int, tau: int, sigma: int) -> Fraction:
    """-(delta_{tau sigma} - 1/r) + (delta_{tau 0} - 1/r) = delta_{tau 0} - delta_{tau sigma}"""
    return -(_delta(tau, sigma) - Fraction(1, r)) + (_delta(tau, 0) - Fraction(1, r))


def solve_chain(cm: MckayMatrix, eta: EtaTable) -> List[List[Fraction]]:
    """Solve C M = (m^_{tau sigma})_{tau, sigma in Irr_0} for M."""
    r = cm.group.order
    rhs = [[chain_value(cm, eta, tau, sigma) for sigma in range(1, r)] for tau in range(1, r)]
    return solve([list(row) for row in cm.reduced], rhs)


def _matrix_instances(label: str, got: List[List[Fraction]], want: List[List[Fraction]],
                      offset: int = 1) -> Iterable[Instance]:
    for i, (grow, wrow) in enumerate(zip(got, want)):
        for j, (g, w) in enumerate(zip(grow, wrow)):
            yield {f"{label}_row": i + offset, f"{label}_col": j + offset}, Fraction(g), Fraction(w)


def verify_chain(group: GroupAction, threads: int = 1) -> VerificationReport:
    """Run every exact check of the identity chain for `group`."""
    cm = cartan_matrices(group)
    eta = eta_table(group, threads=threads)
    r = group.order
    full = [list(row) for row in cm.full]
    checks: List[CheckRecord] = []

    checks.append(_check(
        "row-sums", "sum_sigma c[rho,sigma] = 0",
        (({"rho": rho}, Fraction(sum(full[rho])), Fraction(0)) for rho in range(r))))

    checks.append(_check(
        "skew", "c[rho,sigma] = -c[sigma,rho]",
        (({"rho": rho, "sigma": sigma}, Fraction(full[rho][sigma]), Fraction(-full[sigma][rho]))
         for rho, sigma in product(range(r), repeat=2))))

    checks.append(_check(
        "determinant", "det C != 0",
        [({}, Fraction(int(cm.determinant != 0)), Fraction(1))]))

    checks.append(_check(
        "character-relation", "(chi_1 - chi_2)(g) chi_tau(g) = -sum_rho c[tau,rho] chi_rho(g)",
        (({"tau": tau, "j": j}, Fraction(int(character_relation(group, tau, j))), Fraction(1))
         for tau, j in product(range(r), range(1, r)))))

    checks.append(_check(
        "eta-antisymmetry", "eta[-d] = -eta[d]",
        (({"d": d}, eta[-d], -eta[d]) for d in range(r))))

    checks.append(verify_index_identity(group, cm, eta))

    # third term of the expansion: eta of the fixed bundle R_sigma* is constant in rho
    checks.append(_check(
        "third-term", "sum_rho c[tau,rho] eta[-sigma] = 0",
        (({"tau": tau, "sigma": sigma}, Fraction(sum(full[tau][rho] * eta[-sigma] for rho in range(r))), Fraction(0))
         for tau, sigma in product(range(r), repeat=2))))

    checks.append(_check(
        "chain-value", "m[tau,sigma] = -(delta[tau,sigma] - 1/r) + (delta[tau,0] - 1/r)",
        (({"tau": tau, "sigma": sigma}, chain_value(cm, eta, tau, sigma), chain_closed_form(r, tau, sigma))
         for tau, sigma in product(range(r), repeat=2))))

    solved = solve_chain(cm, eta)
    reduced = [list(row) for row in cm.reduced]
    minus_identity = negate(identity(r - 1))
    checks.append(_check(
        "chain-inverse", "C M = -I on Irr_0",
        _matrix_instances("irr0", matmul(reduced, solved), minus_identity)))

    minus_inverse = negate([list(row) for row in cm.inverse])
    checks.append(_check(
        "chain-equals-minus-inverse", "M = -C^-1",
        _matrix_instances("irr0", solved, minus_inverse)))

    # ch~(R_rho0) = 0: extend M by a zero row and column for the trivial irrep
    extended = [[Fraction(0)] * r] + [[Fraction(0)] + row for row in solved]
    checks.append(_check(
        "trivial-row", "sum_rho c[tau,rho] X[rho,sigma] = m[tau,sigma] for all tau including rho0",
        (({"tau": tau, "sigma": sigma},
          Fraction(sum(full[tau][rho] * extended[rho][sigma] for rho in range(r))),
          chain_closed_form(r, tau, sigma))
         for tau, sigma in product(range(r), repeat=2))))

    report = VerificationReport(group=str(group), checks=checks)
    for failed in report.failures:
        log.warning("%s: check %s failed at %s", group, failed.name, failed.witness)
    return report


def predicted_intersection_matrix(group: GroupAction, cm: Optional[MckayMatrix] = None) -> IntersectionPrediction:
    """M_{rho sigma} = -(C^-1)_{rho sigma}; raises SingularMatrix through cartan_matrices."""
    cm = cm or cartan_matrices(group)
    return IntersectionPrediction(
        group=group,
        matrix=tuple(tuple(-v for v in row) for row in cm.inverse),
    )


def is_skew(m: List[List[Fraction]]) -> bool:
    return m == negate(transpose(m))
