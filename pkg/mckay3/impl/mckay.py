"""Exterior-power multiplicities and the matrices C~, C, C^-1.

Irreps are ordered 0, 1, ..., r-1 by character exponent everywhere;
C is C~ with index 0 (the trivial representation) erased.
"""
import logging
from functools import lru_cache
from typing import List, Tuple
from mckay3.impl.types.group import GroupAction, IndexOutOfRange
from mckay3.impl.types.mckay import MckayMatrix
from mckay3.impl.types.cyclotomic import CyclotomicNumber
from mckay3.utils.linalg import bareiss_inverse

log = logging.getLogger(__name__)


def exterior_weights(group: GroupAction, i: int) -> Tuple[int, ...]:
    """Weights of Lambda^i C^3 as characters of G (a multiset, as a tuple)."""
    r = group.order
    w1, w2, w3 = group.weights
    if i == 0 or i == 3:
        # Lambda^3 C^3 is the determinant, trivial inside SL(3,C)
        return (0,)
    if i == 1:
        return (w1, w2, w3)
    if i == 2:
        return ((w1 + w2) % r, (w1 + w3) % r, (w2 + w3) % r)
    raise IndexOutOfRange(name="i", value=i, allowed="{0,1,2,3}")


def multiplicity(group: GroupAction, i: int, rho: int, sigma: int) -> int:
    """a^(i)_{rho sigma}: how often sigma occurs in Lambda^i C^3 (x) rho.

    Every irrep of the abelian group G is one-dimensional, so counting
    weights is the whole decomposition.
    """
    r = group.order
    return sum(1 for u in exterior_weights(group, i) if (rho + u - sigma) % r == 0)


def cartan_entry(group: GroupAction, rho: int, sigma: int) -> int:
    """c_{rho sigma} = sum_i (-1)^i a^(i)_{rho sigma}"""
    return sum((-1) ** i * multiplicity(group, i, rho, sigma) for i in range(4))


def cartan_entry_closed_form(group: GroupAction, rho: int, sigma: int) -> int:
    """#{i: sigma = rho - w_i} - #{i: sigma = rho + w_i}; the Lambda^0 and Lambda^3 terms cancel."""
    r = group.order
    minus = sum(1 for w in group.weights if (rho - w - sigma) % r == 0)
    plus = sum(1 for w in group.weights if (rho + w - sigma) % r == 0)
    return minus - plus


def full_matrix(group: GroupAction) -> List[List[int]]:
    return [[cartan_entry(group, rho, sigma) for sigma in group.irreps] for rho in group.irreps]


def cartan_matrices(group: GroupAction) -> MckayMatrix:
    """Build C~, C and the exact inverse of C.

    Raises:
        SingularMatrix: if det C == 0, which the index argument rules out for
            every valid group; seeing it means something upstream is wrong.
    """
    full = full_matrix(group)
    reduced = [row[1:] for row in full[1:]]
    det, inverse = bareiss_inverse(reduced)
    log.debug("%s: det C = %d", group, det)
    return MckayMatrix(
        group=group,
        full=tuple(tuple(row) for row in full),
        reduced=tuple(tuple(row) for row in reduced),
        inverse=tuple(tuple(row) for row in inverse),
        determinant=det,
    )


def character_relation(group: GroupAction, tau: int, j: int) -> bool:
    """(chi_{C^3} - chi_{Lambda^2 C^3})(g^j) chi_tau(g^j) == -sum_rho c_{tau rho} chi_rho(g^j), exactly.

    Both sides are sums of roots of unity, so each is assembled as one
    vector over 1, zeta, ..., zeta^(r-1) and reduced once.
    """
    r = group.order
    lhs = _difference_character(group, j % r).times_root(tau * j)
    rhs = [0] * r
    for rho, c in enumerate(cartan_row(group, tau % r)):
        rhs[(rho * j) % r] -= c
    return lhs == CyclotomicNumber.from_cyclic(r, rhs)


@lru_cache(maxsize=None)
def cartan_row(group: GroupAction, tau: int) -> Tuple[int, ...]:
    return tuple(cartan_entry(group, tau, rho) for rho in group.irreps)


@lru_cache(maxsize=None)
def _difference_character(group: GroupAction, j: int) -> CyclotomicNumber:
    r = group.order
    values = [0] * r
    for u in exterior_weights(group, 1):
        values[(u * j) % r] += 1
    for u in exterior_weights(group, 2):
        values[(u * j) % r] -= 1
    return CyclotomicNumber.from_cyclic(r, values)
