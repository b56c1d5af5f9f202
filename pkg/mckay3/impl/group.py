"""The acting group 1/r(w1,w2,w3) and exact character values.

Irr(G) is identified with Z/r: the class k is the character g^j -> zeta^(kj).
"""
import logging
from fractions import Fraction
from itertools import permutations
from typing import List, Optional, Tuple
from sympy import isprime
from mckay3.impl.types.group import GroupAction, NotPrime, DeterminantNotOne, NotFree
from mckay3.impl.types.cyclotomic import CyclotomicNumber

log = logging.getLogger(__name__)


def is_prime(n: int) -> bool:
    return n >= 2 and bool(isprime(n))


def new_group(r: int, w1: int, w2: int, w3: int) -> GroupAction:
    """Validate and build the group 1/r(w1,w2,w3).

    Raises:
        NotPrime: iff. r is not prime
        NotFree: iff. some weight is 0 mod r (checked before the determinant)
        DeterminantNotOne: iff. w1 + w2 + w3 is not 0 mod r
    """
    if not is_prime(r):
        raise NotPrime(order=r)
    weights = (w1 % r, w2 % r, w3 % r)
    for position, (value, w) in enumerate(zip((w1, w2, w3), weights), start=1):
        if w == 0:
            raise NotFree(order=r, position=position, value=value, weights=(w1, w2, w3))
    if sum(weights) % r != 0:
        raise DeterminantNotOne(order=r, weights=(w1, w2, w3))
    return GroupAction(order=r, weights=weights)


def all_groups(r: int) -> List[GroupAction]:
    """Every valid weight triple for order r, up to reduction mod r (not up to relabeling)."""
    if not is_prime(r):
        return []
    return [
        GroupAction(order=r, weights=(w1, w2, (-w1 - w2) % r))
        for w1 in range(1, r) for w2 in range(1, r)
        if (w1 + w2) % r != 0
    ]


def equivalent_presentations(group: GroupAction) -> List[Tuple[int, int, int]]:
    """Weight triples presenting the same subgroup of SL(3,C) up to coordinate permutation.

    Rescaling by a unit u mod r is the same subgroup with its generator
    changed to g^u, which relabels Irr(G). Reported only; nothing is relabeled.
    """
    r = group.order
    found = {
        tuple((u * w) % r for w in perm)
        for u in range(1, r)
        for perm in permutations(group.weights)
    }
    return sorted(found)


def character(group: GroupAction, k: int, j: int) -> CyclotomicNumber:
    """chi_k(g^j) = zeta^(kj); indices are reduced mod r."""
    return CyclotomicNumber.root(group.order, (k * j) % group.order)


def cyc_add(a: CyclotomicNumber, b: CyclotomicNumber) -> CyclotomicNumber:
    return a + b


def cyc_mul(a: CyclotomicNumber, b: CyclotomicNumber) -> CyclotomicNumber:
    return a * b


def cyc_inv(a: CyclotomicNumber) -> CyclotomicNumber:
    """Raises DivisionByZero for 0."""
    return a.inverse()


def is_rational(a: CyclotomicNumber) -> Optional[Fraction]:
    return a.rational_value()


def det_one_minus(group: GroupAction, j: int) -> CyclotomicNumber:
    """det(I - g^j) = prod_i (1 - zeta^(j w_i))"""
    out = CyclotomicNumber.rational(group.order, 1)
    for w in group.weights:
        out = out * (1 - character(group, w, j))
    return out


def alternating_character_sum(group: GroupAction, j: int) -> CyclotomicNumber:
    """sum_i (-1)^i chi_{Lambda^i C^3}(g^j), computed from the exterior powers."""
    # imported here, mckay builds on this module
    from mckay3.impl.mckay import exterior_weights
    r = group.order
    total = CyclotomicNumber.rational(r, 0)
    for i in range(4):
        for u in exterior_weights(group, i):
            total = total + (-1) ** i * character(group, u, j)
    return total


def det_identity(group: GroupAction, j: int) -> bool:
    """The alternating sum over exterior powers equals det(I - g^j), exactly."""
    return alternating_character_sum(group, j) == det_one_minus(group, j)


def to_complex(a: CyclotomicNumber) -> complex:
    return a.to_complex()
