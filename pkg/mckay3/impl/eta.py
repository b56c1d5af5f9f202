"""Eta invariants of the twisted Dirac operator at infinity.

    eta_E = -(2/|G|) sum_{g != e} chi_E(g) / det(I - g)

evaluated exactly in Q(zeta_r). The result is only accepted once it is
certified rational.
"""
import cmath
import logging
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Tuple
from mckay3.impl.types.group import GroupAction
from mckay3.impl.types.cyclotomic import CyclotomicNumber
from mckay3.impl.types.eta import EtaTable
from mckay3.impl.group import det_one_minus
from mckay3.utils.errors import AlarmError
from mckay3.utils.parallel import pmap

log = logging.getLogger(__name__)


class NonRationalResult(AlarmError):
    def message(self) -> str:
        return f"eta sum for {self.context['group']} is not rational: {self.context['value']}"


class ZeroDenominator(AlarmError):
    def message(self) -> str:
        return f"det(I - g^{self.context['j']}) vanishes for {self.context['group']}; the action is not free"


@lru_cache(maxsize=256)
def inverse_determinants(group: GroupAction) -> Tuple[CyclotomicNumber, ...]:
    """1/det(I - g^j) for j = 1..r-1 (index j-1)."""
    out = []
    for j in range(1, group.order):
        d = det_one_minus(group, j)
        if d.is_zero():
            raise ZeroDenominator(group=str(group), j=j)
        out.append(d.inverse())
    return tuple(out)


def _certify(group: GroupAction, total: CyclotomicNumber) -> Fraction:
    value = (total * Fraction(-2, group.order)).rational_value()
    if value is None:
        raise NonRationalResult(group=str(group), value=str(total))
    return value


def eta_invariant(group: GroupAction, chi: Callable[[int], CyclotomicNumber]) -> Fraction:
    """eta for the flat bundle whose fiber at infinity has character `chi` (j -> chi(g^j)).

    Raises:
        ZeroDenominator: a nontrivial element has eigenvalue 1
        NonRationalResult: `chi` was not a genuine character
    """
    total = CyclotomicNumber.rational(group.order, 0)
    for j, inv_det in enumerate(inverse_determinants(group), start=1):
        total = total + chi(j) * inv_det
    return _certify(group, total)


def eta_of_difference(group: GroupAction, d: int) -> Fraction:
    """eta for the character zeta^(d j); multiplying by a root of unity is a rotation."""
    total = CyclotomicNumber.rational(group.order, 0)
    for j, inv_det in enumerate(inverse_determinants(group), start=1):
        total = total + inv_det.times_root(d * j)
    return _certify(group, total)


def eta_table(group: GroupAction, threads: int = 1) -> EtaTable:
    values = pmap(lambda d: eta_of_difference(group, d), group.irreps, threads=threads)
    log.debug("%s: eta = %s", group, [str(v) for v in values])
    return EtaTable(group=group, by_difference=tuple(values))


def eta_float(group: GroupAction, d: int) -> float:
    """Direct complex summation of the eta formula. Test oracle, never reported."""
    r = group.order
    total = 0j
    for j in range(1, r):
        den = 1 + 0j
        for w in group.weights:
            den *= 1 - cmath.exp(2j * cmath.pi * j * w / r)
        total += cmath.exp(2j * cmath.pi * d * j / r) / den
    return (-2 / r * total).real
