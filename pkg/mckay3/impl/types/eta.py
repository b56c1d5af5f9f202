from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Tuple
from mckay3.impl.types.group import GroupAction
from mckay3.impl.types.validators import format_rational


@dataclass(frozen=True)
class EtaTable:
    """eta invariants indexed by the difference residue d = rho - sigma.

    rho (x) sigma* has character zeta^((rho - sigma) j), so the r^2 pairs
    collapse to r values.
    """
    group: GroupAction
    by_difference: Tuple[Fraction, ...]

    def __getitem__(self, d: int) -> Fraction:
        return self.by_difference[d % self.group.order]

    def pair(self, rho: int, sigma: int) -> Fraction:
        """eta of R_rho (x) R_sigma*"""
        return self[rho - sigma]

    @property
    def pair_view(self) -> Tuple[Tuple[Fraction, ...], ...]:
        r = self.group.order
        return tuple(tuple(self.pair(rho, sigma) for sigma in range(r)) for rho in range(r))

    def serialize(self) -> Dict[str, Any]:
        return {
            "group": str(self.group),
            "eta": {str(d): format_rational(v) for d, v in enumerate(self.by_difference)},
        }
