from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Sequence, Tuple
from mckay3.impl.types.group import GroupAction


def rational_rows(m: Sequence[Sequence[Fraction]]) -> List[List[str]]:
    """Matrix cells as exact strings in lowest terms; integral cells carry no denominator."""
    return [[str(Fraction(v)) for v in row] for row in m]


@dataclass(frozen=True)
class MckayMatrix:
    """C~ over Irr(G), its principal submatrix C over Irr_0(G) and C^-1."""
    group: GroupAction
    full: Tuple[Tuple[int, ...], ...]
    reduced: Tuple[Tuple[int, ...], ...]
    inverse: Tuple[Tuple[Fraction, ...], ...]
    determinant: int

    @property
    def labels(self) -> List[int]:
        return list(self.group.nontrivial_irreps)

    @property
    def full_labels(self) -> List[int]:
        return list(self.group.irreps)

    def serialize(self) -> Dict[str, Any]:
        return {
            "group": str(self.group),
            "full_labels": self.full_labels,
            "full": [list(row) for row in self.full],
            "labels": self.labels,
            "reduced": [list(row) for row in self.reduced],
            "determinant": self.determinant,
            "inverse": rational_rows(self.inverse),
        }
