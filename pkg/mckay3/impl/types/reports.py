from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple
from pydantic import BaseModel, Field, Extra, validator
from mckay3.impl.types.group import GroupAction
from mckay3.impl.types.validators import GroupLiteral
from mckay3.impl.types.mckay import rational_rows

TRIPLE_PAIRING = "int_X c1(R_rho)^2 c1(R_sigma) - c1(R_rho) c1(R_sigma)^2"


class CheckRecord(BaseModel):
    name: str
    statement: str
    passed: bool = Field(alias="pass")
    lhs: Optional[str] = Field(default=None, description="left-hand side at the witness, as p/q")
    rhs: Optional[str] = Field(default=None, description="right-hand side at the witness, as p/q")
    witness: Optional[Dict[str, int]] = Field(
        default=None, description="indices of the first failing instance, or of the first instance checked")

    class Config:
        extra = Extra.forbid
        allow_population_by_field_name = True
        allow_mutation = False

    def serialize(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "statement": self.statement,
            "pass": self.passed,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "witness": self.witness,
        }


class VerificationReport(BaseModel):
    group: GroupLiteral
    checks: List[CheckRecord] = Field(default_factory=list)
    overall: bool = False

    @validator("overall", always=True)
    def conjunction(cls, v, values):
        # overall is never taken from input, it is the conjunction of the checks
        return all(c.passed for c in values.get("checks", []))

    @property
    def failures(self) -> List[CheckRecord]:
        return [c for c in self.checks if not c.passed]

    def serialize(self) -> Dict[str, Any]:
        return {
            "group": str(self.group),
            "overall": self.overall,
            "checks": [c.serialize() for c in self.checks],
        }

    class Config:
        extra = Extra.forbid
        allow_mutation = False


@dataclass(frozen=True)
class IntersectionPrediction:
    """M = -C^-1 over Irr_0(G): the predicted int_X ch~(R_rho) ch~(R_sigma*)."""
    group: GroupAction
    matrix: Tuple[Tuple[Fraction, ...], ...]

    @property
    def labels(self) -> List[int]:
        return list(self.group.nontrivial_irreps)

    def entry(self, rho: int, sigma: int) -> Fraction:
        """M_{rho sigma} addressed by irrep labels (1..r-1)."""
        return self.matrix[rho - 1][sigma - 1]

    def serialize(self) -> Dict[str, Any]:
        return {
            "group": str(self.group),
            "labels": self.labels,
            "matrix": rational_rows(self.matrix),
            "interpretation": {
                "entry": "int_X ch~(R_rho) ch~(R_sigma*)",
                "triple_pairing": TRIPLE_PAIRING,
                "slice": "(alpha, beta, alpha - beta) with alpha = c1(R_rho), beta = c1(R_sigma)",
            },
        }
