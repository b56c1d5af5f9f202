from dataclasses import dataclass, field
from typing import Any, Dict, List, Tuple, Union
import numpy as np
from mckay3.impl.types.quiver import VertexSet


def _frozen(values) -> np.ndarray:
    arr = np.array(values, dtype=np.float64)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class MomentValue:
    """Per-vertex values of the moment map (or of anything paired with the gauge center)."""
    values: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "values", _frozen(self.values))

    @property
    def total(self) -> float:
        return float(self.values.sum())

    def sup_distance(self, other: "MomentValue") -> float:
        return float(np.max(np.abs(self.values - other.values))) if self.values.size else 0.0

    def __sub__(self, other: "MomentValue") -> "MomentValue":
        return MomentValue(self.values - other.values)

    def serialize(self) -> List[float]:
        return [float(v) for v in self.values]


@dataclass(frozen=True, eq=False)
class GaugePoint:
    """Log coordinates x_k on the positive diagonal gauge torus modulo its center.

    The constructor projects onto the sum-zero hyperplane.
    """
    values: np.ndarray

    def __post_init__(self):
        x = np.array(self.values, dtype=np.float64)
        object.__setattr__(self, "values", _frozen(x - x.mean() if x.size else x))

    @staticmethod
    def zero(r: int) -> "GaugePoint":
        return GaugePoint(np.zeros(r))

    @property
    def sup_norm(self) -> float:
        return float(np.max(np.abs(self.values))) if self.values.size else 0.0

    def serialize(self) -> List[float]:
        return [float(v) for v in self.values]


@dataclass(frozen=True, eq=False)
class Solved:
    x: GaugePoint
    residual: float
    iterations: int
    history: Tuple[float, ...] = field(default=())

    def serialize(self, with_history: bool = False) -> Dict[str, Any]:
        out = {"status": "solved", "x": self.x.serialize(), "residual": self.residual,
               "iterations": self.iterations}
        if with_history:
            out["history"] = list(self.history)
        return out


@dataclass(frozen=True, eq=False)
class Unstable:
    """Divergence of the solver, certified by a destabilizing invariant subset."""
    certificate: VertexSet
    x: GaugePoint
    iterations: int
    history: Tuple[float, ...] = field(default=())

    def serialize(self, with_history: bool = False) -> Dict[str, Any]:
        out = {"status": "unstable", "certificate": sorted(self.certificate), "x": self.x.serialize(),
               "iterations": self.iterations}
        if with_history:
            out["history"] = list(self.history)
        return out


SolveResult = Union[Solved, Unstable]
