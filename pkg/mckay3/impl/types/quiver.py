from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, FrozenSet, Iterable, List, Mapping, Optional, Tuple
import numpy as np
from mckay3.utils.errors import InputError
from mckay3.impl.types.group import GroupAction, LiteralSyntaxError
from mckay3.impl.types.validators import NotARationalError, format_rational, parse_rational_list

FLAVORS = (1, 2, 3)
RELATION_PAIRS = ((1, 2), (1, 3), (2, 3))

# an arrow is (tail vertex k, flavor alpha); its head is k + w_alpha
Arrow = Tuple[int, int]
VertexSet = FrozenSet[int]


class ThetaNotBalanced(InputError):
    def message(self) -> str:
        return f"stability parameter {self.context['theta']} sums to {self.context['total']}, expected theta(R) = 0"


class ThetaSizeMismatch(InputError):
    def message(self) -> str:
        return f"stability parameter has {self.context['size']} entries, group order is {self.context['order']}"


class NotGeneric(InputError):
    def message(self) -> str:
        return f"theta {self.context['theta']} is not generic: theta({sorted(self.context['witness'])}) = 0"


@dataclass(frozen=True)
class StabilityParam:
    """theta in Theta_Q: one rational per vertex, summing to zero."""
    values: Tuple[Fraction, ...]

    def __post_init__(self):
        total = sum(self.values, Fraction(0))
        if total != 0:
            raise ThetaNotBalanced(theta=self.literal(), total=format_rational(total))

    @property
    def order(self) -> int:
        return len(self.values)

    def __call__(self, subset: Iterable[int]) -> Fraction:
        """theta(S) = sum_{k in S} theta_k"""
        return sum((self.values[k] for k in subset), Fraction(0))

    def literal(self) -> str:
        return ",".join(str(v) for v in self.values)

    def require_order(self, group: GroupAction) -> None:
        if self.order != group.order:
            raise ThetaSizeMismatch(size=self.order, order=group.order)

    @staticmethod
    def of(*values) -> "StabilityParam":
        return StabilityParam(tuple(Fraction(v) for v in values))

    @staticmethod
    def from_str(text: str) -> "StabilityParam":
        try:
            values = parse_rational_list(text)
        except NotARationalError:
            raise LiteralSyntaxError(kind="theta", text=text, expected='comma-separated rationals, e.g. "-2,1,1"')
        return StabilityParam(tuple(values))

    def serialize(self) -> List[str]:
        return [format_rational(v) for v in self.values]


@dataclass(frozen=True, eq=False)
class Constellation:
    """A McKay-quiver representation with dimension vector (1,...,1).

    `b[k, alpha - 1]` is the value on the arrow k -> k + w_alpha.
    """
    group: GroupAction
    b: np.ndarray

    def __post_init__(self):
        b = np.array(self.b, dtype=np.complex128)
        if b.shape != (self.group.order, 3):
            raise ValueError(f"expected arrow values of shape ({self.group.order}, 3), got {b.shape}")
        b.setflags(write=False)
        object.__setattr__(self, "b", b)

    def head(self, k: int, alpha: int) -> int:
        return (k + self.group.weights[alpha - 1]) % self.group.order

    def arrow(self, k: int, alpha: int) -> complex:
        return complex(self.b[k % self.group.order, alpha - 1])

    def arrows(self) -> List[Arrow]:
        return [(k, alpha) for k in self.group.irreps for alpha in FLAVORS]

    @staticmethod
    def zeros(group: GroupAction) -> "Constellation":
        return Constellation(group, np.zeros((group.order, 3), dtype=np.complex128))

    @staticmethod
    def from_arrows(group: GroupAction, values: Mapping[Arrow, complex]) -> "Constellation":
        b = np.zeros((group.order, 3), dtype=np.complex128)
        for (k, alpha), v in values.items():
            b[k % group.order, alpha - 1] = v
        return Constellation(group, b)

    def with_zeros(self, arrows: Iterable[Arrow]) -> "Constellation":
        b = self.b.copy()
        for k, alpha in arrows:
            b[k % self.group.order, alpha - 1] = 0
        return Constellation(self.group, b)

    def scaled(self, factor: complex) -> "Constellation":
        return Constellation(self.group, self.b * factor)

    def serialize(self) -> Dict[str, Any]:
        return {
            "group": str(self.group),
            "arrows": [[k, alpha, [float(self.b[k, alpha - 1].real), float(self.b[k, alpha - 1].imag)]]
                       for k, alpha in self.arrows()],
        }


@dataclass(frozen=True)
class FixedPoint:
    """A torus-fixed theta-stable constellation, recorded by its arrow support."""
    support: FrozenSet[Arrow]
    stable_for: StabilityParam = field(compare=False)

    def sorted_arrows(self) -> List[List[int]]:
        return [[k, alpha] for k, alpha in sorted(self.support)]

    def serialize(self) -> List[List[int]]:
        return self.sorted_arrows()


@dataclass(frozen=True)
class Verdict:
    """Outcome of a yes/no test with an optional witness subset."""
    ok: bool
    witness: Optional[VertexSet] = None

    def __bool__(self) -> bool:
        return self.ok

    def serialize(self) -> Dict[str, Any]:
        return {"ok": self.ok, "witness": None if self.witness is None else sorted(self.witness)}


def parse_zero_pattern(group: GroupAction, text: str) -> FrozenSet[Arrow]:
    """Parse "k:alpha,..." with "*:alpha" meaning every arrow of that flavor."""
    arrows = set()
    expected = 'comma-separated "k:alpha" arrows, "*" for every vertex, e.g. "0:1,*:3"'
    for part in (p.strip() for p in text.split(",") if p.strip()):
        k_str, sep, alpha_str = part.partition(":")
        if not sep or not alpha_str.strip().isdigit() or int(alpha_str) not in FLAVORS:
            raise LiteralSyntaxError(kind="zero pattern", text=text, expected=expected)
        alpha = int(alpha_str)
        k_str = k_str.strip()
        if k_str == "*":
            arrows.update((k, alpha) for k in group.irreps)
        elif k_str.lstrip("-").isdigit():
            arrows.add((int(k_str) % group.order, alpha))
        else:
            raise LiteralSyntaxError(kind="zero pattern", text=text, expected=expected)
    return frozenset(arrows)
