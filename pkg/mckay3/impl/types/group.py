from dataclasses import dataclass
from typing import Tuple
from mckay3.utils.errors import InputError
from mckay3.impl.types.validators import split_group_literal


class NotPrime(InputError):
    def message(self) -> str:
        return (f"group order {self.context['order']} is not prime; a cyclic group acting freely on "
                "C^3 minus the origin inside SL(3,C) must have prime order")


class DeterminantNotOne(InputError):
    def message(self) -> str:
        w = self.context["weights"]
        return f"weights {w} sum to {sum(w) % self.context['order']} mod {self.context['order']}, not 0 (det != 1)"


class NotFree(InputError):
    def message(self) -> str:
        return (f"w{self.context['position']}={self.context['value']} is 0 mod {self.context['order']}: "
                "the action fixes a coordinate axis and is not free")


class IndexOutOfRange(InputError):
    def message(self) -> str:
        return f"{self.context['name']}={self.context['value']} outside {self.context['allowed']}"


class LiteralSyntaxError(InputError):
    def message(self) -> str:
        return f"cannot parse {self.context['kind']} literal {self.context['text']!r}: expected {self.context['expected']}"


@dataclass(frozen=True)
class GroupAction:
    """The cyclic group 1/r(w1,w2,w3) acting diagonally on C^3.

    Build instances through `mckay3.impl.group.new_group` or `from_str`, which
    validate; the constructor itself trusts its arguments.
    """
    order: int
    weights: Tuple[int, int, int]

    @property
    def irreps(self) -> range:
        """Irr(G) as character exponents 0..r-1; 0 is the trivial class."""
        return range(self.order)

    @property
    def nontrivial_irreps(self) -> range:
        return range(1, self.order)

    def __str__(self) -> str:
        w1, w2, w3 = self.weights
        return f"1/{self.order}({w1},{w2},{w3})"

    @staticmethod
    def from_str(text: str) -> "GroupAction":
        parts = split_group_literal(text)
        if parts is None:
            raise LiteralSyntaxError(kind="group", text=text, expected='"1/r(w1,w2,w3)"')
        from mckay3.impl.group import new_group
        return new_group(*parts)
