"""Exact elements of the cyclotomic field Q(zeta_r), r prime.

An element is stored as its r-1 coordinates in the basis 1, zeta, ...,
zeta^(r-2) of Q[x]/Phi_r(x). Since Phi_r is irreducible this representation
is unique, so equality is coordinatewise. Products and inverses are taken in
sympy's polynomial ring QQ[x] modulo Phi_r.
"""
import cmath
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence, Tuple, Union
from sympy import QQ, Poly, cyclotomic_poly
from sympy.abc import x
from mckay3.utils.errors import AlarmError

Scalar = Union[int, Fraction]


class DivisionByZero(AlarmError):
    def message(self) -> str:
        return f"cannot invert 0 in Q(zeta_{self.context['order']})"


class FieldMismatch(AlarmError):
    def message(self) -> str:
        return f"cannot combine elements of Q(zeta_{self.context['left']}) and Q(zeta_{self.context['right']})"


@lru_cache(maxsize=None)
def cyclotomic_modulus(order: int) -> Poly:
    """Phi_r as a polynomial over QQ."""
    return Poly(cyclotomic_poly(order, x), x, domain=QQ)


def _to_poly(coefficients: Sequence[Fraction]) -> Poly:
    # Poly.from_list wants the leading coefficient first
    terms = [QQ(int(c.numerator), int(c.denominator)) for c in reversed(coefficients)] or [QQ(0)]
    return Poly.from_list(terms, x, domain=QQ)


def _from_poly(order: int, p: Poly) -> "CyclotomicNumber":
    reduced = p.rem(cyclotomic_modulus(order))
    coefficients = [Fraction(int(c.p), int(c.q)) for c in reversed(reduced.all_coeffs())]
    coefficients += [Fraction(0)] * (order - 1 - len(coefficients))
    return CyclotomicNumber(order, tuple(coefficients))


@dataclass(frozen=True)
class CyclotomicNumber:
    order: int
    coefficients: Tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coefficients) != self.order - 1:
            raise ValueError(f"expected {self.order - 1} coefficients, got {len(self.coefficients)}")

    # -- construction -----------------------------------------------------

    @staticmethod
    def from_cyclic(order: int, values: Sequence[Scalar]) -> "CyclotomicNumber":
        """Reduce a vector over 1, zeta, ..., zeta^(r-1) (any length) to canonical form.

        Exponents are first folded mod r, then zeta^(r-1) is rewritten as
        -(1 + zeta + ... + zeta^(r-2)).
        """
        full = [Fraction(0)] * order
        for i, v in enumerate(values):
            if v:
                full[i % order] += v
        top = full[order - 1]
        return CyclotomicNumber(order, tuple(full[i] - top for i in range(order - 1)))

    @staticmethod
    def rational(order: int, value: Scalar) -> "CyclotomicNumber":
        return CyclotomicNumber.from_cyclic(order, [Fraction(value)])

    @staticmethod
    def root(order: int, k: int) -> "CyclotomicNumber":
        """zeta^k"""
        values = [0] * order
        values[k % order] = 1
        return CyclotomicNumber.from_cyclic(order, values)

    # -- queries ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coefficients)

    def rational_value(self) -> Optional[Fraction]:
        if any(self.coefficients[1:]):
            return None
        return self.coefficients[0]

    def to_complex(self) -> complex:
        """Float evaluation at zeta = exp(2 pi i / r); for cross-checks only."""
        z = cmath.exp(2j * cmath.pi / self.order)
        return sum(float(c) * z ** i for i, c in enumerate(self.coefficients) if c)

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other: Union["CyclotomicNumber", Scalar]) -> "CyclotomicNumber":
        if isinstance(other, CyclotomicNumber):
            if other.order != self.order:
                raise FieldMismatch(left=self.order, right=other.order)
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber.rational(self.order, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CyclotomicNumber(self.order, tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.order, tuple(-a for a in self.coefficients))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber(self.order, tuple(a * other for a in self.coefficients))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return _from_poly(self.order, self.as_poly() * other.as_poly())

    __rmul__ = __mul__

    def times_root(self, k: int) -> "CyclotomicNumber":
        """Multiply by zeta^k; a rotation in the cyclic basis."""
        r = self.order
        full = [Fraction(0)] * r
        for i, a in enumerate(self.coefficients):
            full[(i + k) % r] = a
        return CyclotomicNumber.from_cyclic(r, full)

    def as_poly(self) -> Poly:
        """The representative of degree < r-1 in QQ[x]."""
        return _to_poly(self.coefficients)

    def inverse(self) -> "CyclotomicNumber":
        """Inverse modulo Phi_r; exists for every nonzero element since Phi_r is irreducible."""
        if self.is_zero():
            raise DivisionByZero(order=self.order)
        return _from_poly(self.order, self.as_poly().invert(cyclotomic_modulus(self.order)))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise DivisionByZero(order=self.order)
            return self * (1 / Fraction(other))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coefficients):
            if not c:
                continue
            mono = "" if i == 0 else ("z" if i == 1 else f"z^{i}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append(f"-{mono}")
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"
