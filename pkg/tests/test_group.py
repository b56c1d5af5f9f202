import cmath
from fractions import Fraction
from itertools import product
import pytest
from hypothesis import given, settings, strategies as st
from mckay3.impl.group import (
    all_groups, alternating_character_sum, character, cyc_add, cyc_inv, cyc_mul, det_identity, det_one_minus,
    equivalent_presentations, is_prime, is_rational, new_group, to_complex,
)
from sympy import cyclotomic_poly, isprime
from sympy.abc import x
from mckay3.impl.types.cyclotomic import CyclotomicNumber, DivisionByZero, FieldMismatch, cyclotomic_modulus
from mckay3.impl.types.group import DeterminantNotOne, GroupAction, LiteralSyntaxError, NotFree, NotPrime

pytestmark = pytest.mark.unit

PRIMES = [3, 5, 7]

rationals = st.fractions(min_value=-6, max_value=6, max_denominator=7)


@st.composite
def field_elements(draw, order: int):
    return CyclotomicNumber(order, tuple(draw(st.lists(rationals, min_size=order - 1, max_size=order - 1))))


@st.composite
def element_triples(draw):
    r = draw(st.sampled_from(PRIMES))
    return r, draw(field_elements(r)), draw(field_elements(r)), draw(field_elements(r))


# -- validation ------------------------------------------------------------


def test_new_group_valid():
    g = new_group(3, 1, 1, 1)
    assert g.order == 3 and g.weights == (1, 1, 1)
    assert str(g) == "1/3(1,1,1)"
    assert new_group(7, 1, 2, 4).weights == (1, 2, 4)


def test_new_group_reduces_weights():
    assert new_group(5, 6, -3, 2).weights == (1, 2, 2)


def test_new_group_not_free():
    with pytest.raises(NotFree) as e:
        new_group(2, 1, 1, 0)
    assert e.value.message().startswith("w3=0 is 0 mod 2")
    with pytest.raises(NotFree) as e:
        new_group(5, 2, 10, -12)
    assert e.value.context["position"] == 2
    assert "w2=10 is 0 mod 5" in e.value.message()


def test_new_group_not_prime():
    with pytest.raises(NotPrime):
        new_group(4, 1, 1, 2)


def test_new_group_determinant():
    with pytest.raises(DeterminantNotOne):
        new_group(5, 1, 1, 1)


@pytest.mark.parametrize("text", ["1/3(1,1)", "3(1,1,1)", "1/x(1,1,1)", ""])
def test_from_str_syntax(text):
    with pytest.raises(LiteralSyntaxError):
        GroupAction.from_str(text)


def test_from_str_accepts_unicode_minus():
    assert GroupAction.from_str("1/5(1,−3,2)").weights == (1, 2, 2)


@pytest.mark.slow
def test_validation_is_exact_over_small_orders():
    for r in range(2, 14):
        for w in product(range(r), repeat=3):
            expected = is_prime(r) and all(v != 0 for v in w) and sum(w) % r == 0
            try:
                new_group(r, *w)
                accepted = True
            except (NotPrime, NotFree, DeterminantNotOne):
                accepted = False
            assert accepted == expected, (r, w)


def test_all_groups_matches_validation():
    for r in [3, 5, 7, 11]:
        groups = all_groups(r)
        assert len(groups) == (r - 1) * (r - 2)
        for g in groups:
            assert new_group(g.order, *g.weights) == g
    assert all_groups(9) == []


def test_equivalent_presentations():
    presentations = equivalent_presentations(new_group(3, 1, 1, 1))
    assert presentations == [(1, 1, 1), (2, 2, 2)]
    found = equivalent_presentations(new_group(7, 1, 2, 4))
    assert (1, 2, 4) in found and (3, 6, 5) in found
    assert found == sorted(found)


# -- characters ------------------------------------------------------------


def test_character_values():
    g = new_group(3, 1, 1, 1)
    assert character(g, 0, 2) == CyclotomicNumber.rational(3, 1)
    assert character(g, 1, 1) == CyclotomicNumber.root(3, 1)
    assert character(g, 2, 2) == CyclotomicNumber.root(3, 1)
    assert abs(to_complex(character(g, 2, 2)) - cmath.exp(2j * cmath.pi / 3)) < 1e-12


@pytest.mark.parametrize("r", PRIMES)
def test_character_inverse_and_float_value(r):
    g = all_groups(r)[0]
    one = CyclotomicNumber.rational(r, 1)
    for k, j in product(range(r), repeat=2):
        assert character(g, k, j) * character(g, r - k, j) == one
        assert abs(to_complex(character(g, k, j)) - cmath.exp(2j * cmath.pi * k * j / r)) < 1e-12


@pytest.mark.parametrize("r", PRIMES)
def test_alternating_sum_is_det(r):
    for g in all_groups(r):
        for j in range(r):
            assert det_identity(g, j)
    g = all_groups(r)[0]
    assert alternating_character_sum(g, 0) == det_one_minus(g, 0) == CyclotomicNumber.rational(r, 0)


# -- field arithmetic ------------------------------------------------------


def test_field_examples():
    z = CyclotomicNumber.root(3, 1)
    assert cyc_mul(z, CyclotomicNumber.root(3, 2)) == CyclotomicNumber.rational(3, 1)
    product_ = cyc_mul(1 - z, 1 - CyclotomicNumber.root(3, 2))
    assert is_rational(product_) == 3
    assert abs(to_complex(product_) - 3) < 1e-12

    w = CyclotomicNumber.root(5, 1)
    assert cyc_mul(cyc_inv(1 - w), 1 - w) == CyclotomicNumber.rational(5, 1)


def test_is_rational():
    assert is_rational(CyclotomicNumber.rational(3, 3)) == 3
    assert is_rational(CyclotomicNumber.root(3, 1)) is None
    phi = cyc_add(cyc_add(CyclotomicNumber.rational(3, 1), CyclotomicNumber.root(3, 1)), CyclotomicNumber.root(3, 2))
    assert is_rational(phi) == 0


def test_inverse_of_zero():
    with pytest.raises(DivisionByZero):
        cyc_inv(CyclotomicNumber.rational(5, 0))
    with pytest.raises(DivisionByZero):
        CyclotomicNumber.root(5, 1) / 0


def test_mixed_fields_are_rejected():
    with pytest.raises(FieldMismatch):
        CyclotomicNumber.root(3, 1) + CyclotomicNumber.root(5, 1)


def test_scalar_division():
    z = CyclotomicNumber.root(5, 2)
    assert (z / 4) * 4 == z
    assert (z / Fraction(2, 3)).coefficients[2] == Fraction(3, 2)


def test_str():
    assert str(CyclotomicNumber.rational(3, 0)) == "0"
    assert str(CyclotomicNumber.from_cyclic(5, [1, -1, 0, 2])) == "1 - z + 2*z^3"


@settings(max_examples=60, deadline=None)
@given(element_triples())
def test_field_axioms(triple):
    r, a, b, c = triple
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == CyclotomicNumber.rational(r, 0)
    if not a.is_zero():
        assert a * a.inverse() == CyclotomicNumber.rational(r, 1)
        assert (b / a) * a == b


@settings(max_examples=40, deadline=None)
@given(element_triples())
def test_float_evaluation_is_a_ring_map(triple):
    _, a, b, _ = triple
    assert abs(to_complex(a * b) - to_complex(a) * to_complex(b)) < 1e-9 * (1 + abs(to_complex(a)) * abs(to_complex(b)))


def test_is_prime_agrees_with_sympy():
    assert [n for n in range(-3, 40) if is_prime(n)] == [n for n in range(2, 40) if isprime(n)]
    assert is_prime(2 ** 31 - 1)
    assert not is_prime(7919 * 7927)


@pytest.mark.parametrize("r", [3, 5, 7, 11, 13])
def test_modulus_is_the_cyclotomic_polynomial(r):
    phi = cyclotomic_modulus(r)
    assert phi.degree() == r - 1
    assert phi.as_expr().equals(cyclotomic_poly(r, x))
    assert all(c == 1 for c in phi.all_coeffs())


@pytest.mark.parametrize("r", [5, 7, 11])
def test_products_and_inverses_reduce_modulo_phi(r):
    one_minus = 1 - CyclotomicNumber.root(r, 1)
    inv = one_minus.inverse()
    assert one_minus * inv == CyclotomicNumber.rational(r, 1)
    assert abs(to_complex(inv) - 1 / (1 - cmath.exp(2j * cmath.pi / r))) < 1e-12
    # norm of 1 - zeta is r
    norm = CyclotomicNumber.rational(r, 1)
    for k in range(1, r):
        norm = norm * (1 - CyclotomicNumber.root(r, k))
    assert norm == CyclotomicNumber.rational(r, r)
    assert one_minus.as_poly().rem(cyclotomic_modulus(r)) == one_minus.as_poly()


def test_top_power_wraps_through_phi():
    z = CyclotomicNumber.root(5, 1)
    assert z * CyclotomicNumber.root(5, 3) == CyclotomicNumber(5, (Fraction(-1),) * 4)
    assert (z * z * z * z * z) == CyclotomicNumber.rational(5, 1)
