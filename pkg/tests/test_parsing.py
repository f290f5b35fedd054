import pytest
from hypothesis import given

from ncsphere.ncalg import Element, Monomial, a, one, x_minus, x_plus, z, zero
from ncsphere.parsing import ParseError, parse_expr, print_b_expr, print_expr
from ncsphere.scalars import ExponentOverflowError, GaussQ, Scalar

from tests.strategies import elements


def test_commutation_relation_parses_to_zero():
    assert parse_expr("a b - q b a") == zero


def test_sphere_relation_parses_to_one():
    assert parse_expr("a a' + b b'") == one


def test_fraction_round_trip_text():
    assert print_expr(parse_expr("(1/2) i a^2")) == "(1/2) i a^2"


def test_print_sorted_by_length_then_exponents():
    f = parse_expr("a^2 + b + 3 + a")
    assert print_expr(f) == "3 + b + a + a^2"


def test_print_negative_leading_term():
    f = parse_expr("-a")
    assert print_expr(f) == "-a"
    assert parse_expr(print_expr(f)) == f


def test_q_powers():
    assert parse_expr("q^2 q'^3") == Element.scalar(Scalar.lam(-1))
    assert print_expr(parse_expr("q'^2 b")) == "q'^2 b"


def test_compound_coefficient_is_parenthesized():
    f = parse_expr("(q + 2 i q' + 1/3) a")
    assert print_expr(f) == "(2 i q' + (1/3) + q) a"
    assert parse_expr(print_expr(f)) == f


def test_exponent_on_group():
    assert parse_expr("(a + b)^2") == parse_expr("a^2 + a b + b a + b^2")


def test_zero_prints_as_zero():
    assert print_expr(zero) == "0"
    assert parse_expr("0") == zero


@given(elements)
def test_round_trip(f):
    assert parse_expr(print_expr(f)) == f


@pytest.mark.parametrize(
    "text, pos",
    [("a +", 3), ("b (a", 4), ("a ^ b", 4), ("a x", 2), ("1/0", 2), ("i'", 0), (")", 0)],
)
def test_syntax_errors_carry_position(text, pos):
    with pytest.raises(ParseError) as err:
        parse_expr(text)
    assert err.value.pos == pos


def test_exponent_overflow():
    with pytest.raises(ExponentOverflowError):
        parse_expr("a^2147483648")
    with pytest.raises(ExponentOverflowError):
        parse_expr("a^2147483647 a")
    assert next(iter(parse_expr("a^2147483647").keys())) == Monomial(2**31 - 1)


def test_b_alphabet():
    assert print_b_expr(z) == "z"
    assert print_b_expr(x_plus) == "x+"
    assert print_b_expr(x_minus * x_minus) == "x-^2"
    assert print_b_expr(one - z) == "1 - z"
    assert print_b_expr(z * x_plus + x_plus * x_plus) == "x+^2 + z x+"
    with pytest.raises(ValueError):
        print_b_expr(a)
