from decimal import Decimal, getcontext
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from helpers import formal_reals, rational, vectors
from pogroups.errors import InputError, ParseError
from pogroups.formal import (
    FormalReal,
    fr_add,
    fr_dot,
    fr_negate,
    fr_scale,
    fr_sign,
    functional,
    parse_formal,
    squarefree_decompose,
)

r2, r3, r5 = (FormalReal.sqrt(d) for d in (2, 3, 5))
one = FormalReal.rational(1)


def decimal_value(x: FormalReal, digits=120):
    """Independent oracle: evaluate with the decimal module at high precision."""
    getcontext().prec = digits
    total = Decimal(0)
    for d, q in x.terms.items():
        total += Decimal(q.numerator) / Decimal(q.denominator) * Decimal(d).sqrt()
    return total


def test_arithmetic_examples():
    assert fr_add(one - r2, r2) == 1
    assert fr_scale(one + r2, 0).is_zero()
    assert (r2 + r3) + (r2 - r3) == FormalReal.sqrt(2, 2)
    assert fr_negate(r2) == FormalReal.sqrt(2, -1)


def test_sign_examples():
    assert fr_sign(one - r2) == -1
    assert fr_sign(r2 + r3 - r5) == 1
    assert fr_sign(FormalReal()) == 0


def test_sign_of_close_values():
    # sqrt2 + sqrt3 ~ 3.1462643699, 3.146264369941972 ~ just above
    x = r2 + r3 - FormalReal.rational(Fraction(3146264369941972, 10**15))
    assert fr_sign(x) == (1 if decimal_value(x) > 0 else -1)


def test_dot_examples():
    f = functional([1, r2])
    assert fr_dot(f, (1, -1)) == one - r2
    assert fr_dot(f, (0, 0)).is_zero()
    assert fr_dot(functional([r2, r3]), (3, -2)) == FormalReal.sqrt(2, 3) - FormalReal.sqrt(3, 2)


def test_dot_length_mismatch():
    with pytest.raises(InputError):
        fr_dot(functional([1, 2]), (1,))


def test_radicands_are_reduced():
    assert FormalReal.sqrt(8) == FormalReal.sqrt(2, 2)
    assert FormalReal.sqrt(9) == 3
    assert squarefree_decompose(72) == (6, 2)


def test_products_close_over_the_basis():
    assert r2 * r2 == 2
    assert r2 * r3 == FormalReal.sqrt(6)
    assert (one + r2) * (one - r2) == -1


@settings(max_examples=300)
@given(formal_reals())
def test_sign_matches_decimal_oracle(x):
    s = fr_sign(x)
    if x.is_zero():
        assert s == 0
    else:
        v = decimal_value(x)
        assert s == (1 if v > 0 else -1)


@given(formal_reals(), rational.filter(bool))
def test_sign_symmetries(x, q):
    assert fr_sign(-x) == -fr_sign(x)
    assert fr_sign(x.scale(q)) == (1 if q > 0 else -1) * fr_sign(x)


@given(formal_reals())
def test_zero_test_is_symbolic(x):
    assert (fr_sign(x) == 0) == (not x.terms)


@given(formal_reals(), formal_reals())
def test_addition_is_commutative_and_invertible(x, y):
    assert x + y == y + x
    assert (x + y) - y == x


@given(
    st.lists(formal_reals(max_terms=2), min_size=3, max_size=3),
    vectors(3),
    vectors(3),
    rational,
    rational,
)
def test_dot_is_linear(f, u, w, a, b):
    combo = tuple(a * x + b * y for x, y in zip(u, w))
    assert fr_dot(f, combo) == fr_dot(f, u).scale(a) + fr_dot(f, w).scale(b)


@given(formal_reals())
def test_text_round_trip(x):
    assert parse_formal(str(x)) == x


def test_format_has_explicit_coefficients():
    assert str(one - r2) == "1-1*sqrt2"
    assert str(FormalReal()) == "0"
    assert str(FormalReal({1: 1, 2: 2, 5: Fraction(-1, 3)})) == "1+2*sqrt2-1/3*sqrt5"


@pytest.mark.parametrize(
    "text, expected",
    [
        ("sqrt2", r2),
        ("-sqrt3+1", one - r3),
        ("1+sqrt8", one + FormalReal.sqrt(2, 2)),
        ("3/4*sqrt5", FormalReal.sqrt(5, Fraction(3, 4))),
        ("2sqrt2", FormalReal.sqrt(2, 2)),
        ("sqrt0", FormalReal()),
        ("0", FormalReal()),
    ],
)
def test_parse(text, expected):
    assert parse_formal(text) == expected


@pytest.mark.parametrize("text", ["", "sqrt", "1+", "*sqrt2", "1**sqrt2", "1/0", "abc", "1 2"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_formal(text)


def test_enclosure_contains_value():
    x = r2 + r3 - r5
    lo, hi = x.enclosure(40)
    v = decimal_value(x)
    assert Decimal(lo.numerator) / lo.denominator <= v <= Decimal(hi.numerator) / hi.denominator
    assert x.to_decimal(30).startswith("0.9")
