"""Expression parser: accepted grammar, rejections, canonical output."""

from fractions import Fraction

import pytest

from hawaii.parsing import (
    FunctionExpr,
    ParseError,
    format_function,
    format_poly,
    parse,
    parse_polynomial,
)
from hawaii.polys import Poly


def P(*cs):
    return Poly(cs)


# -- accepted inputs ----------------------------------------------------------


@pytest.mark.parametrize("text,coeffs,a,b", [
    ("z", (0, 1), 0, 0),
    ("z^2+1", (1, 0, 1), 0, 0),
    ("  z ^ 2  +  1 ", (1, 0, 1), 0, 0),
    ("-z^2+1", (1, 0, -1), 0, 0),
    ("- z + 3", (3, -1), 0, 0),
    ("2z", (0, 2), 0, 0),
    ("3(z+1)", (3, 3), 0, 0),
    ("(z+1)(z-1)", (-1, 0, 1), 0, 0),
    ("7/2*z^3 - z", (0, -1, 0, Fraction(7, 2)), 0, 0),
    ("(z^2+1)*exp(-z^2+3*z)", (1, 0, 1), 1, 3),
    ("exp(-1/2*z^2 + 1/3*z)", (1,), Fraction(1, 2), Fraction(1, 3)),
    ("(z-1)^2*exp(2*z)", (1, -2, 1), 0, 2),
    ("exp(-z^2)", (1,), 1, 0),
])
def test_parse_accepts(text, coeffs, a, b):
    f = parse(text)
    assert f.p == P(*coeffs)
    assert f.a == Fraction(a)
    assert f.b == Fraction(b)
    assert f.source == text


def test_parse_edwards_product():
    f = parse("z*(z^2-1/4)*(z^2+1)^25")
    assert f.p == P(0, 1) * P(Fraction(-1, 4), 0, 1) * P(1, 0, 1) ** 25
    assert f.p.degree == 53
    assert f.a == 0 and f.b == 0


def test_lpstar_bridge():
    g = parse("(z^2+1)*exp(-z^2+3*z)").lpstar()
    assert g.p == P(1, 0, 1)
    assert g.a == 1 and g.b == 3


# -- rejected inputs ----------------------------------------------------------


@pytest.mark.parametrize("text,pos,fragment", [
    ("", 0, "expected a coefficient"),
    ("0", 0, "zero polynomial"),
    ("5", 0, "constant times exp(b*z) is excluded"),
    ("3*exp(2*z)", 0, "constant times exp(b*z) is excluded"),
    ("exp(-0*z^2 + 2*z)", 0, "constant times exp(b*z) is excluded"),
    ("exp(z^2)", 4, "positive z^2 coefficient"),
    ("exp(-z^2+1)", 4, "constant term in the exponent"),
    ("exp(-z^3)", 4, "degree at most 2, got 3"),
    ("z^-2", 2, "negative exponents"),
    ("1/0 + z", 2, "division by zero"),
    ("(z+1", 4, "closing parenthesis"),
    ("z^2 exp(-z^2)", 4, "expected '*' before the exponential"),
    ("z^2+1)", 5, "trailing input"),
    ("z + w", 4, "unknown symbol 'w'"),
    ("z^2 @ 1", 4, "unexpected character '@'"),
])
def test_parse_rejects(text, pos, fragment):
    with pytest.raises(ParseError) as ei:
        parse(text)
    assert ei.value.pos == pos
    assert fragment in ei.value.message


def test_error_pretty_has_caret():
    with pytest.raises(ParseError) as ei:
        parse("z + w")
    lines = ei.value.pretty().splitlines()
    assert lines[1] == "  z + w"
    assert lines[2] == "      ^"


def test_parse_polynomial_rejects_exponential():
    assert parse_polynomial("z^3 - 3z + 10") == P(10, -3, 0, 1)
    with pytest.raises(ParseError):
        parse_polynomial("(z^2+1)*exp(-z^2)")
    with pytest.raises(ParseError, match="zero polynomial"):
        parse_polynomial("z - z")


# -- canonical text -----------------------------------------------------------


def test_format_poly():
    assert format_poly(P(10, -3, 0, 1)) == "z^3 - 3*z + 10"
    assert format_poly(P(1, 0, -1)) == "-z^2 + 1"
    assert format_poly(P(0, Fraction(7, 2))) == "7/2*z"
    assert format_poly(P(-4,)) == "-4"


def test_format_function_gaussian_part():
    s = format_function(P(1, 0, 1), Fraction(1, 2), Fraction(-1, 3))
    assert s == "(z^2 + 1)*exp(-1/2*z^2 - 1/3*z)"
    assert format_function(P(1, 0, 1), Fraction(0), Fraction(0)) == "z^2 + 1"


@pytest.mark.parametrize("text", [
    "z^2+1",
    "(z+1)(z-1)",
    "7/2*z^3 - z",
    "(z^2+1)*exp(-z^2+3*z)",
    "exp(-1/2*z^2 + 1/3*z)",
    "(z-1)^2*exp(2*z)",
    "z*(z^2-1/4)*(z^2+1)^25",
])
def test_canonical_round_trip(text):
    f = parse(text)
    g = parse(f.canonical())
    assert (g.p, g.a, g.b) == (f.p, f.a, f.b)
    assert g.canonical() == f.canonical()


def test_repr_shows_canonical_form():
    assert repr(parse("2z")) == "FunctionExpr('2*z')"
    assert isinstance(parse("2z"), FunctionExpr)
