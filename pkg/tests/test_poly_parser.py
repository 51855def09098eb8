#!/usr/bin/env python
# -*- coding: utf-8 -*-
import pytest

from core.errors import DomainError, PolyParseError
from core.zpoly import IntPoly
from utils.poly_parser import MAX_EXPONENT, PolyExpr, parse_poly, tokenize


@pytest.mark.parametrize("text, coeffs", [
    ("x^2 - x - 1", (-1, -1, 1)),
    ("x^3 - 71*x^2 - 74*x - 1", (-1, -74, -71, 1)),
    ("x - 12", (-12, 1)),
    ("x**2+3", (3, 0, 1)),
    ("2x^2 + 3x", (0, 3, 2)),
    ("-x^2 + 1", (1, 0, -1)),
    ("(x+1)^3", (1, 3, 3, 1)),
    ("3(x - 1)(x + 1)", (-3, 0, 3)),
    ("x^4 + 0*x + 7", (7, 0, 0, 0, 1)),
    ("2^3 x", (0, 8)),
    ("--x", (0, 1)),
    ("  x  ", (0, 1)),
    ("x - x", ()),
])
def test_parse(text, coeffs):
    assert parse_poly(text).coeffs == coeffs


def test_large_coefficients():
    f = parse_poly("x^2 - 123456789012345678901234567890")
    assert f.constant_term == -123456789012345678901234567890


@pytest.mark.parametrize("text, position, fragment", [
    ("x^2+y", 4, "wrong variable"),
    ("1.5*x", 0, "non-integer"),
    ("x/2", 1, "non-integer"),
    ("x^", 2, "integer exponent"),
    ("(x+1", 4, "')'"),
    ("", 0, "expected a polynomial"),
    ("x +", 3, "end of input"),
    ("x)", 1, "operator"),
    ("x^-1", 2, "nonnegative"),
    ("x^2^3", 3, "chained"),
    ("x # 1", 2, "unexpected character"),
])
def test_errors(text, position, fragment):
    with pytest.raises(PolyParseError) as info:
        parse_poly(text)
    assert info.value.position == position
    assert fragment in info.value.message


def test_exponent_limit():
    with pytest.raises(PolyParseError) as info:
        parse_poly(f"x^{MAX_EXPONENT + 1}")
    assert info.value.position == 2


def test_parse_error_is_domain_error():
    with pytest.raises(DomainError):
        parse_poly("y")


def test_tokenize():
    kinds = [token.kind for token in tokenize("2x**3 - (x)")]
    assert kinds == ["INTEGER", "VARIABLE", "POWER", "INTEGER", "MINUS", "LEFT_PAREN", "VARIABLE", "RIGHT_PAREN",
                     "END"]


def test_poly_expr():
    expr = PolyExpr.parse(" x^2 -x- 1 ")
    assert expr.source == " x^2 -x- 1 "
    assert expr.poly == IntPoly([-1, -1, 1])
    assert expr.canonical == "x^2 - x - 1"
