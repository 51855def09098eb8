#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Polynomial Parser

Recursive descent parser for integer polynomials in the variable x.

Grammar:
    expr   := term (('+' | '-') term)*
    term   := unary (('*')? unary)*
    unary  := ('+' | '-') unary | power
    power  := atom ('^' INTEGER)?
    atom   := INTEGER | 'x' | '(' expr ')'

Juxtaposition ("2x", "3(x+1)") is read as a product.
"""

import logging
import re
from dataclasses import dataclass

from core.errors import PolyParseError
from core.zpoly import IntPoly

logger = logging.getLogger(__name__)

MAX_EXPONENT = 1_000_000

TOKEN_PATTERNS = [
    ("DECIMAL", r"[0-9]+\.[0-9]*|\.[0-9]+"),
    ("INTEGER", r"[0-9]+"),
    ("VARIABLE", r"x"),
    ("SYMBOL", r"[A-Za-z_][A-Za-z_0-9]*"),
    ("PLUS", r"\+"),
    ("MINUS", r"-"),
    ("TIMES", r"\*"),
    ("DIVIDE", r"/"),
    ("POWER", r"\^|\*\*"),
    ("LEFT_PAREN", r"\("),
    ("RIGHT_PAREN", r"\)"),
    ("SPACE", r"\s+"),
]
# "**" must win over "*"
_ORDERED = sorted(TOKEN_PATTERNS, key=lambda item: item[0] != "POWER")
TOKEN_REGEX = re.compile("|".join(f"(?P<{name}>{pattern})" for name, pattern in _ORDERED))


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    position: int


def tokenize(text):
    """
    Split text into tokens, dropping whitespace and appending an END token.

    Raises:
        PolyParseError: On a character outside the grammar, a non-integer
            coefficient or a variable other than x
    """
    tokens = []
    index = 0
    while index < len(text):
        match = TOKEN_REGEX.match(text, index)
        if not match:
            raise PolyParseError(f"unexpected character {text[index]!r}", index)
        kind = match.lastgroup
        if kind == "DECIMAL" or kind == "DIVIDE":
            raise PolyParseError("non-integer coefficient", index)
        if kind == "SYMBOL":
            raise PolyParseError(f"wrong variable {match.group()!r}, only x is allowed", index)
        if kind != "SPACE":
            tokens.append(Token(kind, match.group(), index))
        index = match.end()
    tokens.append(Token("END", "", len(text)))
    return tokens


class PolyParser:
    """
    Recursive descent parser over the token list of one expression.
    """

    def __init__(self, text):
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def token(self):
        return self.tokens[self.index]

    def peek(self, *kinds):
        return self.token.kind in kinds

    def accept(self, kind):
        if self.peek(kind):
            token = self.token
            self.index += 1
            return token
        return None

    def expect(self, kind, description):
        token = self.accept(kind)
        if token is None:
            raise self._error(f"expected {description}")
        return token

    def _error(self, message):
        found = "end of input" if self.token.kind == "END" else repr(self.token.text)
        return PolyParseError(f"{message}, found {found}", self.token.position)

    def parse(self):
        if self.peek("END"):
            raise self._error("expected a polynomial")
        poly = self.expr()
        if not self.peek("END"):
            raise self._error("expected an operator")
        return poly

    def expr(self):
        poly = self.term()
        while self.peek("PLUS", "MINUS"):
            if self.accept("PLUS"):
                poly = poly + self.term()
            else:
                self.accept("MINUS")
                poly = poly - self.term()
        return poly

    def term(self):
        poly = self.unary()
        while True:
            if self.accept("TIMES"):
                poly = poly * self.unary()
            elif self.peek("INTEGER", "VARIABLE", "LEFT_PAREN"):
                poly = poly * self.power()
            else:
                return poly

    def unary(self):
        if self.accept("MINUS"):
            return -self.unary()
        if self.accept("PLUS"):
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.accept("POWER"):
            if self.peek("MINUS"):
                raise self._error("exponent must be a nonnegative integer")
            token = self.expect("INTEGER", "an integer exponent")
            exponent = int(token.text)
            if exponent > MAX_EXPONENT:
                raise PolyParseError(f"exponent {exponent} exceeds {MAX_EXPONENT}", token.position)
            if self.peek("POWER"):
                raise self._error("chained exponents need parentheses")
            return base ** exponent
        return base

    def atom(self):
        token = self.accept("INTEGER")
        if token is not None:
            return IntPoly.constant(int(token.text))
        if self.accept("VARIABLE"):
            return IntPoly.x()
        if self.accept("LEFT_PAREN"):
            poly = self.expr()
            self.expect("RIGHT_PAREN", "')'")
            return poly
        raise self._error("expected an integer, x or '('")


@dataclass(frozen=True)
class PolyExpr:
    """
    A parsed polynomial together with the text it came from.
    """
    source: str
    poly: IntPoly

    @classmethod
    def parse(cls, text):
        return cls(text, parse_poly(text))

    @property
    def canonical(self):
        return self.poly.render()


def parse_poly(text):
    """
    Parse an integer polynomial in x.

    Args:
        text: Expression such as "x^3 - 71*x^2 - 74*x - 1"

    Returns:
        IntPoly

    Raises:
        PolyParseError: With the offending position
    """
    poly = PolyParser(text).parse()
    logger.debug(f"Poly Parser: {text!r} -> {poly.render()}")
    return poly
