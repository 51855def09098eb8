#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Errors

Exception hierarchy shared by the arithmetic core, the parser and the CLI.
"""


class MonocheckError(Exception):
    """
    Base class for all errors raised by monocheck.
    """


class DomainError(MonocheckError, ValueError):
    """
    An operation was called outside its domain (zero input, non-monic
    divisor, composite modulus, invalid family parameters, ...).
    """


class ArithmeticInvariantError(MonocheckError, ArithmeticError):
    """
    An exactness guarantee failed. This always means an arithmetic bug.
    """


class PolyParseError(DomainError):
    """
    Syntax error in a polynomial expression.
    """

    def __init__(self, message, position):
        """
        Initialize the parse error.

        Args:
            message: Human readable description
            position: Zero-based character offset of the offending token
        """
        super().__init__(f"{message} at position {position}")
        self.message = message
        self.position = position


class ConfigError(DomainError):
    """
    Invalid configuration value.
    """
