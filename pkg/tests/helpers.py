#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Test helpers: random polynomials and sympy conversion.
"""

import sympy

from core.zpoly import IntPoly

X = sympy.Symbol("x")


def to_sympy(f):
    return sympy.Poly(list(reversed(f.coeffs)), X)


def random_monic(rng, degree, bound=9, nonzero_constant=True):
    """
    Monic IntPoly of the given degree with coefficients in [-bound, bound].
    """
    while True:
        lower = [int(c) for c in rng.integers(-bound, bound + 1, size=degree)]
        if nonzero_constant and lower[0] == 0:
            continue
        return IntPoly(lower + [1])


def random_poly(rng, degree, bound=9):
    """
    IntPoly of exactly the given degree.
    """
    coeffs = [int(c) for c in rng.integers(-bound, bound + 1, size=degree + 1)]
    if coeffs[-1] == 0:
        coeffs[-1] = 1
    return IntPoly(coeffs)
