#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Integer Polynomials

Exact dense univariate polynomials over the integers and the operations the
monogenity pipelines need: composition f(x^k), derivative, division by monic
divisors, pseudo-remainders, resultants by the subresultant PRS, the
discriminant and the magnitude of the discriminant of f(x^k).
"""

from dataclasses import dataclass
from math import gcd
from typing import Optional, Tuple

from .errors import DomainError


class IntPoly:
    """
    Immutable dense polynomial, constant term first.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = [int(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @classmethod
    def constant(cls, c):
        return cls([c])

    @classmethod
    def monomial(cls, n, c=1):
        return cls([0] * n + [c])

    @classmethod
    def x(cls):
        return cls([0, 1])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def lc(self):
        """
        Leading coefficient (0 for the zero polynomial).
        """
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def constant_term(self):
        return self.coeffs[0] if self.coeffs else 0

    def is_zero(self):
        return not self.coeffs

    def is_monic(self):
        return self.lc == 1

    def content(self):
        result = 0
        for c in self.coeffs:
            result = gcd(result, c)
        return result

    def primitive_part(self):
        """
        f / content(f) with positive leading coefficient.
        """
        if self.is_zero():
            return self
        c = self.content()
        if self.lc < 0:
            c = -c
        return IntPoly([a // c for a in self.coeffs])

    def scale(self, a):
        return IntPoly([a * c for c in self.coeffs])

    def exact_div(self, a):
        """
        Divide every coefficient by a, which must divide all of them.
        """
        if any(c % a for c in self.coeffs):
            raise DomainError(f"{a} does not divide {self.render()}")
        return IntPoly([c // a for c in self.coeffs])

    def shift(self, n):
        """
        Multiply by x^n.
        """
        if self.is_zero():
            return self
        return IntPoly([0] * n + list(self.coeffs))

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPoly.constant(other)
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("IntPoly", self.coeffs))

    def __neg__(self):
        return IntPoly([-c for c in self.coeffs])

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPoly.constant(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPoly([x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntPoly.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return IntPoly.constant(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if self.is_zero() or other.is_zero():
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise DomainError("negative polynomial power")
        result = IntPoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __call__(self, a):
        return evaluate(self, a)

    def render(self):
        """
        Canonical text form, e.g. "x^3 - 71*x^2 - 74*x - 1".
        """
        if self.is_zero():
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            magnitude = abs(c)
            if i == 0:
                body = str(magnitude)
            else:
                power = "x" if i == 1 else f"x^{i}"
                body = power if magnitude == 1 else f"{magnitude}*{power}"
            if not terms:
                terms.append(f"-{body}" if c < 0 else body)
            else:
                terms.append(f"- {body}" if c < 0 else f"+ {body}")
        return " ".join(terms)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"IntPoly({self.render()!r})"


def compose_power(f, k):
    """
    Build f(x^k).

    Raises:
        DomainError: If k < 1
    """
    if k < 1:
        raise DomainError(f"composition exponent must be positive, got {k}")
    if k == 1 or f.degree <= 0:
        return f
    out = [0] * (f.degree * k + 1)
    for i, c in enumerate(f.coeffs):
        out[i * k] = c
    return IntPoly(out)


def derivative(f):
    return IntPoly([i * c for i, c in enumerate(f.coeffs)][1:])


def divrem_monic(f, g):
    """
    Divide f by the monic polynomial g over the integers.

    Args:
        f: Dividend
        g: Monic divisor of degree >= 1

    Returns:
        (quotient, remainder) with f = g*q + r and deg r < deg g

    Raises:
        DomainError: If g is not monic or is constant
    """
    if g.degree < 1 or not g.is_monic():
        raise DomainError(f"divisor must be monic of positive degree, got {g.render()}")
    r = list(f.coeffs)
    dg = g.degree
    if len(r) - 1 < dg:
        return IntPoly(), f
    q = [0] * (len(r) - dg)
    for shift in range(len(r) - 1 - dg, -1, -1):
        c = r[shift + dg]
        if c == 0:
            continue
        q[shift] = c
        for j, b in enumerate(g.coeffs):
            r[shift + j] -= c * b
    return IntPoly(q), IntPoly(r[:dg])


def pseudo_remainder(a, b):
    """
    prem(a, b) = lc(b)^(deg a - deg b + 1) * a mod b, computed in Z[x].
    """
    if b.is_zero():
        raise DomainError("pseudo-remainder by zero")
    db = b.degree
    if a.degree < db:
        return a
    lb = b.lc
    e = a.degree - db + 1
    r = list(a.coeffs)
    while len(r) - 1 >= db and r:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [c * lb for c in r]
        for j, c in enumerate(b.coeffs):
            r[shift + j] -= lr * c
        while r and r[-1] == 0:
            r.pop()
        e -= 1
    return IntPoly(r).scale(lb ** e)


def resultant(f, g):
    """
    Resultant by the subresultant polynomial remainder sequence.

    Satisfies R(f, g) = lc(f)^deg(g) * prod g(roots of f).

    Raises:
        DomainError: If either input is the zero polynomial
    """
    if f.is_zero() or g.is_zero():
        raise DomainError("resultant of the zero polynomial")
    a, b = f, g
    if a.degree == 0:
        return a.lc ** b.degree
    if b.degree == 0:
        return b.lc ** a.degree

    s = 1
    if a.degree < b.degree:
        a, b = b, a
        if a.degree % 2 == 1 and b.degree % 2 == 1:
            s = -1

    ca, cb = a.content(), b.content()
    if a.lc < 0:
        ca = -ca
    if b.lc < 0:
        cb = -cb
    a = a.exact_div(ca)
    b = b.exact_div(cb)
    t = ca ** b.degree * cb ** a.degree

    g_coef, h = 1, 1
    while b.degree > 0:
        delta = a.degree - b.degree
        if a.degree % 2 == 1 and b.degree % 2 == 1:
            s = -s
        r = pseudo_remainder(a, b)
        if r.is_zero():
            return 0
        a = b
        b = r.exact_div(g_coef * h ** delta)
        g_coef = a.lc
        if delta:
            h = g_coef ** delta // h ** (delta - 1)
    h = b.lc ** a.degree // h ** (a.degree - 1)
    return s * t * h


def discriminant(f):
    """
    D(f) = (-1)^(n(n-1)/2) * R(f, f') for monic f of degree n >= 1.

    Raises:
        DomainError: If f is not monic or is constant
    """
    if f.degree < 1 or not f.is_monic():
        raise DomainError(f"discriminant needs a monic nonconstant polynomial, got {f.render()}")
    n = f.degree
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * resultant(f, derivative(f))


@dataclass(frozen=True)
class CompositionDiscriminant:
    """
    |D(f(x^l))| = |D(f)|^l * l^(d*l) * |f(0)|^(l-1).

    The sign is left undetermined; the proof's exponent
    (-1)^(dl(dl+1)/2 + l - 1) is not asserted here.

    Attributes:
        magnitude: The absolute value of the discriminant of f(x^l)
        base_discriminant: D(f)
        exponent: l
        degree: d
        constant_term: f(0)
        sign: Always None
    """
    magnitude: int
    base_discriminant: int
    exponent: int
    degree: int
    constant_term: int
    sign: Optional[int] = None

    def prime_support_terms(self) -> Tuple[int, int, int]:
        """
        The three integers whose prime divisors make up the support.
        """
        return self.base_discriminant, self.exponent, self.constant_term


def disc_power_composition(f, l):
    """
    Magnitude of D(f(x^l)) without expanding f(x^l).

    Raises:
        DomainError: If f is not monic, f(0) = 0 or l < 1
    """
    if l < 1:
        raise DomainError(f"composition exponent must be positive, got {l}")
    if f.constant_term == 0:
        raise DomainError("f(0) = 0: the composition is divisible by x")
    d_f = discriminant(f)
    d = f.degree
    magnitude = abs(d_f) ** l * l ** (d * l) * abs(f.constant_term) ** (l - 1)
    return CompositionDiscriminant(magnitude=magnitude, base_discriminant=d_f, exponent=l,
                                   degree=d, constant_term=f.constant_term)


def evaluate(f, a):
    """
    Horner evaluation f(a).
    """
    result = 0
    for c in reversed(f.coeffs):
        result = result * a + c
    return result


def evaluate_mod(f, a, m):
    """
    f(a) reduced to [0, m).
    """
    if m < 2:
        raise DomainError(f"modulus must be at least 2, got {m}")
    result = 0
    a %= m
    for c in reversed(f.coeffs):
        result = (result * a + c) % m
    return result


def primitive_gcd(f, g):
    """
    Greatest common divisor in Z[x] by the primitive PRS.

    Returns:
        gcd with positive leading coefficient
    """
    if f.is_zero():
        return g.primitive_part().scale(g.content()) if not g.is_zero() else g
    if g.is_zero():
        return f.primitive_part().scale(f.content())
    c = gcd(f.content(), g.content())
    a, b = f.primitive_part(), g.primitive_part()
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero():
        r = pseudo_remainder(a, b)
        a, b = b, (r.primitive_part() if not r.is_zero() else r)
    if a.degree == 0:
        return IntPoly.constant(c)
    return a.primitive_part().scale(c)
