#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Ideal Membership Tests

Membership of an integer polynomial in <p, g^2>, <p^2, g> and the square
of the maximal ideal <p, g> of Z[x], and the per-prime index test of a
monic polynomial in two independent formulations: the remainder form
(primary) and the classical M(x) form (used as an oracle).
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from .errors import DomainError
from .intfactor import is_prime
from .irreducibility import is_eisenstein_at
from .modpoly import ModPoly, factor_mod_p, gcd_mod_p, is_irreducible_mod_p, multiple_factors_mod_p
from .zpoly import IntPoly, divrem_monic

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MaximalIdealSpec:
    """
    The maximal ideal <p, g(x)> of Z[x].

    Attributes:
        p: Prime
        g: Monic IntPoly, irreducible modulo p
    """
    p: int
    g: IntPoly

    def validate(self):
        """
        Raises:
            DomainError: If p is not prime or g is not monic and
                irreducible modulo p
        """
        if not is_prime(self.p):
            raise DomainError(f"{self.p} is not prime")
        if self.g.degree < 1 or not self.g.is_monic():
            raise DomainError(f"{self.g.render()} is not monic of positive degree")
        if not is_irreducible_mod_p(ModPoly.from_intpoly(self.g, self.p)):
            raise DomainError(f"{self.g.render()} is not irreducible modulo {self.p}")
        return self


def in_p_g2(f, spec):
    """
    f in <p, g^2>, i.e. g^2 divides f modulo p.
    """
    spec.validate()
    p = spec.p
    g_bar = ModPoly.from_intpoly(spec.g, p)
    return (ModPoly.from_intpoly(f, p) % (g_bar * g_bar)).is_zero()


def in_p2_g(f, spec):
    """
    f in <p^2, g>, i.e. the remainder of f by g is divisible by p^2.
    """
    spec.validate()
    _, remainder = divrem_monic(f, spec.g)
    modulus = spec.p * spec.p
    return all(c % modulus == 0 for c in remainder.coeffs)


def in_maximal_square(f, spec):
    """
    f in <p, g>^2 = <p^2, g> intersected with <p, g^2>.
    """
    return in_p2_g(f, spec) and in_p_g2(f, spec)


def square_decomposition_test(f, spec):
    """
    Direct membership test for <p, g>^2.

    Writes f = g^2*q + g*u + v with deg u, v < deg g and requires u = 0 mod p
    and v = 0 mod p^2.
    """
    spec.validate()
    p = spec.p
    q1, v = divrem_monic(f, spec.g)
    _, u = divrem_monic(q1, spec.g)
    return all(c % p == 0 for c in u.coeffs) and all(c % (p * p) == 0 for c in v.coeffs)


@dataclass(frozen=True)
class IndexTest:
    """
    Result of a per-prime index test.

    Attributes:
        divides: Whether p divides the index of f
        witness: Monic lift of a multiple factor g with f in <p, g>^2
    """
    divides: bool
    witness: Optional[IntPoly] = None

    def __iter__(self):
        return iter((self.divides, self.witness))


def divides_index(f, p):
    """
    Does p divide the index of the order generated by a root of f?

    Args:
        f: Monic IntPoly (irreducibility is the caller's business)
        p: Prime

    Returns:
        IndexTest, unpackable as (divides, witness)
    """
    if not f.is_monic():
        raise DomainError(f"index test needs a monic polynomial, got {f.render()}")
    if is_eisenstein_at(f, p):
        return IndexTest(False)
    for g_bar, _ in multiple_factors_mod_p(ModPoly.from_intpoly(f, p)):
        g = g_bar.to_intpoly()
        _, remainder = divrem_monic(f, g)
        if all(c % (p * p) == 0 for c in remainder.coeffs):
            logger.debug(f"Ideal Test: {p} divides the index of {f.render()}, witness {g.render()}")
            return IndexTest(True, g)
    return IndexTest(False)


@dataclass(frozen=True)
class DedekindDetails:
    """
    Intermediate data of the M(x) formulation.

    Attributes:
        factors: Lifted factorization of f modulo p as (g_i, e_i)
        m_bar: M(x) = (f - prod g_i^e_i)/p reduced modulo p
        blocking: Factors with e_i > 1 sharing a factor with M modulo p
    """
    factors: List[Tuple[IntPoly, int]]
    m_bar: ModPoly
    blocking: List[IntPoly] = field(default_factory=list)


def dedekind_M_form(f, p):
    """
    Classical Dedekind criterion.

    Returns:
        (divides, DedekindDetails)
    """
    if not f.is_monic():
        raise DomainError(f"Dedekind criterion needs a monic polynomial, got {f.render()}")
    factorization = [(g_bar.to_intpoly(), e) for g_bar, e in factor_mod_p(ModPoly.from_intpoly(f, p))]
    product = IntPoly.constant(1)
    for g, e in factorization:
        product = product * g ** e
    m = (f - product).exact_div(p)
    m_bar = ModPoly.from_intpoly(m, p)
    blocking = []
    for g, e in factorization:
        if e > 1 and not gcd_mod_p(ModPoly.from_intpoly(g, p), m_bar).is_one():
            blocking.append(g)
    return bool(blocking), DedekindDetails(factorization, m_bar, blocking)
