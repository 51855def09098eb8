#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Irreducibility Certificates

Evidence that f(x^k) is irreducible over the rationals without factoring
over the integers. The ladder tries, in order: an integer root (reducible),
a repeated factor of f (reducible), completeness of the root search in
degree <= 3, an Eisenstein prime of f (which lifts to f(x^k)), a prime p
modulo which f(x^k) is irreducible (decided from f modulo p, so the cost
does not grow with k), and finally the assumption policy.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from itertools import product
from math import gcd
from typing import Optional

from .errors import DomainError
from .intfactor import DEFAULT_FACTOR_BUDGET, factor, primes_up_to
from .modpoly import ModPoly, is_composition_irreducible_mod_p
from .zpoly import IntPoly, compose_power, derivative, discriminant, evaluate, primitive_gcd

logger = logging.getLogger(__name__)

DEFAULT_WITNESS_BOUND = 101


class Policy(Enum):
    REQUIRE_CERTIFICATE = "require-certificate"
    ASSUME = "assume"


class CertificateKind(Enum):
    INTEGER_ROOT_COMPLETE = "IntegerRootComplete"
    EISENSTEIN_WITNESS = "EisensteinWitness"
    MODP_WITNESS = "ModPWitness"
    LOW_DEGREE_COMPLETE = "LowDegreeComplete"
    ASSUMED = "Assumed"


class Status(Enum):
    CERTIFIED = "certified"
    REDUCIBLE = "reducible"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Certificate:
    """
    Evidence of irreducibility.

    Attributes:
        kind: Which rung of the ladder produced it
        target: Label of the certified polynomial, "f" or "f(x^k)"
        prime: Witness prime for Eisenstein and mod-p certificates
    """
    kind: CertificateKind
    target: str
    prime: Optional[int] = None

    def describe(self):
        if self.prime is None:
            return f"{self.kind.value}[{self.target}]"
        return f"{self.kind.value}({self.prime})[{self.target}]"


@dataclass(frozen=True)
class IrreducibilityResult:
    """
    Outcome of certify_irreducible.

    Attributes:
        status: CERTIFIED, REDUCIBLE or UNKNOWN
        certificate: Set when CERTIFIED
        root: Integer root exhibiting reducibility
        factor: Nontrivial factor exhibiting reducibility
    """
    status: Status
    certificate: Optional[Certificate] = None
    root: Optional[int] = None
    factor: Optional[IntPoly] = None

    @property
    def is_certified(self):
        return self.status is Status.CERTIFIED

    @property
    def is_assumed(self):
        return self.is_certified and self.certificate.kind is CertificateKind.ASSUMED

    def describe(self):
        if self.status is Status.CERTIFIED:
            return self.certificate.describe()
        if self.status is Status.REDUCIBLE:
            if self.root is not None:
                return f"Reducible(root {self.root})"
            return f"Reducible(factor {self.factor.render()})"
        return "Unknown"


def _divisors(factored):
    primes = factored.primes()
    exponent_ranges = [range(factored.factors[p] + 1) for p in primes]
    for exponents in product(*exponent_ranges):
        d = 1
        for p, e in zip(primes, exponents):
            d *= p ** e
        yield d


def _integer_roots(f, budget):
    """
    Returns:
        (roots, complete) where complete is False if f(0) could not be
        factored, so only its known divisors were tried
    """
    if f.is_zero():
        raise DomainError("integer roots of the zero polynomial")
    if not f.is_monic():
        raise DomainError(f"integer roots need a monic polynomial, got {f.render()}")
    roots = []
    shift = 0
    while shift < len(f.coeffs) and f.coeffs[shift] == 0:
        shift += 1
    if shift:
        roots.append(0)
        f = IntPoly(f.coeffs[shift:])
    if f.degree < 1:
        return roots, True
    factored = factor(f.constant_term, budget)
    complete = factored.is_complete
    if not complete:
        logger.warning(f"Irreducibility: integer root search of {f.render()} is incomplete, "
                       f"|f(0)| has an unfactored cofactor")
    candidates = sorted(_divisors(factored))
    for d in candidates:
        for r in (d, -d):
            if evaluate(f, r) == 0:
                roots.append(r)
    return roots, complete


def integer_roots(f, budget=DEFAULT_FACTOR_BUDGET):
    """
    All integer roots of the monic polynomial f.

    Raises:
        DomainError: If f is zero or not monic
    """
    return _integer_roots(f, budget)[0]


def is_eisenstein_at(f, p):
    """
    True iff monic f is Eisenstein with respect to p.
    """
    if f.degree < 1:
        return False
    if any(c % p for c in f.coeffs[:-1]):
        return False
    return f.constant_term % (p * p) != 0


def eisenstein_witness(f, budget=DEFAULT_FACTOR_BUDGET):
    """
    Smallest prime making f Eisenstein, among fully factored primes.

    Returns:
        The prime, or None
    """
    if f.degree < 1 or not f.is_monic():
        raise DomainError(f"Eisenstein test needs a monic nonconstant polynomial, got {f.render()}")
    common = 0
    for c in f.coeffs[:-1]:
        common = gcd(common, c)
    if common in (0, 1):
        return None
    for p in factor(common, budget).primes():
        if is_eisenstein_at(f, p):
            return p
    return None


def certify_irreducible(f, k=1, policy=Policy.REQUIRE_CERTIFICATE, witness_bound=DEFAULT_WITNESS_BOUND,
                        budget=DEFAULT_FACTOR_BUDGET):
    """
    Certify irreducibility of f(x^k).

    Args:
        f: Monic polynomial
        k: Composition exponent
        policy: Whether an uncertified composition may be assumed irreducible
        witness_bound: Largest prime tried for a mod-p witness
        budget: Factoring budget for the root search and Eisenstein test

    Returns:
        IrreducibilityResult
    """
    if not f.is_monic() or f.degree < 1:
        raise DomainError(f"irreducibility needs a monic nonconstant polynomial, got {f.render()}")
    if k < 1:
        raise DomainError(f"composition exponent must be positive, got {k}")
    target = "f" if k == 1 else "f(x^k)"
    if f.constant_term == 0:
        return IrreducibilityResult(Status.REDUCIBLE, factor=IntPoly.x())

    g = compose_power(f, k)
    roots, complete = _integer_roots(g, budget)
    if roots and g.degree > 1:
        return IrreducibilityResult(Status.REDUCIBLE, root=roots[0])

    if f.degree >= 2 and discriminant(f) == 0:
        repeated = primitive_gcd(f, derivative(f))
        return IrreducibilityResult(Status.REDUCIBLE, factor=compose_power(repeated, k))

    if g.degree == 1:
        return IrreducibilityResult(Status.CERTIFIED, Certificate(CertificateKind.LOW_DEGREE_COMPLETE, target))
    # A reducible monic polynomial of degree <= 3 has a linear factor
    if g.degree <= 3 and complete:
        return IrreducibilityResult(Status.CERTIFIED, Certificate(CertificateKind.INTEGER_ROOT_COMPLETE, target))

    p = eisenstein_witness(f, budget)
    if p is not None:
        return IrreducibilityResult(Status.CERTIFIED, Certificate(CertificateKind.EISENSTEIN_WITNESS, target, p))

    for p in primes_up_to(witness_bound):
        if is_composition_irreducible_mod_p(ModPoly.from_intpoly(f, p), k):
            return IrreducibilityResult(Status.CERTIFIED, Certificate(CertificateKind.MODP_WITNESS, target, p))

    if policy is Policy.ASSUME:
        logger.info(f"Irreducibility: no certificate for {g.render()}, assuming irreducible")
        return IrreducibilityResult(Status.CERTIFIED, Certificate(CertificateKind.ASSUMED, target))
    return IrreducibilityResult(Status.UNKNOWN)
