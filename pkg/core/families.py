#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Polynomial Families

Verdicts for parametrized families with criteria cheaper than the generic
pipeline:

    pure    x - A               composition x^k - A
    split   f splitting completely modulo every prime p | k
    cubic   x^3 - m*x^2 - (m+3)*x - 1 (simplest cubics)
    binom   x^d + A*(B*x + 1)^m

Each verdict agrees with analyze_power_composition whenever the family
hypotheses hold. A violated hypothesis is reported as HypothesisViolated.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from math import gcd
from typing import Dict, Tuple

from .errors import DomainError
from .intfactor import DEFAULT_FACTOR_BUDGET, modpow, prime_divisors, squarefree_check
from .irreducibility import Policy
from .modpoly import ModPoly, gcd_mod_p, is_irreducible_mod_p, roots_mod_p, splits_completely
from .monogenity import (NOTE_ASSUMED, NOTE_RADICAL_SHORTCUT, AnalysisOptions, certify_composition,
                         eisenstein_defect, is_monogenic, new_report)
from .report import ReasonCode, Tri, Verdict
from .zpoly import IntPoly, evaluate_mod

logger = logging.getLogger(__name__)

NOTE_CUBIC_IRREDUCIBILITY = "irreducibility of simplest-cubic compositions accepted without certificate"


class FamilyTag(Enum):
    PURE = "pure"
    SPLIT = "split"
    SIMPLEST_CUBIC = "cubic"
    BINOMIAL_H = "binom"


_PARAM_NAMES = {
    FamilyTag.PURE: ("A",),
    FamilyTag.SIMPLEST_CUBIC: ("m",),
    FamilyTag.BINOMIAL_H: ("A", "B", "d", "m"),
    FamilyTag.SPLIT: ("f",),
}


@dataclass(frozen=True)
class FamilyInstance:
    """
    One member of a family together with the composition exponent.

    Attributes:
        family: FamilyTag
        params: (A,), (m,), (A, B, d, m), or (coefficient tuple,) for split
        k: Composition exponent
    """
    family: FamilyTag
    params: Tuple
    k: int

    def describe_params(self):
        """
        Stable text form of the parameters, e.g. "A=-1,B=1,d=3,m=1".
        """
        if self.family is FamilyTag.SPLIT:
            return f"f={IntPoly(self.params[0]).render()}"
        names = _PARAM_NAMES[self.family]
        return ",".join(f"{name}={value}" for name, value in zip(names, self.params))

    def key(self):
        return f"{self.family.value}|{self.describe_params()}|{self.k}"


def simplest_cubic_polynomial(m):
    return IntPoly([-1, -(m + 3), -m, 1])


def binomial_h_polynomial(A, B, d, m):
    return IntPoly.monomial(d) + (IntPoly([1, B]) ** m).scale(A)


def family_polynomial(instance):
    """
    The base polynomial f of a family instance.
    """
    if instance.family is FamilyTag.PURE:
        (A,) = instance.params
        return IntPoly([-A, 1])
    if instance.family is FamilyTag.SIMPLEST_CUBIC:
        (m,) = instance.params
        return simplest_cubic_polynomial(m)
    if instance.family is FamilyTag.BINOMIAL_H:
        return binomial_h_polynomial(*instance.params)
    return IntPoly(instance.params[0])


def _fail(report, reason, witness):
    report.verdict = Verdict.NOT_MONOGENIC
    report.reason = reason
    report.witness = witness
    return report


def _fold_tri(report, status, cause):
    if status is Tri.UNKNOWN and report.verdict is Verdict.MONOGENIC:
        report.verdict = Verdict.INCONCLUSIVE
        report.cause = cause
    return report


def pure_binomial(A, k, options=None):
    """
    x^k - A is monogenic iff A is squarefree and p^2 does not divide
    A^p - A for any prime p | k.

    Raises:
        DomainError: If k < 2
    """
    options = options or AnalysisOptions()
    if k < 2:
        raise DomainError(f"pure binomial needs k >= 2, got {k}")
    f = IntPoly([-A, 1])

    def make(verdict, **fields):
        return new_report(f, k, verdict, method="pure", **fields)

    irreducibility, early = certify_composition(f, k, options, make, "pure")
    if early is not None:
        return early
    report = make(Verdict.MONOGENIC, irreducibility=irreducibility, monogenic_base=Tri.YES)
    if irreducibility.is_assumed:
        report.notes.append(NOTE_ASSUMED)

    status, witness = squarefree_check(A, options.budget, options.cache)
    report.f0_squarefree = status
    if status is Tri.NO:
        return _fail(report, ReasonCode.CONSTANT_TERM_NOT_SQUAREFREE, witness)
    for p in prime_divisors(k):
        modulus = p * p
        obstructed = (modpow(A, p, modulus) - A) % modulus == 0
        report.prime_checks[p] = not obstructed
        if obstructed:
            return _fail(report, ReasonCode.PRIME_POWER_OBSTRUCTION, p)
    return _fold_tri(report, status, "squarefreeness of A undecided")


def split_prime_obstructed(f, p, all_residues=False):
    """
    True iff f(r^p) = 0 mod p^2 for some residue r.

    Args:
        f: IntPoly splitting completely modulo p
        p: Prime
        all_residues: Iterate r = 0..p-1 instead of the roots of f mod p only.
            Non-roots never obstruct since f(r^p) = f(r) mod p.
    """
    modulus = p * p
    if all_residues:
        residues = range(p)
    else:
        residues = [r for r, _ in roots_mod_p(ModPoly.from_intpoly(f, p))]
    return any(evaluate_mod(f, modpow(r, p, modulus), modulus) == 0 for r in residues)


def split_family(f, k, options=None, all_residues=False):
    """
    Verdict for f splitting completely modulo every prime p | k.

    f(x^k) is monogenic iff f is monogenic, f(0) is squarefree and
    f(r^p) is nonzero modulo p^2 for every p | k and every root r of f mod p.
    Repeated roots are allowed.
    """
    options = options or AnalysisOptions()
    if f.degree < 1 or not f.is_monic():
        raise DomainError(f"expected a monic nonconstant polynomial, got {f.render()}")
    if k < 1:
        raise DomainError(f"composition exponent must be positive, got {k}")

    def make(verdict, **fields):
        return new_report(f, k, verdict, method="split", **fields)

    primes = prime_divisors(k) if k > 1 else ()
    for p in primes:
        if not splits_completely(ModPoly.from_intpoly(f, p)):
            return make(Verdict.HYPOTHESIS_VIOLATED, cause=f"f does not split completely modulo {p}")

    irreducibility, early = certify_composition(f, k, options, make, "split")
    if early is not None:
        return early
    report = make(Verdict.MONOGENIC, irreducibility=irreducibility)
    if irreducibility.is_assumed:
        report.notes.append(NOTE_ASSUMED)

    status = Tri.YES
    if k > 1:
        status, witness = squarefree_check(f.constant_term, options.budget, options.cache)
        report.f0_squarefree = status
        if status is Tri.NO:
            return _fail(report, ReasonCode.CONSTANT_TERM_NOT_SQUAREFREE, witness)
    for p in primes:
        obstructed = split_prime_obstructed(f, p, all_residues)
        report.prime_checks[p] = not obstructed
        if obstructed:
            return _fail(report, ReasonCode.PRIME_POWER_OBSTRUCTION, p)

    base = is_monogenic(f, options.budget, options.cache)
    report.monogenic_base = base.status
    if base.status is Tri.NO:
        return _fail(report, ReasonCode.BASE_NOT_MONOGENIC, base.witness)
    _fold_tri(report, base.status, "discriminant of f not fully factored")
    return _fold_tri(report, status, "squarefreeness of f(0) undecided")


def cubic_threshold(r, p):
    """
    (t^3 - 3t - 1) / (t*(t + 1)) mod p^2 with t = r^p; needs r != 0, -1 mod p.
    """
    modulus = p * p
    t = modpow(r, p, modulus)
    numerator = (t ** 3 - 3 * t - 1) % modulus
    return numerator * pow(t * (t + 1), -1, modulus) % modulus


@dataclass
class CubicConditions:
    """
    The two simplest-cubic conditions, evaluated regardless of whether f is
    reducible modulo the odd primes dividing k.

    Attributes:
        base: Monogenity of f
        congruences: Odd prime p | k -> True when m avoids every threshold
    """
    base: Tri
    base_witness: object = None
    congruences: Dict[int, bool] = field(default_factory=dict)

    @property
    def all_pass(self):
        return self.base is Tri.YES and all(self.congruences.values())


def _cubic_congruence_holds(m, p):
    modulus = p * p
    return all(m % modulus != cubic_threshold(r, p) for r in range(1, p - 1))


def simplest_cubic_conditions(m, k, budget=DEFAULT_FACTOR_BUDGET, cache=None):
    """
    Evaluate (i) f monogenic and (ii) the congruence avoidance for each odd
    prime p | k, without checking the reducibility hypothesis.
    """
    f = simplest_cubic_polynomial(m)
    base = is_monogenic(f, budget, cache)
    congruences = {p: _cubic_congruence_holds(m, p) for p in (prime_divisors(k) if k > 1 else ()) if p != 2}
    return CubicConditions(base.status, base.witness, congruences)


def simplest_cubic(m, k, options=None):
    """
    Verdict for x^3 - m*x^2 - (m+3)*x - 1 composed with x^k.

    Requires f reducible modulo every odd prime p | k. Then f(x^k) is
    monogenic iff f is monogenic and m avoids
    (r^(3p) - 3r^p - 1)/(r^p (r^p + 1)) mod p^2 for r = 1..p-2. The prime 2
    never obstructs.
    """
    options = options or AnalysisOptions()
    if k < 1:
        raise DomainError(f"composition exponent must be positive, got {k}")
    f = simplest_cubic_polynomial(m)

    def make(verdict, **fields):
        return new_report(f, k, verdict, method="cubic", **fields)

    primes = prime_divisors(k) if k > 1 else ()
    for p in primes:
        if p != 2 and is_irreducible_mod_p(ModPoly.from_intpoly(f, p)):
            return make(Verdict.HYPOTHESIS_VIOLATED,
                        cause=f"f is irreducible modulo {p}; use the generic pipeline")

    cubic_options = AnalysisOptions(budget=options.budget, policy=Policy.ASSUME,
                                    witness_bound=options.witness_bound, cache=options.cache)
    irreducibility, early = certify_composition(f, k, cubic_options, make, "cubic")
    if early is not None:
        return early
    report = make(Verdict.MONOGENIC, irreducibility=irreducibility, f0_squarefree=Tri.YES if k > 1 else None)
    if irreducibility.is_assumed:
        report.notes.append(NOTE_CUBIC_IRREDUCIBILITY)

    for p in primes:
        holds = p == 2 or _cubic_congruence_holds(m, p)
        report.prime_checks[p] = holds
        if not holds:
            return _fail(report, ReasonCode.PRIME_POWER_OBSTRUCTION, p)

    base = is_monogenic(f, options.budget, options.cache)
    report.monogenic_base = base.status
    if base.status is Tri.NO:
        return _fail(report, ReasonCode.BASE_NOT_MONOGENIC, base.witness)
    return _fold_tri(report, base.status, "discriminant of f not fully factored")


def binomial_h_quantity(A, B, d, m):
    """
    d^d + (-1)^(d+m) * B^d * m^m * (d-m)^(d-m) * A.
    """
    sign = -1 if (d + m) % 2 else 1
    return d ** d + sign * B ** d * m ** m * (d - m) ** (d - m) * A


def _validate_binomial_h(A, B, d, m):
    if m < 1 or d <= m:
        raise DomainError(f"need positive m < d, got d={d}, m={m}")
    if gcd(d, m * B) != 1:
        raise DomainError(f"need gcd(d, m*B) = 1, got d={d}, m={m}, B={B}")
    if A == 0:
        raise DomainError("need A != 0")
    if binomial_h_quantity(A, B, d, m) == 0:
        raise DomainError(f"x^{d} + {A}*({B}*x + 1)^{m} has a repeated root")


def binomial_h_family(A, B, d, m, k, options=None):
    """
    Verdict for f = x^d + A*(B*x + 1)^m composed with x^k.

    f(x^k) is monogenic iff A and d^d + (-1)^(d+m) B^d m^m (d-m)^(d-m) A are
    both squarefree and, for every p | k, the Eisenstein-family defect is
    coprime to f modulo p. The second condition is automatic when every
    prime dividing k divides A.

    Raises:
        DomainError: If d <= m, m < 1, A = 0, gcd(d, m*B) != 1 or f has a
            repeated root
    """
    options = options or AnalysisOptions()
    if k < 1:
        raise DomainError(f"composition exponent must be positive, got {k}")
    _validate_binomial_h(A, B, d, m)
    f = binomial_h_polynomial(A, B, d, m)
    h = IntPoly([1, B]) ** m

    def make(verdict, **fields):
        return new_report(f, k, verdict, method="binom", **fields)

    irreducibility, early = certify_composition(f, k, options, make, "binom")
    if early is not None:
        return early
    report = make(Verdict.MONOGENIC, irreducibility=irreducibility)
    if irreducibility.is_assumed:
        report.notes.append(NOTE_ASSUMED)

    a_status, a_witness = squarefree_check(A, options.budget, options.cache)
    report.f0_squarefree = a_status
    if a_status is Tri.NO:
        report.monogenic_base = Tri.NO
        reason = ReasonCode.CONSTANT_TERM_NOT_SQUAREFREE if k > 1 else ReasonCode.BASE_NOT_MONOGENIC
        return _fail(report, reason, a_witness)

    primes = prime_divisors(k) if k > 1 else ()
    if primes and all(A % p == 0 for p in primes):
        report.notes.append(NOTE_RADICAL_SHORTCUT)
    else:
        for p in primes:
            coprime = gcd_mod_p(ModPoly.from_intpoly(f, p), eisenstein_defect(A, h, f, p)).is_one()
            report.prime_checks[p] = coprime
            if not coprime:
                return _fail(report, ReasonCode.PRIME_POWER_OBSTRUCTION, p)

    quantity = binomial_h_quantity(A, B, d, m)
    q_status, q_witness = squarefree_check(quantity, options.budget, options.cache)
    if q_status is Tri.NO:
        report.monogenic_base = Tri.NO
        return _fail(report, ReasonCode.BASE_NOT_MONOGENIC, q_witness)
    base_status = Tri.YES if a_status is Tri.YES and q_status is Tri.YES else Tri.UNKNOWN
    report.monogenic_base = base_status
    return _fold_tri(report, base_status, "squarefreeness of A or of the discriminant quantity undecided")


def evaluate_instance(instance, options=None):
    """
    Dispatch a FamilyInstance to its family verdict.
    """
    if instance.family is FamilyTag.PURE:
        return pure_binomial(instance.params[0], instance.k, options)
    if instance.family is FamilyTag.SIMPLEST_CUBIC:
        return simplest_cubic(instance.params[0], instance.k, options)
    if instance.family is FamilyTag.BINOMIAL_H:
        A, B, d, m = instance.params
        return binomial_h_family(A, B, d, m, instance.k, options)
    return split_family(IntPoly(instance.params[0]), instance.k, options)


def validate_instance(instance):
    """
    Check the parameter constraints of a family instance without evaluating it.

    Raises:
        DomainError: If the instance is outside its family's domain
    """
    if instance.k < 1:
        raise DomainError(f"composition exponent must be positive, got {instance.k}")
    if instance.family is FamilyTag.PURE and instance.k < 2:
        raise DomainError(f"pure binomial needs k >= 2, got {instance.k}")
    if instance.family is FamilyTag.BINOMIAL_H:
        _validate_binomial_h(*instance.params)
    if instance.family is FamilyTag.SPLIT:
        f = IntPoly(instance.params[0])
        if f.degree < 1 or not f.is_monic():
            raise DomainError(f"expected a monic nonconstant polynomial, got {f.render()}")
