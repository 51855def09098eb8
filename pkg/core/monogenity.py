#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Monogenity Pipelines

Decides whether f(x^k) is monogenic. A monic irreducible f(x^k) is monogenic
exactly when

    (1) f is monogenic,
    (2) for every prime p | k, p does not divide the index of f(x^p), and
    (3) f(0) is squarefree.

Condition (2) holds at p iff (f(x^p) - f(x)^p)/p is coprime to f modulo p,
so the discriminant of f(x^k) is never formed. slow_path_oracle applies the
Dedekind criterion to f(x^k) directly and is used to cross-check.
"""

import logging
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Optional, Tuple

from .errors import ArithmeticInvariantError, DomainError
from .idealtest import divides_index
from .intfactor import (DEFAULT_FACTOR_BUDGET, TRIAL_DIVISION_BOUND, factor, is_prime, perfect_power,
                        prime_divisors, primes_up_to, squarefree_check)
from .irreducibility import DEFAULT_WITNESS_BOUND, Policy, Status, certify_irreducible
from .modpoly import ModPoly, frobenius_coprime, gcd_mod_p
from .report import MonogenityReport, ReasonCode, Tri, Verdict
from .zpoly import IntPoly, compose_power, discriminant

logger = logging.getLogger(__name__)

NOTE_INDEX_PRIME_POWER = "f is monogenic and f(0) is squarefree: the index of f(x^(p^u)) is a power of p"
NOTE_INDEX_DIVIDES_F0 = "conditions (1) and (2) hold: every prime dividing the index of f(x^k) divides f(0)"
NOTE_ASSUMED = "irreducibility of f(x^k) assumed, not certified"
NOTE_DIRECT_DEDEKIND = "direct Dedekind criterion on f(x^k)"
NOTE_RADICAL_SHORTCUT = "rad(k) divides rad(A): f(x^k) is monogenic iff f is"
NOTE_F0_INFORMATIONAL = "f(0) = +-A is squarefree whenever f is monogenic here; the f(0) condition is informational"


@dataclass
class AnalysisOptions:
    """
    Knobs shared by every pipeline.

    Attributes:
        budget: Rho iteration cap per factorization
        policy: Irreducibility policy
        witness_bound: Largest prime tried for a mod-p irreducibility witness
        cache: Optional factorization cache
        timings: Record per-stage timings in the report
    """
    budget: int = DEFAULT_FACTOR_BUDGET
    policy: Policy = Policy.REQUIRE_CERTIFICATE
    witness_bound: int = DEFAULT_WITNESS_BOUND
    cache: Optional[object] = None
    timings: bool = False

    @classmethod
    def from_run_config(cls, run_config, cache=None):
        return cls(budget=run_config.factor_budget, policy=run_config.policy,
                   witness_bound=run_config.witness_bound, cache=cache, timings=run_config.timings)


@dataclass(frozen=True)
class BaseMonogenity:
    """
    Result of is_monogenic.

    Attributes:
        status: Tri-state answer
        witness: Prime dividing the index when status is NO
        cofactor: Unfactored part of D(f) when status is UNKNOWN
    """
    status: Tri
    witness: Optional[int] = None
    cofactor: Optional[int] = None

    def __iter__(self):
        return iter((self.status, self.witness))


@contextmanager
def _stage(report, name, enabled):
    if not enabled:
        yield
        return
    start = time.perf_counter()
    try:
        yield
    finally:
        report.timings[name] = report.timings.get(name, 0.0) + time.perf_counter() - start


def _require_monic(f):
    if f.degree < 1 or not f.is_monic():
        raise DomainError(f"expected a monic nonconstant polynomial, got {f.render()}")


def _require_exponent(k):
    if k < 1:
        raise DomainError(f"composition exponent must be positive, got {k}")


def is_monogenic(f, budget=DEFAULT_FACTOR_BUDGET, cache=None):
    """
    Decide monogenity of f itself.

    Only primes p with p^2 | D(f) can divide the index; each is tested with
    the Dedekind criterion.

    Args:
        f: Monic polynomial, irreducibility certified or assumed by the caller
        budget: Rho iteration cap
        cache: Optional factorization cache

    Returns:
        BaseMonogenity

    Raises:
        DomainError: If f is constant, not monic or has D(f) = 0
    """
    _require_monic(f)
    if f.degree == 1:
        return BaseMonogenity(Tri.YES)
    d = discriminant(f)
    if d == 0:
        raise DomainError(f"{f.render()} has a repeated factor (zero discriminant)")
    factored = factor(d, budget, cache)
    for p in factored.primes():
        if factored.factors[p] >= 2 and divides_index(f, p).divides:
            return BaseMonogenity(Tri.NO, witness=p)
    if factored.is_complete:
        return BaseMonogenity(Tri.YES)

    cofactor = factored.cofactor
    root, exponent = perfect_power(cofactor)
    if exponent > 1 and is_prime(root):
        if divides_index(f, root).divides:
            return BaseMonogenity(Tri.NO, witness=root)
        return BaseMonogenity(Tri.YES)
    if exponent == 1 and cofactor < TRIAL_DIVISION_BOUND ** 3:
        # Product of at most two distinct large primes, each to the first power
        return BaseMonogenity(Tri.YES)
    logger.warning(f"Monogenity: discriminant of {f.render()} not fully factored, cofactor {cofactor}")
    return BaseMonogenity(Tri.UNKNOWN, cofactor=cofactor)


def crit_prime_power(f, p):
    """
    True iff p divides the index of f(x^p).

    Equivalently the Frobenius defect (f(x^p) - f(x)^p)/p shares a factor
    with f modulo p.
    """
    _require_monic(f)
    return not frobenius_coprime(f, p)


def new_report(f, k, verdict, method="fast", **fields):
    return MonogenityReport(polynomial=f, k=k, verdict=verdict, method=method, **fields)


def _reducible_report(f, k, irreducibility, method):
    return new_report(f, k, Verdict.NOT_MONOGENIC, method=method, reason=ReasonCode.REDUCIBLE,
                   irreducibility=irreducibility)


def certify_composition(f, k, options, report_factory, method):
    """
    Run the irreducibility ladder.

    Returns:
        (IrreducibilityResult, early report or None)
    """
    result = certify_irreducible(f, k, options.policy, options.witness_bound, options.budget)
    if result.status is Status.REDUCIBLE:
        return result, _reducible_report(f, k, result, method)
    if result.status is Status.UNKNOWN:
        return result, report_factory(Verdict.INCONCLUSIVE, cause="irreducibility of f(x^k) not certified",
                                      irreducibility=result)
    return result, None


def _base_verdict(report, base):
    """
    Fold the result of is_monogenic into a report whose other conditions
    passed.
    """
    report.monogenic_base = base.status
    if base.status is Tri.NO:
        report.verdict = Verdict.NOT_MONOGENIC
        report.witness = base.witness
        report.reason = ReasonCode.BASE_NOT_MONOGENIC
    elif base.status is Tri.UNKNOWN:
        report.verdict = Verdict.INCONCLUSIVE
        report.cause = f"discriminant of f not fully factored (cofactor {base.cofactor})"
    return report


def analyze_power_composition(f, k, options=None):
    """
    Decide monogenity of f(x^k) from the three conditions on f.

    Conditions are evaluated cheapest first: squarefreeness of f(0), then
    the Frobenius-defect test for each prime p | k in ascending order, then
    monogenity of f. The first failing condition decides.

    Args:
        f: Monic IntPoly
        k: Positive integer
        options: AnalysisOptions

    Returns:
        MonogenityReport

    Raises:
        DomainError: If f is not monic or k < 1
    """
    options = options or AnalysisOptions()
    _require_monic(f)
    _require_exponent(k)

    def make(verdict, **fields):
        return new_report(f, k, verdict, **fields)

    start = time.perf_counter()
    irreducibility, early = certify_composition(f, k, options, make, "fast")
    if early is not None:
        return early
    report = make(Verdict.MONOGENIC, irreducibility=irreducibility)
    if options.timings:
        report.timings["irreducibility"] = time.perf_counter() - start
    if irreducibility.is_assumed:
        report.notes.append(NOTE_ASSUMED)

    if k == 1:
        with _stage(report, "base", options.timings):
            base = is_monogenic(f, options.budget, options.cache)
        return _base_verdict(report, base)

    with _stage(report, "constant_term", options.timings):
        f0_status, f0_witness = squarefree_check(f.constant_term, options.budget, options.cache)
    report.f0_squarefree = f0_status
    if f0_status is Tri.NO:
        report.verdict = Verdict.NOT_MONOGENIC
        report.witness = f0_witness
        report.reason = ReasonCode.CONSTANT_TERM_NOT_SQUAREFREE
        return report

    with _stage(report, "prime_checks", options.timings):
        for p in prime_divisors(k):
            obstructed = crit_prime_power(f, p)
            report.prime_checks[p] = not obstructed
            if obstructed:
                report.verdict = Verdict.NOT_MONOGENIC
                report.witness = p
                report.reason = ReasonCode.PRIME_POWER_OBSTRUCTION
                return report

    with _stage(report, "base", options.timings):
        base = is_monogenic(f, options.budget, options.cache)
    _base_verdict(report, base)
    if report.verdict is Verdict.NOT_MONOGENIC:
        return report

    if base.status is Tri.YES:
        report.notes.append(NOTE_INDEX_DIVIDES_F0)
        if f0_status is Tri.YES and len(prime_divisors(k)) == 1:
            report.notes.append(NOTE_INDEX_PRIME_POWER)
    if f0_status is Tri.UNKNOWN and report.verdict is Verdict.MONOGENIC:
        report.verdict = Verdict.INCONCLUSIVE
        report.cause = "squarefreeness of f(0) undecided"
    return report


def _split_eisenstein_shape(f, A=None):
    """
    Write f = x^d + A*h(x) with deg h < d and |h(0)| = 1.

    Returns:
        (A, h)

    Raises:
        DomainError: If f does not have that shape
    """
    d = f.degree
    if d <= 1:
        raise DomainError(f"Eisenstein-family shape needs degree > 1, got {f.render()}")
    rest = f - IntPoly.monomial(d)
    if A is None:
        A = f.constant_term
    if A == 0:
        raise DomainError(f"Eisenstein-family shape needs A != 0, got {f.render()}")
    if any(c % A for c in rest.coeffs):
        raise DomainError(f"{A} does not divide the lower coefficients of {f.render()}")
    h = rest.exact_div(A)
    if abs(h.constant_term) != 1:
        raise DomainError(f"|h(0)| must be 1, got h = {h.render()}")
    return A, h


def eisenstein_defect(A, h, f, p):
    """
    (A*h(x^p) + (-A*h(x))^p)/p modulo p, reduced modulo f.

    Computed in arithmetic modulo p^2.

    Raises:
        ArithmeticInvariantError: If the division by p is not exact
    """
    m = p * p
    f_m = ModPoly.from_intpoly(f, m)
    composed = ModPoly.from_intpoly(compose_power(h, p).scale(A), m)
    powered = ModPoly.from_intpoly(h.scale(-A), m).powmod(p, f_m)
    total = (composed % f_m) + powered
    total = total % f_m
    if any(c % p for c in total.coeffs):
        raise ArithmeticInvariantError(f"Eisenstein-family defect of {f.render()} at {p} is not divisible by {p}")
    return ModPoly([c // p for c in total.coeffs], p)


def analyze_eisenstein_family(f, k, options=None, A=None):
    """
    Decide monogenity of f(x^k) for f = x^d + A*h(x), |h(0)| = 1, deg h < d.

    f(x^k) is monogenic iff f is monogenic and, for every p | k,
    (A*h(x^p) + (-A*h(x))^p)/p is coprime to f modulo p. When every prime
    dividing k divides A the second condition is automatic.

    Args:
        f: Monic IntPoly of the family shape
        k: Positive integer
        options: AnalysisOptions
        A: The integer A; defaults to f(0)

    Returns:
        MonogenityReport with method "eisenstein"

    Raises:
        DomainError: If f does not have the family shape
    """
    options = options or AnalysisOptions()
    _require_monic(f)
    _require_exponent(k)
    A, h = _split_eisenstein_shape(f, A)

    def make(verdict, **fields):
        return new_report(f, k, verdict, method="eisenstein", **fields)

    irreducibility, early = certify_composition(f, k, options, make, "eisenstein")
    if early is not None:
        return early
    report = make(Verdict.MONOGENIC, irreducibility=irreducibility)
    if irreducibility.is_assumed:
        report.notes.append(NOTE_ASSUMED)
    if k > 1:
        report.f0_squarefree = squarefree_check(A, options.budget, options.cache)[0]
        report.notes.append(NOTE_F0_INFORMATIONAL)

    primes = prime_divisors(k) if k > 1 else ()
    if primes and all(A % p == 0 for p in primes):
        report.notes.append(NOTE_RADICAL_SHORTCUT)
    else:
        for p in primes:
            coprime = gcd_mod_p(ModPoly.from_intpoly(f, p), eisenstein_defect(A, h, f, p)).is_one()
            report.prime_checks[p] = coprime
            if not coprime:
                report.verdict = Verdict.NOT_MONOGENIC
                report.witness = p
                report.reason = ReasonCode.PRIME_POWER_OBSTRUCTION
                return report

    base = is_monogenic(f, options.budget, options.cache)
    return _base_verdict(report, base)


@dataclass(frozen=True)
class CandidateSet:
    """
    Primes that may divide the index of f(x^k).

    Attributes:
        primes: Sorted primes dividing D(f), k or f(0)
        complete: False when one of the three factorizations is incomplete
        cofactors: Unfactored cofactors, if any
    """
    primes: Tuple[int, ...]
    complete: bool = True
    cofactors: Tuple[int, ...] = field(default_factory=tuple)


def index_prime_candidates(f, k, budget=DEFAULT_FACTOR_BUDGET, cache=None):
    """
    Every prime dividing the index of f(x^k) divides D(f), k or f(0).

    Returns:
        CandidateSet; incomplete factorizations leave their cofactors

    Raises:
        DomainError: If f is not monic, f(0) = 0 or D(f) = 0
    """
    _require_monic(f)
    _require_exponent(k)
    if f.constant_term == 0:
        raise DomainError("f(0) = 0: the composition is divisible by x")
    d = discriminant(f) if f.degree > 1 else 1
    if d == 0:
        raise DomainError(f"{f.render()} has a repeated factor (zero discriminant)")
    primes = set()
    cofactors = []
    for n in (d, k, f.constant_term):
        factored = factor(n, budget, cache)
        primes.update(factored.primes())
        if not factored.is_complete:
            cofactors.append(factored.cofactor)
    return CandidateSet(tuple(sorted(primes)), not cofactors, tuple(cofactors))


def slow_path_oracle(f, k, options=None):
    """
    Decide monogenity of f(x^k) by the Dedekind criterion on f(x^k) itself.

    Returns:
        MonogenityReport with method "oracle"; a failing prime is reported
        as witness without a reason code
    """
    options = options or AnalysisOptions()
    _require_monic(f)
    _require_exponent(k)

    def make(verdict, **fields):
        return new_report(f, k, verdict, method="oracle", **fields)

    irreducibility, early = certify_composition(f, k, options, make, "oracle")
    if early is not None:
        return early
    report = make(Verdict.MONOGENIC, irreducibility=irreducibility)
    report.notes.append(NOTE_DIRECT_DEDEKIND)
    if irreducibility.is_assumed:
        report.notes.append(NOTE_ASSUMED)

    candidates = index_prime_candidates(f, k, options.budget, options.cache)
    primes = list(candidates.primes)
    unresolved = []
    for cofactor in candidates.cofactors:
        root, exponent = perfect_power(cofactor)
        if is_prime(root):
            primes.append(root)
        else:
            unresolved.append(cofactor)

    g = compose_power(f, k)
    with _stage(report, "dedekind", options.timings):
        for p in sorted(set(primes)):
            if divides_index(g, p).divides:
                report.verdict = Verdict.NOT_MONOGENIC
                report.witness = p
                return report

    if unresolved:
        logger.warning(f"Monogenity: oracle for {f.render()}, k={k} left unfactored cofactors {unresolved}")
        report.verdict = Verdict.INCONCLUSIVE
        report.cause = f"unfactored cofactors {unresolved}"
    return report


def wss_scan(f, bound, progress_callback=None):
    """
    Primes p <= bound at which p divides the index of f(x^p).

    An empty result certifies condition (2) for every k whose prime factors
    are at most bound. For x^2 - x - 1 these are the Wall-Sun-Sun primes.

    Args:
        f: Monic IntPoly
        bound: Inclusive prime bound
        progress_callback: Optional callback(progress, stage_text, current, status)

    Returns:
        Ascending list of primes
    """
    _require_monic(f)
    primes = primes_up_to(bound)
    hits = []
    total = len(primes)
    for index, p in enumerate(primes, 1):
        if crit_prime_power(f, p):
            logger.info(f"Prime Scan: {p} divides the index of f(x^{p}) for {f.render()}")
            hits.append(p)
        if progress_callback and (index % 100 == 0 or index == total):
            progress_callback(index / total, "Prime scan", p, f"{index} of {total} primes")
    return hits
