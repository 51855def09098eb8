#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Integer Factoring

Integer arithmetic services used by the monogenity pipelines: factorization
under an effort budget, squarefreeness, radicals, primality and a numpy prime
sieve.

Factoring is trial division up to TRIAL_DIVISION_BOUND followed by
Brent's variant of Pollard rho with deterministic seeds. The budget caps the
total number of rho iterations of one call, so results are reproducible.
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from math import isqrt
from typing import Dict, Tuple

import gmpy2
import numpy as np

from .errors import DomainError
from .report import Tri

logger = logging.getLogger(__name__)

TRIAL_DIVISION_BOUND = 100_000
DEFAULT_FACTOR_BUDGET = 200_000

# Deterministic for every n < 3.3 * 10^24
_MILLER_RABIN_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)

# Maximum rho polynomial constants tried per composite
_RHO_ATTEMPTS = 16


@dataclass(frozen=True)
class FactoredInt:
    """
    A (possibly partial) factorization sign * cofactor * prod(p^e) = value.

    Attributes:
        value: The factored integer
        sign: +1 or -1
        factors: Prime -> positive exponent
        cofactor: Unfactored part, 1 when the factorization is complete. It
            has no prime factor below TRIAL_DIVISION_BOUND.
    """
    value: int
    sign: int
    factors: Dict[int, int] = field(default_factory=dict)
    cofactor: int = 1

    @property
    def is_complete(self):
        return self.cofactor == 1

    def primes(self):
        """
        Sorted list of the primes found so far.
        """
        return sorted(self.factors)

    def reassemble(self):
        product = self.sign * self.cofactor
        for p, e in self.factors.items():
            product *= p ** e
        return product

    def render(self):
        """
        Render as "2^2*3", the format used by the factorization cache.
        """
        parts = []
        for p in self.primes():
            e = self.factors[p]
            parts.append(str(p) if e == 1 else f"{p}^{e}")
        if self.cofactor != 1:
            parts.append(f"[{self.cofactor}]")
        return "*".join(parts) if parts else "1"


@lru_cache(maxsize=8)
def primes_up_to(bound):
    """
    Sieve of Eratosthenes.

    Args:
        bound: Inclusive upper bound

    Returns:
        Tuple of all primes <= bound, ascending
    """
    if bound < 2:
        return ()
    sieve = np.ones(bound + 1, dtype=bool)
    sieve[:2] = False
    sieve[4::2] = False
    for i in range(3, isqrt(bound) + 1, 2):
        if sieve[i]:
            sieve[i * i::2 * i] = False
    return tuple(int(p) for p in np.flatnonzero(sieve))


def is_prime(n):
    """
    Deterministic Miller-Rabin below 3.3 * 10^24, strong probable prime
    test beyond.
    """
    if n < 2:
        return False
    for p in _MILLER_RABIN_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MILLER_RABIN_BASES:
        x = gmpy2.powmod(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = gmpy2.powmod(x, 2, n)
            if x == n - 1:
                break
        else:
            return False
    return True


def perfect_power(n):
    """
    Write n = root^exponent with the largest possible exponent.

    Args:
        n: Integer >= 2

    Returns:
        (root, exponent); exponent is 1 when n is not a perfect power
    """
    best = (n, 1)
    exponent = 2
    while (1 << exponent) <= n:
        root, exact = gmpy2.iroot(n, exponent)
        if exact:
            best = (int(root), exponent)
        exponent += 1
    if best[1] > 1:
        inner_root, inner_exp = perfect_power(best[0])
        return inner_root, inner_exp * best[1]
    return best


def modpow(base, exp, modulus):
    """
    base^exp reduced to [0, modulus).
    """
    if modulus < 2:
        raise DomainError(f"modulus must be at least 2, got {modulus}")
    if exp < 0:
        raise DomainError(f"exponent must be nonnegative, got {exp}")
    return pow(base, exp, modulus)


def _brent_rho(n, c, budget):
    """
    One Brent-Pollard rho run on x -> x^2 + c.

    Returns:
        (nontrivial divisor or None, iterations used)
    """
    y, r, q, g = 2, 1, 1, 1
    x = ys = y
    used = 0
    block = 128
    while g == 1 and used < budget:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        used += r
        k = 0
        while k < r and g == 1:
            ys = y
            steps = min(block, r - k)
            for _ in range(steps):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            used += steps
            g = int(gmpy2.gcd(q, n))
            k += block
        r *= 2
    if g == n:
        # Collision inside the last block: step through it one by one
        g = 1
        while g == 1:
            ys = (ys * ys + c) % n
            g = int(gmpy2.gcd(abs(x - ys), n))
    if g in (1, n):
        return None, used
    return g, used


def _split(n, budget):
    """
    Find a nontrivial divisor of the composite n.

    Returns:
        (divisor or None, iterations used)
    """
    used_total = 0
    for c in range(1, _RHO_ATTEMPTS + 1):
        remaining = budget - used_total
        if remaining <= 0:
            break
        divisor, used = _brent_rho(n, c, remaining)
        used_total += used
        if divisor is not None:
            return divisor, used_total
    return None, used_total


def factor(n, budget=DEFAULT_FACTOR_BUDGET, cache=None):
    """
    Factor a nonzero integer.

    Args:
        n: Nonzero integer
        budget: Maximum total rho iterations
        cache: Optional factorization cache with get(n) / put(n, factored)

    Returns:
        FactoredInt; cofactor > 1 when the budget ran out

    Raises:
        DomainError: If n is zero
    """
    if n == 0:
        raise DomainError("cannot factor zero")
    sign = -1 if n < 0 else 1
    m = abs(n)

    if cache is not None:
        cached = cache.get(m)
        if cached is not None:
            return FactoredInt(value=n, sign=sign, factors=dict(cached.factors), cofactor=cached.cofactor)

    factors = {}
    for p in primes_up_to(TRIAL_DIVISION_BOUND):
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors[p] = e
    if 1 < m < TRIAL_DIVISION_BOUND ** 2:
        factors[m] = factors.get(m, 0) + 1
        m = 1

    cofactor = 1
    remaining = budget
    pending = [(m, 1)] if m > 1 else []
    while pending:
        value, multiplicity = pending.pop()
        if is_prime(value):
            factors[value] = factors.get(value, 0) + multiplicity
            continue
        root, exponent = perfect_power(value)
        if exponent > 1:
            pending.append((root, multiplicity * exponent))
            continue
        divisor, used = _split(value, remaining)
        remaining -= used
        if divisor is None:
            logger.info(f"Integer Factoring: budget exhausted on a {value.bit_length()}-bit cofactor")
            cofactor *= value ** multiplicity
            continue
        other = value // divisor
        if divisor == other:
            pending.append((divisor, 2 * multiplicity))
        else:
            pending.append((divisor, multiplicity))
            pending.append((other, multiplicity))

    result = FactoredInt(value=n, sign=sign, factors=dict(sorted(factors.items())), cofactor=cofactor)
    if cache is not None and result.is_complete:
        cache.put(abs(n), result)
    return result


def _cofactor_squarefree(cofactor):
    """
    Decide squarefreeness of an unfactored cofactor without factoring it.

    Returns:
        (Tri, witness) with witness an integer whose square divides cofactor
    """
    root, exponent = perfect_power(cofactor)
    if exponent > 1:
        return Tri.NO, root
    # No prime below the trial bound divides it, so below bound^3 it is a
    # product of at most two distinct primes.
    if cofactor < TRIAL_DIVISION_BOUND ** 3:
        return Tri.YES, None
    return Tri.UNKNOWN, None


def squarefree_check(n, budget=DEFAULT_FACTOR_BUDGET, cache=None):
    """
    Squarefreeness with a witness.

    Args:
        n: Nonzero integer
        budget: Rho iteration cap
        cache: Optional factorization cache

    Returns:
        (Tri, witness). The witness is the smallest prime whose square
        divides n when one was found, otherwise None.
    """
    factored = factor(n, budget, cache)
    square_primes = [p for p in factored.primes() if factored.factors[p] >= 2]
    if square_primes:
        return Tri.NO, square_primes[0]
    if factored.is_complete:
        return Tri.YES, None
    return _cofactor_squarefree(factored.cofactor)


def is_squarefree(n, budget=DEFAULT_FACTOR_BUDGET, cache=None):
    """
    Tri-state squarefreeness; units are squarefree.
    """
    return squarefree_check(n, budget, cache)[0]


def radical(n, budget=DEFAULT_FACTOR_BUDGET, cache=None):
    """
    Product of the distinct primes dividing n.

    Returns:
        The radical, or None if the factorization is incomplete
    """
    factored = factor(n, budget, cache)
    if not factored.is_complete:
        return None
    result = 1
    for p in factored.factors:
        result *= p
    return result


def prime_divisors(n) -> Tuple[int, ...]:
    """
    Distinct prime divisors of a small positive integer such as k.
    """
    factored = factor(n)
    if not factored.is_complete:
        raise DomainError(f"could not factor {n} completely")
    return tuple(factored.primes())
