#!/usr/bin/env python
# -*- coding: utf-8 -*-
import numpy as np
import pytest
import sympy

from core.errors import DomainError
from core.intfactor import (TRIAL_DIVISION_BOUND, factor, is_prime, is_squarefree, modpow, perfect_power,
                            prime_divisors, primes_up_to, radical, squarefree_check)
from core.report import Tri


class MemoryCache:
    def __init__(self):
        self.entries = {}
        self.hits = 0

    def get(self, n):
        value = self.entries.get(abs(n))
        if value is not None:
            self.hits += 1
        return value

    def put(self, n, factored):
        self.entries[abs(n)] = factored


def test_primes_up_to():
    assert primes_up_to(30) == (2, 3, 5, 7, 11, 13, 17, 19, 23, 29)
    assert primes_up_to(2) == (2,)
    assert primes_up_to(1) == ()
    assert len(primes_up_to(1000)) == 168


@pytest.mark.parametrize("n, expected", [
    (0, False), (1, False), (2, True), (3, True), (4, False), (97, True),
    (561, False), (1105, False), (2 ** 61 - 1, True), (2 ** 61 + 1, False),
])
def test_is_prime(n, expected):
    assert is_prime(n) is expected


def test_is_prime_matches_sympy(rng):
    for n in rng.integers(2, 10 ** 9, size=300):
        assert is_prime(int(n)) == sympy.isprime(int(n))


def test_perfect_power():
    assert perfect_power(3 ** 10) == (3, 10)
    assert perfect_power(6 ** 6) == (6, 6)
    assert perfect_power(12) == (12, 1)
    assert perfect_power(2) == (2, 1)


def test_modpow():
    assert modpow(3, 4, 5) == 1
    assert modpow(-2, 3, 7) == 6
    assert modpow(5, 0, 9) == 1
    with pytest.raises(DomainError):
        modpow(2, 3, 1)
    with pytest.raises(DomainError):
        modpow(2, -1, 7)


class Test_factor(object):
    def test_small(self):
        factored = factor(-360)
        assert factored.sign == -1
        assert factored.factors == {2: 3, 3: 2, 5: 1}
        assert factored.is_complete
        assert factored.reassemble() == -360
        assert factored.render() == "2^3*3^2*5"

    def test_units(self):
        assert factor(1).factors == {}
        assert factor(-1).render() == "1"
        assert factor(-1).reassemble() == -1

    def test_zero(self):
        with pytest.raises(DomainError):
            factor(0)

    def test_matches_sympy(self, rng):
        for n in rng.integers(2, 10 ** 12, size=100):
            n = int(n)
            assert factor(n).factors == sympy.factorint(n)

    def test_reassembles_signed(self, rng):
        for _ in range(1000):
            n = int(rng.integers(1, 10 ** 12, endpoint=True)) * int(rng.choice([-1, 1]))
            factored = factor(n)
            assert factored.is_complete
            assert factored.sign == (-1 if n < 0 else 1)
            assert factored.reassemble() == n

    def test_rho_beyond_trial_division(self):
        p = sympy.nextprime(10 ** 7)
        q = sympy.nextprime(3 * 10 ** 7)
        n = int(p * q * q * 12)
        factored = factor(n)
        assert factored.is_complete
        assert factored.factors == {2: 2, 3: 1, int(p): 1, int(q): 2}

    def test_large_prime_power(self):
        q = int(sympy.nextprime(2 ** 45))
        assert factor(q ** 3).factors == {q: 3}

    def test_budget_exhausted(self):
        p = int(sympy.nextprime(2 ** 40))
        q = int(sympy.nextprime(2 ** 41))
        factored = factor(7 * p * q, budget=1)
        assert not factored.is_complete
        assert factored.factors == {7: 1}
        assert factored.cofactor == p * q
        assert factored.render() == f"7*[{p * q}]"
        assert factored.reassemble() == 7 * p * q

    def test_cache_round_trip(self):
        cache = MemoryCache()
        first = factor(2 ** 5 * 3 * 101, cache=cache)
        assert 3232 in cache.entries
        second = factor(-3232, cache=cache)
        assert cache.hits == 1
        assert second.factors == first.factors
        assert second.sign == -1

    def test_incomplete_not_cached(self):
        cache = MemoryCache()
        p = int(sympy.nextprime(2 ** 40))
        q = int(sympy.nextprime(2 ** 41))
        factor(p * q, budget=1, cache=cache)
        assert cache.entries == {}


class Test_squarefree(object):
    @pytest.mark.parametrize("n, status, witness", [
        (1, Tri.YES, None), (-1, Tri.YES, None), (30, Tri.YES, None),
        (12, Tri.NO, 2), (-50, Tri.NO, 5), (2 * 9 * 49, Tri.NO, 3),
    ])
    def test_small(self, n, status, witness):
        assert squarefree_check(n) == (status, witness)

    def test_large_square(self):
        q = int(sympy.nextprime(2 ** 40))
        assert squarefree_check(3 * q * q) == (Tri.NO, q)

    def test_two_large_primes_below_cube_bound(self):
        p = int(sympy.nextprime(10 ** 6))
        q = int(sympy.nextprime(2 * 10 ** 6))
        assert p * q < TRIAL_DIVISION_BOUND ** 3
        assert squarefree_check(p * q, budget=1) == (Tri.YES, None)

    def test_unknown(self):
        p = int(sympy.nextprime(2 ** 40))
        q = int(sympy.nextprime(2 ** 41))
        assert is_squarefree(p * q, budget=1) is Tri.UNKNOWN

    def test_matches_sieve(self):
        bound = 10 ** 5
        squarefree = np.ones(bound + 1, dtype=bool)
        for p in primes_up_to(int(bound ** 0.5)):
            squarefree[p * p::p * p] = False
        for n in range(2, bound + 1):
            expected = Tri.YES if squarefree[n] else Tri.NO
            assert is_squarefree(n) is expected, n
            assert is_squarefree(-n) is expected, -n


def test_radical():
    assert radical(72) == 6
    assert radical(-50) == 10
    assert radical(1) == 1
    p = int(sympy.nextprime(2 ** 40))
    q = int(sympy.nextprime(2 ** 41))
    assert radical(p * q, budget=1) is None


def test_radical_prime_support(rng):
    for n in rng.integers(2, 10 ** 9, size=200):
        n = int(n) * int(rng.choice([-1, 1]))
        r = radical(n)
        assert r > 0
        assert factor(r).factors == {p: 1 for p in factor(n).primes()}
        assert factor(r * r).primes() == factor(n * r).primes() == factor(n).primes()


def test_prime_divisors():
    assert prime_divisors(12) == (2, 3)
    assert prime_divisors(1) == ()
    assert prime_divisors(97) == (97,)
