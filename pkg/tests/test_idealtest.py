#!/usr/bin/env python
# -*- coding: utf-8 -*-
import pytest

from core.errors import DomainError
from core.idealtest import (IndexTest, MaximalIdealSpec, dedekind_M_form, divides_index, in_maximal_square,
                            in_p2_g, in_p_g2, square_decomposition_test)
from core.modpoly import ModPoly, is_irreducible_mod_p
from core.monogenity import crit_prime_power
from core.zpoly import IntPoly, compose_power
from tests.helpers import random_monic, random_poly

PRIMES = (2, 3, 5, 7, 11, 13)


def random_spec(rng, p):
    while True:
        g = random_monic(rng, int(rng.integers(1, 3)), bound=p, nonzero_constant=False)
        if is_irreducible_mod_p(ModPoly.from_intpoly(g, p)):
            return MaximalIdealSpec(p, g)


class Test_MaximalIdealSpec(object):
    def test_valid(self):
        spec = MaximalIdealSpec(3, IntPoly([1, 0, 1]))
        assert spec.validate() is spec

    @pytest.mark.parametrize("p, coeffs", [
        (4, [1, 1]),
        (3, [1, 2]),
        (2, [1, 0, 1]),
        (5, [3]),
    ])
    def test_invalid(self, p, coeffs):
        with pytest.raises(DomainError):
            MaximalIdealSpec(p, IntPoly(coeffs)).validate()


class Test_membership(object):
    def test_examples(self):
        spec = MaximalIdealSpec(3, IntPoly([1, 1]))
        assert in_p_g2(IntPoly([0, 1]) * IntPoly([1, 1]) ** 2, spec)
        assert in_p2_g(IntPoly([9]), spec)
        assert in_maximal_square(IntPoly([3, 3]), spec)
        assert not in_maximal_square(IntPoly([3]), spec)
        assert not in_maximal_square(IntPoly([1, 1]), spec)

    def test_constructed_members(self, rng):
        for _ in range(100):
            p = int(rng.choice(PRIMES))
            spec = random_spec(rng, p)
            g = spec.g
            f = (g * g * random_poly(rng, int(rng.integers(0, 3)))
                 + g * random_poly(rng, int(rng.integers(0, 3))) * p
                 + random_poly(rng, int(rng.integers(0, 4))) * (p * p))
            assert in_maximal_square(f, spec)
            assert square_decomposition_test(f, spec)

    def test_two_formulations_agree(self, rng):
        for _ in range(300):
            p = int(rng.choice(PRIMES[:3]))
            spec = random_spec(rng, p)
            f = random_poly(rng, int(rng.integers(0, 7)), bound=2 * p * p)
            assert in_maximal_square(f, spec) == square_decomposition_test(f, spec)


class Test_divides_index(object):
    def test_dedekind_example(self):
        divides, witness = divides_index(IntPoly([3, 0, 1]), 2)
        assert divides
        assert witness == IntPoly([1, 1])

    def test_coprime_example(self):
        result = divides_index(IntPoly([-1, -1, 1]), 5)
        assert result == IndexTest(False)

    def test_eisenstein_prime(self):
        assert not divides_index(IntPoly([-6, 0, 0, 1]), 2).divides
        assert not divides_index(IntPoly([-6, 0, 0, 1]), 3).divides

    def test_requires_monic(self):
        with pytest.raises(DomainError):
            divides_index(IntPoly([1, 0, 2]), 3)

    def test_matches_dedekind_M_form(self, rng):
        for _ in range(500):
            p = int(rng.choice(PRIMES))
            f = random_monic(rng, int(rng.integers(1, 7)), bound=2 * p, nonzero_constant=False)
            result = divides_index(f, p)
            divides, details = dedekind_M_form(f, p)
            assert result.divides == divides
            if divides:
                assert result.witness in details.blocking

    def test_prime_power_criterion(self, rng):
        for _ in range(150):
            p = int(rng.choice(PRIMES[:4]))
            f = random_monic(rng, int(rng.integers(1, 4)), nonzero_constant=False)
            assert crit_prime_power(f, p) == divides_index(compose_power(f, p), p).divides

    def test_square_in_constant_term(self, rng):
        for _ in range(100):
            q = int(rng.choice(PRIMES[:4]))
            k = int(rng.integers(2, 5))
            f = random_monic(rng, int(rng.integers(1, 4)))
            t = int(rng.integers(1, 5)) * int(rng.choice([-1, 1]))
            f = IntPoly((q * q * t,) + f.coeffs[1:])
            assert divides_index(compose_power(f, k), q).divides


def test_dedekind_M_form_details():
    f = IntPoly([3, 0, 1])
    divides, details = dedekind_M_form(f, 2)
    assert divides
    assert details.factors == [(IntPoly([1, 1]), 2)]
    # x^2 + 3 - (x + 1)^2 = -2x + 2, halved and reduced: x + 1
    assert details.m_bar == ModPoly([1, 1], 2)
    assert details.blocking == [IntPoly([1, 1])]


def double_factor_member(rng, spec):
    """
    A random f with g^2 | f modulo p.
    """
    p, g = spec.p, spec.g
    return (g * g * random_poly(rng, int(rng.integers(0, 3)))
            + random_poly(rng, int(rng.integers(0, 4)), bound=p * p) * p)


class Test_double_factor(object):
    def test_square_reduces_to_remainder(self, rng):
        for _ in range(200):
            p = int(rng.choice(PRIMES[:4]))
            spec = random_spec(rng, p)
            f = double_factor_member(rng, spec)
            assert in_p_g2(f, spec)
            assert in_maximal_square(f, spec) == in_p2_g(f, spec)

    def test_square_survives_composition_with_p(self, rng):
        for _ in range(200):
            p = int(rng.choice(PRIMES[:4]))
            spec = random_spec(rng, p)
            f = double_factor_member(rng, spec)
            assert in_p_g2(f, spec)
            assert in_maximal_square(f, spec) == in_maximal_square(compose_power(f, p), spec), \
                f"{f.render()}, p={p}, g={spec.g.render()}"


def test_index_divisibility_lifts_to_compositions(rng):
    lifted = 0
    for _ in range(300):
        p = int(rng.choice(PRIMES[:4]))
        f = random_monic(rng, int(rng.integers(1, 5)))
        if not divides_index(f, p).divides:
            continue
        lifted += 1
        for l in (2, 3, 4):
            assert divides_index(compose_power(f, l), p).divides, f"{f.render()}, p={p}, l={l}"
    assert lifted > 0


def test_composition_coprime_to_p(rng):
    for _ in range(200):
        p = int(rng.choice(PRIMES[:4]))
        k = int(rng.choice([l for l in range(2, 7) if l % p]))
        f = random_monic(rng, int(rng.integers(1, 4)))
        expected = divides_index(f, p).divides or f.constant_term % (p * p) == 0
        assert divides_index(compose_power(f, k), p).divides == expected, f"{f.render()}, p={p}, k={k}"
