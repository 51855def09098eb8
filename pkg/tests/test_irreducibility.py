#!/usr/bin/env python
# -*- coding: utf-8 -*-
import pytest

from core.errors import DomainError
from core.irreducibility import (CertificateKind, Policy, Status, certify_irreducible, eisenstein_witness,
                                 integer_roots, is_eisenstein_at)
from core.zpoly import IntPoly, compose_power
from tests.helpers import random_monic, to_sympy


def test_integer_roots():
    f = IntPoly([-6, 11, -6, 1])
    assert sorted(integer_roots(f)) == [1, 2, 3]
    assert integer_roots(IntPoly([0, 0, -4, 1])) == [0, 4]
    assert integer_roots(IntPoly([1, 0, 1])) == []
    with pytest.raises(DomainError):
        integer_roots(IntPoly([1, 2]))


def test_eisenstein():
    assert is_eisenstein_at(IntPoly([-2, 0, 0, 1]), 2)
    assert not is_eisenstein_at(IntPoly([-4, 0, 0, 1]), 2)
    assert eisenstein_witness(IntPoly([10, 15, 1])) == 5
    assert eisenstein_witness(IntPoly([-1, -1, 1])) is None
    assert eisenstein_witness(IntPoly([-4, 2, 1])) is None


class Test_certify_irreducible(object):
    def test_integer_root(self):
        result = certify_irreducible(IntPoly([-4, 1]), 2)
        assert result.status is Status.REDUCIBLE
        assert result.root in (2, -2)
        assert result.describe().startswith("Reducible")

    def test_zero_constant_term(self):
        result = certify_irreducible(IntPoly([0, 1, 1]), 3)
        assert result.status is Status.REDUCIBLE
        assert result.factor == IntPoly([0, 1])

    def test_repeated_factor(self):
        f = IntPoly([1, 0, 1]) ** 2
        result = certify_irreducible(f, 2)
        assert result.status is Status.REDUCIBLE
        assert result.factor == IntPoly([1, 0, 0, 0, 1])

    def test_linear(self):
        result = certify_irreducible(IntPoly([-12, 1]))
        assert result.certificate.kind is CertificateKind.LOW_DEGREE_COMPLETE

    def test_low_degree_complete(self):
        result = certify_irreducible(IntPoly([-2, 0, 0, 1]))
        assert result.certificate.kind is CertificateKind.INTEGER_ROOT_COMPLETE
        assert result.certificate.describe() == "IntegerRootComplete[f]"

    def test_eisenstein_lifts(self):
        result = certify_irreducible(IntPoly([-2, 0, 0, 1]), 6)
        assert result.is_certified
        assert result.certificate.kind is CertificateKind.EISENSTEIN_WITNESS
        assert result.certificate.describe() == "EisensteinWitness(2)[f(x^k)]"

    def test_modp_witness(self):
        # x^4 - x^2 - 1 is irreducible modulo 3
        result = certify_irreducible(IntPoly([-1, -1, 1]), 2)
        assert result.certificate.kind is CertificateKind.MODP_WITNESS
        assert result.certificate.prime == 3

    def test_modp_witness_high_degree(self):
        # degree 2048 after composition; the witness is found from f modulo 3
        result = certify_irreducible(IntPoly([-1, -1, 1]), 1024)
        assert result.certificate.kind is CertificateKind.MODP_WITNESS
        assert result.certificate.prime == 3

    def test_no_certificate(self):
        # x^4 + 1 is irreducible but reducible modulo every prime
        strict = certify_irreducible(IntPoly([1, 1]), 4, Policy.REQUIRE_CERTIFICATE)
        assert strict.status is Status.UNKNOWN
        assert strict.describe() == "Unknown"
        assumed = certify_irreducible(IntPoly([1, 1]), 4, Policy.ASSUME)
        assert assumed.is_assumed
        assert assumed.certificate.describe() == "Assumed[f(x^k)]"

    @pytest.mark.parametrize("coeffs, k", [([1], 2), ([1, 0, 2], 1)])
    def test_invalid(self, coeffs, k):
        with pytest.raises(DomainError):
            certify_irreducible(IntPoly(coeffs), k)

    def test_exponent(self):
        with pytest.raises(DomainError):
            certify_irreducible(IntPoly([1, 1]), 0)

    def test_never_wrong(self, rng):
        for _ in range(150):
            f = random_monic(rng, int(rng.integers(1, 4)))
            k = int(rng.integers(1, 4))
            g = to_sympy(compose_power(f, k))
            result = certify_irreducible(f, k)
            if result.status is Status.CERTIFIED:
                assert g.is_irreducible
            elif result.status is Status.REDUCIBLE:
                assert not g.is_irreducible
            else:
                assert g.degree() >= 4
