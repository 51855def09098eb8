#!/usr/bin/env python
# -*- coding: utf-8 -*-
import json
import os

import pytest
import sympy

from core.errors import DomainError
from core.irreducibility import Policy
from core.modpoly import frobenius_defect
from core.monogenity import (NOTE_F0_INFORMATIONAL, AnalysisOptions, analyze_eisenstein_family,
                             analyze_power_composition, crit_prime_power, eisenstein_defect, index_prime_candidates,
                             is_monogenic, slow_path_oracle, wss_scan)
from core.report import ReasonCode, Tri, Verdict
from core.zpoly import IntPoly
from output_formats.json_exporter import report_to_dict
from utils.poly_parser import parse_poly
from tests.helpers import random_monic

GOLDEN_CASES = [
    ("analyze_golden_ratio_k6.json", "x^2 - x - 1", 6),
    ("analyze_simplest_cubic_m71_k13.json", "x^3 - 71*x^2 - 74*x - 1", 13),
    ("analyze_linear_12_k2.json", "x - 12", 2),
]


def _without_volatile(data):
    return {key: value for key, value in data.items() if key not in ("certificates", "timings")}


@pytest.mark.parametrize("name, text, k", GOLDEN_CASES)
def test_golden_reports(golden_dir, assume_options, name, text, k):
    with open(os.path.join(golden_dir, name), "r", encoding="utf-8") as f:
        expected = json.load(f)
    report = analyze_power_composition(parse_poly(text), k, assume_options)
    assert _without_volatile(report_to_dict(report)) == expected
    assert report.check_invariants()


class Test_is_monogenic(object):
    @pytest.mark.parametrize("coeffs, status, witness", [
        ([-12, 1], Tri.YES, None),
        ([-1, -1, 1], Tri.YES, None),
        ([-2, 0, 0, 1], Tri.YES, None),
        ([3, 0, 1], Tri.NO, 2),
        ([-5, 0, 1], Tri.NO, 2),
        ([1, 0, 1], Tri.YES, None),
    ])
    def test_known(self, coeffs, status, witness):
        assert tuple(is_monogenic(IntPoly(coeffs))) == (status, witness)

    def test_repeated_factor(self):
        with pytest.raises(DomainError):
            is_monogenic(IntPoly([1, 2, 1]))

    def test_unfactored_discriminant(self):
        p = int(sympy.nextprime(2 ** 40))
        q = int(sympy.nextprime(2 ** 41))
        result = is_monogenic(IntPoly([-2 * p * q, 0, 1]), budget=1)
        assert result.status is Tri.UNKNOWN
        assert result.cofactor == p * q


def test_crit_prime_power():
    assert crit_prime_power(IntPoly([-5, 1]), 2)
    assert not crit_prime_power(IntPoly([-3, 1]), 2)
    assert not crit_prime_power(IntPoly([-1, -1, 1]), 2)
    assert crit_prime_power(IntPoly([-3, 1]), 11)


class Test_analyze_power_composition(object):
    def test_pure_binomials(self, assume_options):
        verdicts = {A: analyze_power_composition(IntPoly([-A, 1]), 2, assume_options) for A in range(2, 7)}
        assert verdicts[2].verdict is Verdict.MONOGENIC
        assert verdicts[3].verdict is Verdict.MONOGENIC
        assert verdicts[6].verdict is Verdict.MONOGENIC
        assert verdicts[4].verdict is Verdict.NOT_MONOGENIC
        assert verdicts[4].reason is ReasonCode.REDUCIBLE
        assert verdicts[4].witness is None
        assert verdicts[5].verdict is Verdict.NOT_MONOGENIC
        assert verdicts[5].witness == 2
        assert verdicts[5].reason is ReasonCode.PRIME_POWER_OBSTRUCTION

    def test_base_not_monogenic(self, assume_options):
        report = analyze_power_composition(IntPoly([-5, 0, 1]), 3, assume_options)
        assert report.verdict is Verdict.NOT_MONOGENIC
        assert report.reason is ReasonCode.BASE_NOT_MONOGENIC
        assert report.witness == 2
        assert report.prime_checks == {3: True}

    def test_k_equal_one(self, strict_options):
        report = analyze_power_composition(IntPoly([-2, 0, 0, 1]), 1, strict_options)
        assert report.verdict is Verdict.MONOGENIC
        assert report.f0_squarefree is None
        assert report.check_invariants()

    def test_uncertified_irreducibility(self, strict_options, assume_options):
        strict = analyze_power_composition(IntPoly([1, 1]), 4, strict_options)
        assert strict.verdict is Verdict.INCONCLUSIVE
        assert strict.witness is None
        assert strict.cause
        assumed = analyze_power_composition(IntPoly([1, 1]), 4, assume_options)
        assert assumed.verdict is Verdict.MONOGENIC
        assert any("assumed" in note for note in assumed.notes)

    def test_timings(self):
        options = AnalysisOptions(policy=Policy.ASSUME, timings=True)
        report = analyze_power_composition(IntPoly([-1, -1, 1]), 6, options)
        assert set(report.timings) == {"irreducibility", "constant_term", "prime_checks", "base"}
        assert all(seconds >= 0 for seconds in report.timings.values())

    @pytest.mark.parametrize("coeffs, k", [([1, 2], 2), ([1], 2), ([-1, -1, 1], 0)])
    def test_invalid(self, coeffs, k):
        with pytest.raises(DomainError):
            analyze_power_composition(IntPoly(coeffs), k)


def test_fast_matches_oracle(rng, strict_options):
    decisive = 0
    for _ in range(300):
        f = random_monic(rng, int(rng.integers(2, 5)))
        k = int(rng.choice([2, 3, 4, 6, 8, 9, 12]))
        fast = analyze_power_composition(f, k, strict_options)
        oracle = slow_path_oracle(f, k, strict_options)
        assert fast.verdict == oracle.verdict, f"{f.render()}, k={k}"
        assert fast.check_invariants()
        assert oracle.check_invariants()
        if fast.is_decisive:
            decisive += 1
    assert decisive >= 150


def test_monogenic_composition_is_monogenic_for_divisors(rng, strict_options):
    compared = 0
    for _ in range(80):
        f = random_monic(rng, int(rng.integers(1, 4)))
        k = int(rng.choice([4, 6, 8, 12]))
        if analyze_power_composition(f, k, strict_options).verdict is not Verdict.MONOGENIC:
            continue
        compared += 1
        for t in sympy.divisors(k)[:-1]:
            report = analyze_power_composition(f, t, strict_options)
            assert report.verdict is Verdict.MONOGENIC, f"{f.render()}, k={k}, t={t}"
    assert compared > 0


def test_large_exponent(strict_options):
    report = analyze_power_composition(IntPoly([-1, -1, 1]), 1024, strict_options)
    assert report.verdict is Verdict.MONOGENIC
    assert report.irreducibility.certificate.describe() == "ModPWitness(3)[f(x^k)]"


def test_verdict_depends_on_radical_of_k(rng, strict_options):
    compared = 0
    for _ in range(50):
        f = random_monic(rng, int(rng.integers(1, 4)))
        p = int(rng.choice([2, 3]))
        small = analyze_power_composition(f, p, strict_options)
        large = analyze_power_composition(f, p * p, strict_options)
        if not (small.is_decisive and large.is_decisive):
            continue
        if ReasonCode.REDUCIBLE in (small.reason, large.reason):
            continue
        assert (small.verdict, small.witness) == (large.verdict, large.witness), f"{f.render()}, p={p}"
        compared += 1
    assert compared > 0


def test_oracle_witness(assume_options):
    report = slow_path_oracle(IntPoly([4, 1, 1]), 3, assume_options)
    assert report.verdict is Verdict.NOT_MONOGENIC
    assert report.witness == 2
    assert report.reason is None
    assert report.method == "oracle"


def test_index_prime_candidates():
    candidates = index_prime_candidates(IntPoly([-2, 0, 0, 1]), 6)
    assert candidates.primes == (2, 3)
    assert candidates.complete
    with pytest.raises(DomainError):
        index_prime_candidates(IntPoly([0, 1, 1]), 2)


class Test_analyze_eisenstein_family(object):
    def test_radical_shortcut(self, assume_options):
        report = analyze_eisenstein_family(IntPoly([-2, 0, 0, 1]), 2, assume_options)
        assert report.verdict is Verdict.MONOGENIC
        assert report.method == "eisenstein"
        assert report.prime_checks == {}
        assert any("rad(k)" in note for note in report.notes)


    def test_constant_term_note(self, assume_options):
        report = analyze_eisenstein_family(IntPoly([-2, 0, 0, 1]), 2, assume_options)
        assert report.f0_squarefree is Tri.YES
        assert NOTE_F0_INFORMATIONAL in report.notes
        base = analyze_eisenstein_family(IntPoly([-2, 0, 0, 1]), 1, assume_options)
        assert NOTE_F0_INFORMATIONAL not in base.notes

    def test_matches_generic(self, rng, assume_options):
        for _ in range(60):
            d = int(rng.integers(2, 4))
            A = int(rng.choice([-6, -5, -3, -2, 2, 3, 5, 6, 7, 10, 12]))
            lower = [int(rng.choice([-1, 1]))] + [int(c) for c in rng.integers(-3, 4, size=d - 1)]
            h = IntPoly(lower)
            f = IntPoly.monomial(d) + h.scale(A)
            k = int(rng.integers(1, 7))
            family = analyze_eisenstein_family(f, k, assume_options, A=A)
            generic = analyze_power_composition(f, k, assume_options)
            assert family.verdict == generic.verdict, f"{f.render()}, A={A}, k={k}"

    def test_defect_agrees_with_frobenius_defect(self):
        # h(0) = 1
        h = IntPoly([1, -2, 1])
        f = IntPoly.monomial(3) + h.scale(5)
        for p in (2, 3, 5, 7, 11):
            assert eisenstein_defect(5, h, f, p) == frobenius_defect(f, p, reduce_by_f=True)

    def test_shape(self):
        with pytest.raises(DomainError):
            analyze_eisenstein_family(IntPoly([-1, -1, 1]), 2, A=2)
        with pytest.raises(DomainError):
            analyze_eisenstein_family(IntPoly([-4, 2, 1]), 2)


class Test_wss_scan(object):
    def test_golden_ratio(self):
        assert wss_scan(IntPoly([-1, -1, 1]), 1000) == []

    def test_wieferich(self):
        progress = []
        hits = wss_scan(IntPoly([-2, 1]), 4000, lambda value, *_: progress.append(value))
        assert hits == [1093, 3511]
        assert progress[-1] == 1.0
        assert progress == sorted(progress)
