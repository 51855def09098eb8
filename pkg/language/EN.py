#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
English Language Module

This module contains the English language dictionary for text output.
"""

# Language name for display
LANGUAGE_NAME = "English"

LANGUAGE_DICT = {
    "app": {
        "title": "monocheck",
        "description": "Decide monogenity of power-compositional polynomials f(x^k).",
    },
    "verdict": {
        "Monogenic": "Monogenic",
        "NotMonogenic": "Not monogenic",
        "Inconclusive": "Inconclusive",
        "HypothesisViolated": "Family hypothesis violated",
    },
    "reason": {
        "BaseNotMonogenic": "f is not monogenic",
        "PrimePowerObstruction": "p divides the index of f(x^p)",
        "ConstantTermNotSquarefree": "f(0) is not squarefree",
        "Reducible": "f(x^k) is reducible",
    },
    "tri": {
        "yes": "yes",
        "no": "no",
        "unknown": "unknown",
        "none": "not evaluated",
    },
    "report": {
        "polynomial": "Polynomial",
        "composition": "Composition",
        "verdict": "Verdict",
        "witness": "Witness prime",
        "reason": "Reason",
        "cause": "Cause",
        "method": "Method",
        "conditions": "Conditions",
        "monogenic_base": "f monogenic",
        "prime_checks": "Prime checks",
        "pass": "pass",
        "fail": "fail",
        "f0_squarefree": "f(0) squarefree",
        "certificate": "Irreducibility",
        "notes": "Notes",
        "timings": "Timings",
    },
    "disc": {
        "discriminant": "Discriminant",
        "factored": "Factored",
        "composition": "Discriminant of f(x^{l}) (magnitude)",
    },
    "dedekind": {
        "divides": "{p} divides the index",
        "coprime": "{p} does not divide the index",
        "witness": "Witness factor",
    },
    "scan": {
        "none": "No prime p <= {bound} divides the index of f(x^p)",
        "found": "Primes p <= {bound} dividing the index of f(x^p)",
    },
    "family": {
        "summary": "{total} instances: {monogenic} monogenic, {not_monogenic} not monogenic, "
                   "{inconclusive} inconclusive, {violated} hypothesis violated",
        "skipped": "{count} instances already present in {path}",
    },
    "error": {
        "prefix": "error",
    },
}
