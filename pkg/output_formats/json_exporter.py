#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
JSON Exporter Module

This module converts reports into the stable JSON schema:

    {input, k, verdict, witness, reasons[], conditions{}, certificates[], timings{}}

Single reports are written indented; sweep records are written one per
line (JSON lines) with the family and its parameters in front.
"""

import json


def _tri(value):
    return None if value is None else value.value


def report_to_dict(report):
    """
    Convert a MonogenityReport to a JSON-compatible dictionary.

    Args:
        report: MonogenityReport

    Returns:
        dict with the stable schema keys in a fixed order
    """
    certificates = []
    if report.irreducibility is not None:
        certificates.append(report.irreducibility.describe())
    return {
        "input": report.polynomial.render(),
        "k": report.k,
        "verdict": report.verdict.value,
        "witness": report.witness,
        "reasons": [] if report.reason is None else [report.reason.value],
        "conditions": {
            "monogenic_base": _tri(report.monogenic_base),
            "prime_checks": {str(p): "pass" if ok else "fail" for p, ok in sorted(report.prime_checks.items())},
            "f0_squarefree": _tri(report.f0_squarefree),
        },
        "certificates": certificates,
        "timings": {stage: round(seconds, 6) for stage, seconds in report.timings.items()},
    }


def dump_report(report):
    """
    Serialize a single report, indented, with a trailing newline.
    """
    return json.dumps(report_to_dict(report), indent=2, ensure_ascii=False) + "\n"


def record_to_dict(instance, report):
    record = {"family": instance.family.value, "params": instance.describe_params()}
    record.update(report_to_dict(report))
    return record


def dump_record(instance, report):
    """
    One JSON-lines record of a family sweep.
    """
    return json.dumps(record_to_dict(instance, report), ensure_ascii=False, separators=(",", ":")) + "\n"


def parse_record(line):
    """
    (params, k, verdict) of a JSON-lines record, or None when the line is not one.
    """
    try:
        record = json.loads(line)
        return record["params"], int(record["k"]), record["verdict"]
    except (ValueError, KeyError, TypeError):
        return None


def disc_to_dict(f, discriminant_value, factored_text, composition=None):
    """
    Discriminant of f and, optionally, the magnitude of D(f(x^l)).

    Args:
        f: IntPoly
        discriminant_value: D(f)
        factored_text: Signed factorization of D(f), e.g. "-2^2*5"
        composition: Optional (l, CompositionDiscriminant)
    """
    data = {
        "input": f.render(),
        "discriminant": discriminant_value,
        "factored": factored_text,
    }
    if composition is not None:
        l, composed = composition
        data["compose"] = l
        data["composition_magnitude"] = composed.magnitude
    return data


def dedekind_to_dict(f, p, divides, witness):
    return {
        "input": f.render(),
        "p": p,
        "divides_index": divides,
        "witness": None if witness is None else witness.render(),
    }


def scan_to_dict(f, bound, primes):
    return {"input": f.render(), "bound": bound, "primes": list(primes)}


def dump(data):
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"
