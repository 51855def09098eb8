#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
TSV Exporter Module

One instance per line, columns: params, k, verdict, witness, reason.
Missing values are written as "-".
"""

COLUMNS = ("params", "k", "verdict", "witness", "reason")
MISSING = "-"


def header():
    return "\t".join(COLUMNS) + "\n"


def report_row(params, report):
    """
    Format one report as a TSV line.

    Args:
        params: Parameter text, e.g. "A=5" or "f=x^2 - x - 1"
        report: MonogenityReport
    """
    witness = MISSING if report.witness is None else str(report.witness)
    reason = MISSING if report.reason is None else report.reason.value
    return "\t".join((params, str(report.k), report.verdict.value, witness, reason)) + "\n"


def dump_record(instance, report):
    return report_row(instance.describe_params(), report)


def dump_report(report):
    return report_row(f"f={report.polynomial.render()}", report)


def parse_record(line):
    """
    (params, k, verdict) of a TSV data line, or None for the header and bad lines.
    """
    fields = line.rstrip("\n").split("\t")
    if len(fields) != len(COLUMNS) or fields[0] == COLUMNS[0]:
        return None
    try:
        return fields[0], int(fields[1]), fields[2]
    except ValueError:
        return None
