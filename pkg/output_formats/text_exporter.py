#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Text Exporter Module

Human-readable, localized rendering of reports and command results.
"""

from language.language_manager import get_text


class TextExporter:
    """
    Class for rendering results as localized text.
    """

    def _tri(self, value):
        if value is None:
            return get_text("tri.none")
        return get_text(f"tri.{value.value}")

    def _line(self, key, value):
        return f"{get_text(key)}: {value}"

    def export(self, report):
        """
        Render a MonogenityReport.

        Args:
            report: MonogenityReport

        Returns:
            Multi-line text ending with a newline
        """
        lines = [
            self._line("report.polynomial", report.polynomial.render()),
            self._line("report.composition", f"k = {report.k}"),
            self._line("report.verdict", get_text(f"verdict.{report.verdict.value}", report.verdict.value)),
        ]
        if report.witness is not None:
            lines.append(self._line("report.witness", report.witness))
        if report.reason is not None:
            lines.append(self._line("report.reason", get_text(f"reason.{report.reason.value}", report.reason.value)))
        if report.cause:
            lines.append(self._line("report.cause", report.cause))
        lines.append(self._line("report.method", report.method))

        lines.append(f"{get_text('report.conditions')}:")
        lines.append(f"  {self._line('report.monogenic_base', self._tri(report.monogenic_base))}")
        if report.prime_checks:
            checks = ", ".join(
                f"{p}: {get_text('report.pass') if ok else get_text('report.fail')}"
                for p, ok in sorted(report.prime_checks.items())
            )
        else:
            checks = get_text("tri.none")
        lines.append(f"  {self._line('report.prime_checks', checks)}")
        lines.append(f"  {self._line('report.f0_squarefree', self._tri(report.f0_squarefree))}")

        if report.irreducibility is not None:
            lines.append(self._line("report.certificate", report.irreducibility.describe()))
        if report.notes:
            lines.append(f"{get_text('report.notes')}:")
            lines.extend(f"  - {note}" for note in report.notes)
        if report.timings:
            lines.append(f"{get_text('report.timings')}:")
            lines.extend(f"  {stage}: {seconds:.6f}s" for stage, seconds in report.timings.items())
        return "\n".join(lines) + "\n"

    def export_record(self, instance, report):
        verdict = get_text(f"verdict.{report.verdict.value}", report.verdict.value)
        witness = "" if report.witness is None else f" ({report.witness})"
        return f"{instance.describe_params()} k={instance.k}: {verdict}{witness}\n"

    def export_disc(self, f, discriminant_value, factored_text, composition=None):
        lines = [
            self._line("report.polynomial", f.render()),
            self._line("disc.discriminant", discriminant_value),
            self._line("disc.factored", factored_text),
        ]
        if composition is not None:
            l, composed = composition
            lines.append(f"{get_text('disc.composition').format(l=l)}: {composed.magnitude}")
        return "\n".join(lines) + "\n"

    def export_dedekind(self, f, p, divides, witness):
        lines = [
            self._line("report.polynomial", f.render()),
            get_text("dedekind.divides" if divides else "dedekind.coprime").format(p=p),
        ]
        if witness is not None:
            lines.append(self._line("dedekind.witness", witness.render()))
        return "\n".join(lines) + "\n"

    def export_scan(self, f, bound, primes):
        if not primes:
            return get_text("scan.none").format(bound=bound) + "\n"
        return f"{get_text('scan.found').format(bound=bound)}: {', '.join(str(p) for p in primes)}\n"

    def export_summary(self, counts):
        return get_text("family.summary").format(**counts) + "\n"
