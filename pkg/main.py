#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
monocheck - Main Entry Point

Command-line surface for the monogenity checks:

    python main.py analyze "x^2-x-1" --k 6
    python main.py oracle "x^2+x+4" --k 3
    python main.py disc "x^3-2" --compose 4
    python main.py dedekind "x^2+3" --p 2
    python main.py scan "x^2-x-1" --bound 1000
    python main.py family cubic --m -20..20 --k 3 --format tsv

Exit codes: 0 Monogenic, 1 NotMonogenic, 2 Inconclusive or
HypothesisViolated, 64 usage or domain error.
"""

import argparse
import itertools
import logging
import os
import re
import sys
from collections import Counter

from core.batch_processor import BatchProcessor
from core.errors import DomainError
from core.families import FamilyInstance, FamilyTag, split_family, validate_instance
from core.idealtest import divides_index
from core.intfactor import factor, is_prime
from core.monogenity import AnalysisOptions, analyze_power_composition, slow_path_oracle, wss_scan
from core.report import Verdict
from core.zpoly import IntPoly, disc_power_composition, discriminant
from language.language_manager import change_language, get_text
from output_formats import json_exporter, tsv_exporter
from output_formats.text_exporter import TextExporter
from utils.config_manager import ConfigManager
from utils.factor_cache import FactorCache
from utils.poly_parser import parse_poly

logger = logging.getLogger("monocheck")

EXIT_MONOGENIC = 0
EXIT_NOT_MONOGENIC = 1
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 64

CLI_DEFAULTS = {"irreducibility_policy": "assume"}


class MonocheckArgumentParser(argparse.ArgumentParser):
    """
    Argument parser exiting with 64 on usage errors and accepting negative
    ranges such as "-20..20" as option values.
    """

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = re.compile(r'^-\d+$|^-\d*\.\d+$|^-\d+\.\.-?\d+$|^-\d+(,-?\d+)+$')

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_range(text):
    """
    Parse "a..b" (inclusive), "a,b,c" or a single integer.

    Returns:
        Tuple of integers in the given order
    """
    try:
        if ".." in text:
            low, high = text.split("..")
            low, high = int(low), int(high)
            if low > high:
                raise argparse.ArgumentTypeError(f"empty range {text!r}")
            return tuple(range(low, high + 1))
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid range {text!r}, expected a..b or a,b,c") from None


def positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _common_options():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "tsv"), help="output format")
    common.add_argument("--budget", type=positive_int, help="rho iteration cap per factorization")
    common.add_argument("--policy", choices=("require-certificate", "assume"),
                        help="irreducibility policy (default: assume)")
    common.add_argument("--witness-bound", type=positive_int, help="largest prime tried as a mod-p witness")
    common.add_argument("--cache", help="factorization cache file")
    common.add_argument("--config", help="configuration file (default: ~/.monocheck.json)")
    common.add_argument("--workers", type=positive_int, help="worker cap for family sweeps")
    common.add_argument("--timings", action="store_true", default=None, help="record per-stage timings")
    common.add_argument("--lang", choices=("EN", "ZHT"), help="language of text output")
    common.add_argument("--verbose", "-v", action="store_true", help="debug logging on stderr")
    return common


def build_parser():
    """
    Build the argument parser with all subcommands.
    """
    common = _common_options()
    parser = MonocheckArgumentParser(prog="monocheck", description=get_text("app.description"))
    subparsers = parser.add_subparsers(dest="command", required=True)

    analyze = subparsers.add_parser("analyze", parents=[common], help="fast criterion for f(x^k)")
    analyze.add_argument("poly", help='polynomial in x, e.g. "x^2-x-1"')
    analyze.add_argument("--k", type=positive_int, default=1, help="composition exponent")
    analyze.set_defaults(handler=cmd_analyze)

    oracle = subparsers.add_parser("oracle", parents=[common], help="direct Dedekind criterion on f(x^k)")
    oracle.add_argument("poly")
    oracle.add_argument("--k", type=positive_int, default=1)
    oracle.set_defaults(handler=cmd_oracle)

    disc = subparsers.add_parser("disc", parents=[common], help="discriminant of f, optionally of f(x^l)")
    disc.add_argument("poly")
    disc.add_argument("--compose", type=positive_int, metavar="L")
    disc.set_defaults(handler=cmd_disc)

    dedekind = subparsers.add_parser("dedekind", parents=[common], help="does p divide the index of f")
    dedekind.add_argument("poly")
    dedekind.add_argument("--p", type=int, required=True)
    dedekind.set_defaults(handler=cmd_dedekind)

    scan = subparsers.add_parser("scan", parents=[common], help="primes p <= bound dividing the index of f(x^p)")
    scan.add_argument("poly")
    scan.add_argument("--bound", type=positive_int, required=True)
    scan.set_defaults(handler=cmd_scan)

    family = subparsers.add_parser("family", help="sweep a polynomial family")
    families = family.add_subparsers(dest="family", required=True)
    sweep = argparse.ArgumentParser(add_help=False)
    sweep.add_argument("--k", type=parse_range, required=True, help="exponent range, a..b or a,b,c")
    sweep.add_argument("--output", help="append records to this file, skipping instances already in it")

    pure = families.add_parser("pure", parents=[common, sweep], help="x^k - A")
    pure.add_argument("--A", type=parse_range, required=True)
    cubic = families.add_parser("cubic", parents=[common, sweep], help="simplest cubics x^3 - m*x^2 - (m+3)*x - 1")
    cubic.add_argument("--m", type=parse_range, required=True)
    binom = families.add_parser("binom", parents=[common, sweep], help="x^d + A*(B*x + 1)^m")
    for name in ("A", "B", "d", "m"):
        binom.add_argument(f"--{name}", type=parse_range, required=True)
    split = families.add_parser("split", parents=[common, sweep], help="f splitting modulo every p | k")
    split.add_argument("--poly", required=True)
    split.add_argument("--all-residues", action="store_true", help="test every residue, not only the roots")
    family.set_defaults(handler=cmd_family)
    return parser


def _configure_logging(verbose):
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


def _run_config(args):
    config_manager = ConfigManager(args.config, defaults=CLI_DEFAULTS)
    return config_manager.build_run_config({
        "factor_budget": args.budget,
        "irreducibility_policy": args.policy,
        "witness_bound": args.witness_bound,
        "output_format": args.format,
        "cache_path": args.cache,
        "workers": args.workers,
        "language": args.lang,
        "timings": args.timings,
    })


def _verdict_exit_code(verdict):
    if verdict is Verdict.MONOGENIC:
        return EXIT_MONOGENIC
    if verdict is Verdict.NOT_MONOGENIC:
        return EXIT_NOT_MONOGENIC
    return EXIT_INCONCLUSIVE


def _render_report(report, output_format):
    if output_format == "json":
        return json_exporter.dump_report(report)
    if output_format == "tsv":
        return tsv_exporter.header() + tsv_exporter.dump_report(report)
    return TextExporter().export(report)


def cmd_analyze(args, run_config, options):
    f = parse_poly(args.poly)
    report = analyze_power_composition(f, args.k, options)
    sys.stdout.write(_render_report(report, run_config.output_format))
    return _verdict_exit_code(report.verdict)


def cmd_oracle(args, run_config, options):
    f = parse_poly(args.poly)
    report = slow_path_oracle(f, args.k, options)
    sys.stdout.write(_render_report(report, run_config.output_format))
    return _verdict_exit_code(report.verdict)


def _signed_factorization(value, options):
    if value == 0:
        return "0"
    factored = factor(value, options.budget, options.cache)
    return ("-" if factored.sign < 0 else "") + factored.render()


def cmd_disc(args, run_config, options):
    f = parse_poly(args.poly)
    value = discriminant(f)
    factored_text = _signed_factorization(value, options)
    composition = None
    if args.compose is not None:
        composition = (args.compose, disc_power_composition(f, args.compose))
    if run_config.output_format == "text":
        sys.stdout.write(TextExporter().export_disc(f, value, factored_text, composition))
    elif run_config.output_format == "json":
        sys.stdout.write(json_exporter.dump(json_exporter.disc_to_dict(f, value, factored_text, composition)))
    else:
        row = [f.render(), str(value), factored_text]
        if composition is not None:
            row += [str(composition[0]), str(composition[1].magnitude)]
        sys.stdout.write("\t".join(row) + "\n")
    return 0


def cmd_dedekind(args, run_config, options):
    f = parse_poly(args.poly)
    if not is_prime(args.p):
        raise DomainError(f"{args.p} is not prime")
    divides, witness = divides_index(f, args.p)
    if run_config.output_format == "text":
        sys.stdout.write(TextExporter().export_dedekind(f, args.p, divides, witness))
    elif run_config.output_format == "json":
        sys.stdout.write(json_exporter.dump(json_exporter.dedekind_to_dict(f, args.p, divides, witness)))
    else:
        witness_text = tsv_exporter.MISSING if witness is None else witness.render()
        sys.stdout.write(f"{f.render()}\t{args.p}\t{'yes' if divides else 'no'}\t{witness_text}\n")
    return 1 if divides else 0


def _log_progress(progress, stage_text, current, status):
    logger.debug(f"{stage_text}: {progress:.0%} {current} ({status})")


def cmd_scan(args, run_config, options):
    f = parse_poly(args.poly)
    primes = wss_scan(f, args.bound, _log_progress)
    if run_config.output_format == "text":
        sys.stdout.write(TextExporter().export_scan(f, args.bound, primes))
    elif run_config.output_format == "json":
        sys.stdout.write(json_exporter.dump(json_exporter.scan_to_dict(f, args.bound, primes)))
    else:
        sys.stdout.writelines(f"{p}\n" for p in primes)
    return 0 if not primes else 1


def family_instances(args):
    """
    Expand the parameter ranges of a family subcommand into instances, in
    parameter-major, exponent-minor order. Instances outside the family's
    domain are skipped.
    """
    tag = FamilyTag(args.family)
    if tag is FamilyTag.PURE:
        grids = [args.A]
    elif tag is FamilyTag.SIMPLEST_CUBIC:
        grids = [args.m]
    elif tag is FamilyTag.BINOMIAL_H:
        grids = [args.A, args.B, args.d, args.m]
    else:
        grids = [(parse_poly(args.poly).coeffs,)]

    instances = []
    skipped = 0
    for params in itertools.product(*grids):
        for k in args.k:
            instance = FamilyInstance(tag, tuple(params), k)
            try:
                validate_instance(instance)
            except DomainError as e:
                logger.debug(f"Family Sweep: skipping {instance.key()}: {e}")
                skipped += 1
                continue
            instances.append(instance)
    if skipped:
        logger.info(f"Family Sweep: skipped {skipped} instances outside the family domain")
    return instances


def _existing_records(path, output_format):
    """
    (params, k) -> verdict for the records already written to path.
    """
    if not path or output_format == "text" or not os.path.exists(path):
        return {}
    parse = json_exporter.parse_record if output_format == "json" else tsv_exporter.parse_record
    done = {}
    with open(path, 'r', encoding='utf-8') as f:
        for line in f:
            record = parse(line)
            if record is not None:
                params, k, verdict = record
                done[(params, k)] = verdict
    return done


def cmd_family(args, run_config, options):
    output_format = run_config.output_format
    instances = family_instances(args)
    done = _existing_records(args.output, output_format)
    counts = Counter()
    todo = []
    for instance in instances:
        previous = done.get((instance.describe_params(), instance.k))
        if previous is None:
            todo.append(instance)
        else:
            counts[previous] += 1
    if done:
        sys.stderr.write(get_text("family.skipped").format(count=len(instances) - len(todo), path=args.output) + "\n")

    if output_format == "json":
        dump = json_exporter.dump_record
    elif output_format == "tsv":
        dump = tsv_exporter.dump_record
    else:
        dump = TextExporter().export_record

    evaluator = None
    if getattr(args, "all_residues", False):
        def evaluator(instance, opts):
            return split_family(IntPoly(instance.params[0]), instance.k, opts, all_residues=True)

    processor = BatchProcessor(run_config.workers, options, evaluator)
    processor.set_progress_callback(_log_progress)

    if args.output:
        fresh = output_format == "text" or not os.path.exists(args.output) or os.path.getsize(args.output) == 0
        out = open(args.output, 'w' if output_format == "text" else 'a', encoding='utf-8')
    else:
        fresh = True
        out = sys.stdout
    try:
        if fresh and output_format == "tsv":
            out.write(tsv_exporter.header())
        for instance, report in processor.process(todo):
            out.write(dump(instance, report))
            out.flush()
            counts[report.verdict.value] += 1
    finally:
        if out is not sys.stdout:
            out.close()

    sys.stderr.write(TextExporter().export_summary({
        "total": sum(counts.values()),
        "monogenic": counts[Verdict.MONOGENIC.value],
        "not_monogenic": counts[Verdict.NOT_MONOGENIC.value],
        "inconclusive": counts[Verdict.INCONCLUSIVE.value],
        "violated": counts[Verdict.HYPOTHESIS_VIOLATED.value],
    }))
    return EXIT_INCONCLUSIVE if counts[Verdict.INCONCLUSIVE.value] else 0


def main(argv=None):
    """
    Parse arguments, load configuration and run one command.

    Returns:
        Process exit code
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args.verbose)
    try:
        run_config = _run_config(args)
        change_language(run_config.language)
        cache = FactorCache(run_config.cache_path) if run_config.cache_path else None
        options = AnalysisOptions.from_run_config(run_config, cache)
        return args.handler(args, run_config, options)
    except DomainError as e:
        sys.stderr.write(f"{get_text('error.prefix')}: {e}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
