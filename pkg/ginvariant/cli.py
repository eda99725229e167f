"""
Command-line front end.

    analyze   --d D [--format json|csv] [--verify]
    survey    --d-max N [--format csv|json]
    verify    --d-max N [--verify-margin M]
    emit-sage --d D --p P

Reports go to standard output, diagnostics to standard error. Exit codes:
0 success, 2 bad input (DomainError), 1 internal inconsistency or failed
verification.
"""

import argparse
import csv
import json
import logging
import sys
import time
from typing import List, Optional

from ginvariant.concurrent_processor import ConcurrentProcessor
from ginvariant.config.settings import settings
from ginvariant.errors import DomainError, InvariantViolation
from ginvariant.field import is_square_free, make_field
from ginvariant.ginv import analyze_field
from ginvariant.report import SURVEY_COLUMNS, ReportDocument, error_row, survey_row
from ginvariant.sage_script import emit_sage_script
from ginvariant.utils.logging import setup_logging
from ginvariant.verifier import VerificationAgent

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_DOMAIN = 2


def _elapsed_ms(start: float) -> int:
    return int(round((time.perf_counter() - start) * 1000))


def _csv_writer(stream) -> csv.DictWriter:
    writer = csv.DictWriter(stream, fieldnames=SURVEY_COLUMNS, lineterminator="\n")
    writer.writeheader()
    return writer


def build_document(d: int, search_cap: int, max_workers: int = 1) -> ReportDocument:
    start = time.perf_counter()
    report = analyze_field(d, search_cap=search_cap, max_workers=max_workers)
    return ReportDocument.from_field_report(report, elapsed_ms=_elapsed_ms(start))


def cmd_analyze(args: argparse.Namespace) -> int:
    threads = settings.resolve_threads(args.threads)
    doc = build_document(args.d, args.search_cap, threads)
    status = EXIT_OK

    if args.verify:
        if args.d > args.oracle_d_cap:
            doc.notes.append(f"verification skipped: d={args.d} exceeds the oracle cap {args.oracle_d_cap}")
        else:
            agent = VerificationAgent(margin=args.verify_margin, oracle_d_cap=args.oracle_d_cap)
            checked = agent.check_field(args.d, args.search_cap)
            for failure in checked.failures:
                doc.notes.append(f"verification: {failure.describe()}")
            if checked.failures:
                status = EXIT_FAILURE

    if args.format == "csv":
        _csv_writer(sys.stdout).writerow(survey_row(doc))
    else:
        sys.stdout.write(doc.to_json() + "\n")
    return status


def cmd_survey(args: argparse.Namespace) -> int:
    threads = settings.resolve_threads(args.threads)
    if args.d_max < 1:
        raise DomainError(f"d-max must be at least 1, got {args.d_max}")
    ds = [d for d in range(1, args.d_max + 1) if is_square_free(d)]
    logger.info(f"[SURVEY] {len(ds)} square-free d up to {args.d_max} on {threads} thread(s)")

    writer = _csv_writer(sys.stdout) if args.format == "csv" else None
    with ConcurrentProcessor(max_workers=threads) as processor:
        results = processor.map_ordered(lambda d: build_document(d, args.search_cap), ds)

    failed = 0
    for result in results:
        if result.error is not None:
            failed += 1
            logger.warning(f"[SURVEY] d={result.item}: {result.error}")
            if writer is not None:
                writer.writerow(error_row(result.item, make_field(result.item).discriminant, str(result.error)))
            else:
                sys.stdout.write(json.dumps({"d": result.item, "error": str(result.error)}) + "\n")
            continue
        if writer is not None:
            writer.writerow(survey_row(result.value))
        else:
            sys.stdout.write(result.value.to_json(indent=None) + "\n")

    logger.info(f"[SURVEY] done: {len(ds) - failed} ok, {failed} failed")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    threads = settings.resolve_threads(args.threads)
    agent = VerificationAgent(margin=args.verify_margin, oracle_d_cap=args.oracle_d_cap)
    summary = agent.run(args.d_max, search_cap=args.search_cap, max_workers=threads)
    sys.stdout.write(agent.format_report(summary) + "\n")
    return EXIT_OK if summary.passed else EXIT_FAILURE


def cmd_emit_sage(args: argparse.Namespace) -> int:
    sys.stdout.write(emit_sage_script(args.d, args.p))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--search-cap", type=int, default=settings.SEARCH_CAP,
                        help="largest prime searched per non-principal class")
    common.add_argument("--threads", type=int, default=settings.THREADS, help="worker threads, 0 = one per CPU")
    common.add_argument("--log-level", default=settings.LOG_LEVEL, help="DEBUG, INFO, WARNING or ERROR")

    verify_flags = argparse.ArgumentParser(add_help=False)
    verify_flags.add_argument("--verify-margin", type=int, default=settings.VERIFY_MARGIN,
                              help="width of the window [C, C + margin) checked above each bound")
    verify_flags.add_argument("--oracle-d-cap", type=int, default=settings.ORACLE_D_CAP,
                              help="largest d the brute-force oracle may run on")

    parser = argparse.ArgumentParser(
        prog="ginvariant",
        description="g-invariants of unary Hermitian lattices over imaginary quadratic fields",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", parents=[common, verify_flags], help="analyze one field")
    analyze.add_argument("--d", type=int, required=True)
    analyze.add_argument("--format", choices=["json", "csv"], default="json")
    analyze.add_argument("--verify", action="store_true", help="also run the oracle checks for this d")
    analyze.set_defaults(handler=cmd_analyze)

    survey = sub.add_parser("survey", parents=[common], help="one row per square-free d <= d-max")
    survey.add_argument("--d-max", type=int, required=True)
    survey.add_argument("--format", choices=["csv", "json"], default="csv")
    survey.set_defaults(handler=cmd_survey)

    verify = sub.add_parser("verify", parents=[common, verify_flags], help="run the oracle suites")
    verify.add_argument("--d-max", type=int, required=True)
    verify.set_defaults(handler=cmd_verify)

    emit = sub.add_parser("emit-sage", parents=[common], help="print a SageMath session for (d, p)")
    emit.add_argument("--d", type=int, required=True)
    emit.add_argument("--p", type=int, required=True)
    emit.set_defaults(handler=cmd_emit_sage)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        setup_logging(args.log_level)
    except ValueError as e:
        parser.error(str(e))

    try:
        return args.handler(args)
    except DomainError as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_DOMAIN
    except InvariantViolation as e:
        sys.stderr.write(f"internal error: {e}\n")
        return EXIT_FAILURE
    except ValueError as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_DOMAIN
    except Exception as e:
        logger.error(f"Unexpected error: {e}", exc_info=True)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
