"""``bourbaki`` command line.

Exit codes: 0 success, 1 parse or usage error, 2 validation failure,
3 invariant violation, catalog diff or self-test failure.
"""

import argparse
import sys
from collections.abc import Callable, Sequence

from bourbaki_degree.algebra.fields import FieldSpec, secondary_field
from bourbaki_degree.analysis.equigenerated import equigenerated_report, ideal_theta
from bourbaki_degree.analysis.geometry import distribution_check, jacobian_distribution, jacobian_theta
from bourbaki_degree.analysis.invariants import Analysis, run_analysis
from bourbaki_degree.analysis.rowwise import emax_check, row_wise
from bourbaki_degree.analysis.theta import ThetaMatrix, validate
from bourbaki_degree.cli.documents import (
    dump,
    load_document,
    provenance,
    render_text,
    write_output,
)
from bourbaki_degree.cli.selftest import run_selftest
from bourbaki_degree.core.config import get_settings
from bourbaki_degree.core.errors import (
    InvariantViolation,
    ThetaValidationError,
    UnsupportedCase,
    UsageError,
)
from bourbaki_degree.core.models import (
    FieldComparison,
    InputDocument,
    InputMode,
    ReportDocument,
)
from bourbaki_degree.kw.verify import render_table, verify_catalog
from bourbaki_degree.observability.logging import (
    bind_run_context,
    clear_run_context,
    get_logger,
    setup_logging,
)
from bourbaki_degree.observability.metrics import flush_metrics, setup_metrics
from bourbaki_degree.oracle.dense import oracle_table

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VALIDATION = 2
EXIT_INVARIANT = 3

COMPARED_INVARIANTS = ("e", "e0", "e1_raw", "s", "bour", "dim_q", "pd_q", "shape", "betti_q")


# ============================================================================
# Analysis of one document
# ============================================================================


def _theta(document: InputDocument, field: FieldSpec) -> ThetaMatrix:
    if document.mode == InputMode.MATRIX:
        return validate(document.rows, document.n, field)
    if document.mode == InputMode.IDEAL:
        return ideal_theta(*document.gens, n=document.n, field=field)
    if document.n != 4:
        raise UsageError("jacobian documents need n = 4")
    f, g = document.pair
    return jacobian_theta(f, g, field)


def _analyze_document(document: InputDocument, field: FieldSpec) -> tuple[ThetaMatrix, Analysis]:
    theta = _theta(document, field)
    options = document.options
    resolution = options.resolution or document.mode == InputMode.IDEAL
    return theta, run_analysis(theta, resolution=resolution, mode=document.mode.value)


def compare_fields(first: Analysis, second: Analysis, label: str) -> FieldComparison:
    """Integer invariants that differ between two fields."""
    a = first.report.model_dump(mode="json")
    b = second.report.model_dump(mode="json")
    differences = [
        f"{key}: {a[key]} vs {b[key]}" for key in COMPARED_INVARIANTS if a[key] != b[key]
    ]
    return FieldComparison(field=label, differences=differences)


def build_report(
    document: InputDocument,
    field: FieldSpec,
    compare_field: FieldSpec | None = None,
) -> ReportDocument:
    """Run every analysis the document's options ask for."""
    settings = get_settings()
    theta, analysis = _analyze_document(document, field)
    options = document.options
    result = ReportDocument(
        provenance=provenance(document, field.label, settings.seed),
        mode=document.mode,
        report=analysis.report,
    )
    if document.mode == InputMode.IDEAL:
        result.equigenerated = equigenerated_report(analysis)
    if options.row_wise:
        result.row_wise = row_wise(theta, analysis)
        result.emax = emax_check(theta, analysis)
    if options.distribution:
        if document.mode == InputMode.JACOBIAN:
            f, g = document.pair
            result.distribution = jacobian_distribution(f, g, theta)
        else:
            result.distribution = distribution_check(theta, analysis.report)
    if options.oracle is not None:
        result.oracle = oracle_table(
            theta.graded_map(), analysis.series_syz, analysis.series_q, options.oracle
        )
    if compare_field is not None:
        _, other = _analyze_document(document, compare_field)
        result.comparison = compare_fields(analysis, other, compare_field.label)
    return result


# ============================================================================
# Commands
# ============================================================================


def _apply_flags(document: InputDocument, args: argparse.Namespace) -> InputDocument:
    options = document.options.model_copy()
    if getattr(args, "resolution", None) is not None:
        options.resolution = args.resolution
    if getattr(args, "row_wise", False):
        options.row_wise = True
    if getattr(args, "distribution", False):
        options.distribution = True
    if getattr(args, "oracle", None) is not None:
        options.oracle = args.oracle
    return document.model_copy(update={"options": options})


def _emit_report(result: ReportDocument, args: argparse.Namespace) -> int:
    write_output(render_text(result) if args.pretty else dump(result), args.out)
    if result.comparison is not None and result.comparison.differences:
        return EXIT_INVARIANT
    if result.oracle is not None and not all(row.agree for row in result.oracle):
        return EXIT_INVARIANT
    return EXIT_OK


def _compare_field(value: str | bool | None) -> FieldSpec | None:
    if value is None:
        return None
    if value is True:
        return secondary_field()
    return FieldSpec.parse(value)


def cmd_analyze(args: argparse.Namespace) -> int:
    document = _apply_flags(load_document(args.file), args)
    field = FieldSpec.parse(args.field or document.field)
    compare = _compare_field(args.compare_field)
    bind_run_context(seed=get_settings().seed, field=field.label)
    return _emit_report(build_report(document, field, compare), args)


def cmd_equi(args: argparse.Namespace) -> int:
    document = load_document(args.file)
    if document.mode != InputMode.IDEAL:
        raise UsageError("equi expects a document with mode 'ideal'")
    return cmd_analyze(args)


def cmd_oracle(args: argparse.Namespace) -> int:
    document = load_document(args.file)
    field = FieldSpec.parse(args.field or document.field)
    theta, analysis = _analyze_document(document, field)
    max_degree = get_settings().oracle_max_degree if args.max_degree is None else args.max_degree
    rows = oracle_table(theta.graded_map(), analysis.series_syz, analysis.series_q, max_degree)
    write_output(dump(rows), args.out)
    return EXIT_OK if all(row.agree for row in rows) else EXIT_INVARIANT


def cmd_kw_catalog(args: argparse.Namespace) -> int:
    field = FieldSpec.parse(args.field or get_settings().field)
    bind_run_context(field=field.label)
    result = verify_catalog(field, only=args.only, threads=args.threads)
    if args.second_prime:
        second = verify_catalog(secondary_field(), only=args.only, threads=args.threads)
        merged = result.diff + [f"[{second.field}] {line}" for line in second.diff]
        result = result.model_copy(update={"diff": merged})
    if args.pretty:
        text = render_table(result)
        if result.diff:
            text += "\n\n" + "\n".join(result.diff)
        write_output(text, args.out)
    else:
        write_output(dump(result), args.out)
    if args.verify and not result.passed:
        return EXIT_INVARIANT
    return EXIT_OK


def cmd_selftest(args: argparse.Namespace) -> int:
    settings = get_settings()
    seed = settings.seed if args.seed is None else args.seed
    bind_run_context(seed=seed)
    print(f"selftest seed {seed}", file=sys.stderr)
    report = run_selftest(
        samples=args.samples,
        seed=seed,
        field=args.field,
        max_degree=args.max_degree,
        threads=args.threads,
        inject_fault=args.inject_fault,
    )
    write_output(dump(report), args.out)
    for suite in report.suites:
        for line in suite.failures:
            print(f"{suite.name}: {line}", file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_INVARIANT


# ============================================================================
# Parser
# ============================================================================


class _Parser(argparse.ArgumentParser):
    """Usage errors exit with 1 like every other input problem."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="bourbaki",
        description="Syzygies, Hilbert coefficients and Bourbaki degrees of 2x4 graded matrices",
    )
    parser.add_argument("--log-level", default=None, help="override BOURBAKI_LOG_LEVEL")
    parser.add_argument("--threads", type=int, default=None, help="worker pool size")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--field", default=None, help="QQ or Fp:<prime>")
        p.add_argument("--pretty", action="store_true", help="aligned text instead of JSON")
        p.add_argument("--out", default=None, help="write to a file instead of stdout")

    analyze = sub.add_parser("analyze", help="analyze one input document")
    analyze.add_argument("file")
    common(analyze)
    analyze.add_argument(
        "--resolution", action=argparse.BooleanOptionalAction, default=None
    )
    analyze.add_argument("--row-wise", action="store_true")
    analyze.add_argument("--distribution", action="store_true")
    analyze.add_argument("--oracle", type=int, default=None, metavar="K")
    analyze.add_argument(
        "--compare-field",
        nargs="?",
        const=True,
        default=None,
        metavar="FIELD",
        help="rerun over a second field; defaults to Fp:BOURBAKI_SECONDARY_PRIME",
    )
    analyze.set_defaults(handler=cmd_analyze)

    equi = sub.add_parser("equi", help="analyze an ideal-mode document")
    equi.add_argument("file")
    common(equi)
    equi.set_defaults(
        handler=cmd_equi,
        resolution=None,
        row_wise=False,
        distribution=False,
        oracle=None,
        compare_field=None,
    )

    catalog = sub.add_parser("kw-catalog", help="Kronecker-Weierstrass golden corpus")
    common(catalog)
    catalog.add_argument("--verify", action="store_true", help="exit 3 on any mismatch")
    catalog.add_argument("--only", action="append", default=None, metavar="NAME")
    catalog.add_argument(
        "--second-prime",
        action="store_true",
        help="also verify over Fp:BOURBAKI_SECONDARY_PRIME",
    )
    catalog.set_defaults(handler=cmd_kw_catalog)

    selftest = sub.add_parser("selftest", help="randomized property suites")
    selftest.add_argument("--samples", type=int, default=None)
    selftest.add_argument("--seed", type=int, default=None)
    selftest.add_argument("--field", default=None)
    selftest.add_argument("--max-degree", type=int, default=None)
    selftest.add_argument("--out", default=None)
    selftest.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    selftest.set_defaults(handler=cmd_selftest)

    oracle = sub.add_parser("oracle", help="brute-force dimensions against series coefficients")
    oracle.add_argument("file")
    oracle.add_argument("--field", default=None)
    oracle.add_argument("--max-degree", type=int, default=None)
    oracle.add_argument("--out", default=None)
    oracle.set_defaults(handler=cmd_oracle)
    return parser


def run(handler: Callable[[argparse.Namespace], int], args: argparse.Namespace) -> int:
    """Map the error hierarchy onto exit codes."""
    try:
        return handler(args)
    except ThetaValidationError as exc:
        logger.error("validation_failed", violations=exc.violations, details=exc.details)
        print(f"validation failed: {', '.join(exc.violations)}", file=sys.stderr)
        return EXIT_VALIDATION
    except InvariantViolation as exc:
        logger.error("invariant_violated", error=str(exc))
        print(f"invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (UsageError, UnsupportedCase, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    setup_logging(args.log_level)
    setup_metrics()
    try:
        return run(args.handler, args)
    finally:
        flush_metrics()
        clear_run_context()


if __name__ == "__main__":
    raise SystemExit(main())
