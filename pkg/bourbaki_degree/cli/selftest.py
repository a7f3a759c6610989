"""Randomized property suites behind ``bourbaki selftest``.

Each sample draws from its own ``random.Random`` seeded with
``"<seed>-<suite>-<index>"`` so any failure can be replayed alone.
"""

import random
from collections.abc import Callable

from bourbaki_degree.algebra.fields import FieldSpec
from bourbaki_degree.analysis.equigenerated import equigenerated
from bourbaki_degree.analysis.geometry import jacobian_distribution, jacobian_theta
from bourbaki_degree.analysis.invariants import psi_syzygies, run_analysis
from bourbaki_degree.analysis.sampling import random_pencil_jacobian, random_quadric_triple, random_theta
from bourbaki_degree.analysis.theta import Entry
from bourbaki_degree.cli.pool import ordered_map
from bourbaki_degree.core.config import get_settings
from bourbaki_degree.core.errors import BourbakiError, ThetaValidationError
from bourbaki_degree.core.models import SelftestReport, SuiteResult
from bourbaki_degree.observability.logging import get_logger
from bourbaki_degree.observability.metrics import SELFTEST_FAILURES
from bourbaki_degree.oracle.dense import oracle_table
from bourbaki_degree.resolution.minimal import composites_vanish, euler_characteristic

logger = get_logger(__name__)

PENCIL_VALUES = {0, 1, 3}


def sample_rng(seed: int, suite: str, index: int) -> random.Random:
    return random.Random(f"{seed}-{suite}-{index}")


def check_random_matrix(
    rng: random.Random, field: FieldSpec, max_degree: int, inject_fault: bool = False
) -> list[str]:
    """Formula against direct route, bounds, minor syzygies, resolution and oracle."""
    n = rng.randint(3, 5)
    theta = random_theta(rng, n, 2, field)
    analysis = run_analysis(theta, resolution=True)
    report = analysis.report
    failures = []

    if inject_fault:
        failures.append("injected fault")
    if report.bour is not None and report.bour_formula != report.bour_direct:
        failures.append(f"formula {report.bour_formula} != direct {report.bour_direct}")
    if not report.bounds_ok:
        failures.append(f"bounds violated: {report.bounds.model_dump()}")
    psi_syzygies(theta)

    res = analysis.resolution
    if res is not None:
        if not composites_vanish(res):
            failures.append("consecutive differentials do not compose to zero")
        for t in range(-theta.d2, max_degree + 1):
            if euler_characteristic(res, t, n) != analysis.series_q.coefficient(t):
                failures.append(f"Euler characteristic differs from Hilb(Q) at degree {t}")
                break

    rows = oracle_table(theta.graded_map(), analysis.series_syz, analysis.series_q, max_degree)
    failures += [f"oracle disagrees at degree {r.degree}" for r in rows if not r.agree]
    return failures


def check_quadric_triple(rng: random.Random, field: FieldSpec) -> list[str]:
    """Height-2 quadric triples in three variables never have Bourbaki degree 2."""
    theta = random_quadric_triple(rng, 3, field)
    f1, f2, f3, _ = theta.g
    result = equigenerated(f1, f2, f3, 3, field)
    failures = []
    if result.bour == 2:
        failures.append(f"Bour(J) = 2 for J = {result.report.rows[1][:3]}")
    if not result.identity_ok:
        failures.append("deg(R/J) + Bour(J) != d^2 + e^2 - ed")
    return failures


def pencil_failures(f: Entry, g: Entry, field: FieldSpec) -> list[str]:
    """Outcome and distribution checks for the Jacobian matrix of one pencil (f, g)."""
    try:
        theta = jacobian_theta(f, g, field)
    except ThetaValidationError as exc:
        return [f"Jacobian matrix rejected: {', '.join(exc.violations)}"]
    report = run_analysis(theta, resolution=True, mode="jacobian").report
    failures = []
    value = 0 if report.flags.compressible else report.bour
    if value not in PENCIL_VALUES:
        failures.append(f"pencil with Bour = {value}: {report.rows}")
    record = jacobian_distribution(f, g, theta)
    if not record.regular_sequence:
        failures.append(f"Euler forms {record.h1}, {record.h2} are not a regular sequence")
    return failures


def check_pencil(rng: random.Random, field: FieldSpec) -> list[str]:
    """Jacobians of quadric pencils are free, nearly free or of Buchsbaum-Rim type."""
    f, g, _ = random_pencil_jacobian(rng, field)
    return pencil_failures(f, g, field)


def _run_suite(
    name: str,
    samples: int,
    seed: int,
    check: Callable[[random.Random], list[str]],
    threads: int | None,
) -> SuiteResult:
    def one(index: int) -> list[str]:
        tag = f"{seed}-{name}-{index}"
        try:
            found = check(sample_rng(seed, name, index))
        except BourbakiError as exc:
            found = [f"{type(exc).__name__}: {exc}"]
        return [f"[{tag}] {message}" for message in found]

    failures = [line for lines in ordered_map(one, range(samples), threads) for line in lines]
    if failures:
        SELFTEST_FAILURES.labels(suite=name).inc(len(failures))
    logger.info("selftest_suite", suite=name, samples=samples, failures=len(failures))
    return SuiteResult(name=name, samples=samples, failures=failures)


def run_selftest(
    samples: int | None = None,
    seed: int | None = None,
    field: FieldSpec | str | None = None,
    max_degree: int | None = None,
    threads: int | None = None,
    inject_fault: bool = False,
) -> SelftestReport:
    """All property suites; the counts default to the configured ones."""
    settings = get_settings()
    seed = settings.seed if seed is None else seed
    samples = settings.samples if samples is None else samples
    field = FieldSpec.parse(field or settings.field)
    max_degree = settings.oracle_max_degree if max_degree is None else max_degree
    negative = min(samples, settings.negative_samples)
    pencils = min(samples, settings.pencil_samples)

    suites = [
        _run_suite(
            "matrices",
            samples,
            seed,
            lambda rng: check_random_matrix(rng, field, max_degree, inject_fault),
            threads,
        ),
        _run_suite("quadric-triples", negative, seed, lambda rng: check_quadric_triple(rng, field), threads),
        _run_suite("pencils", pencils, seed, lambda rng: check_pencil(rng, field), threads),
    ]
    return SelftestReport(seed=seed, field=field.label, suites=suites)
