"""Shared fixtures: fresh settings, rings and the D2|B1 matrix."""

import pytest

from bourbaki_degree.algebra.fields import FieldSpec
from bourbaki_degree.algebra.polynomials import polynomial_ring
from bourbaki_degree.analysis.theta import ThetaMatrix, validate
from bourbaki_degree.core.config import get_settings
from bourbaki_degree.kw.catalog import catalog

D2B1_ROWS = [["x1", "x2", "0", "x3"], ["0", "x1", "x2", "x4"]]
GENERIC_ROWS = [["x1", "x2", "x3", "x4"], ["x5", "x6", "x7", "x8"]]
QUADRICS = ("x1*x4", "x2*x3", "x1*x3 - x2*x4")


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    """Every test sees default settings with a single worker unless it says otherwise."""
    monkeypatch.setenv("BOURBAKI_THREADS", "1")
    for name in ("FIELD", "SEED", "PRIME", "SECONDARY_PRIME", "DEBUG"):
        monkeypatch.delenv(f"BOURBAKI_{name}", raising=False)
    get_settings.cache_clear()
    catalog.cache_clear()
    yield
    get_settings.cache_clear()
    catalog.cache_clear()


@pytest.fixture
def qq() -> FieldSpec:
    return FieldSpec()


@pytest.fixture
def fp() -> FieldSpec:
    return FieldSpec.parse("Fp:32003")


@pytest.fixture
def ring4(qq):
    return polynomial_ring(4, qq)


@pytest.fixture
def ring3(qq):
    return polynomial_ring(3, qq)


@pytest.fixture
def d2b1(qq) -> ThetaMatrix:
    return validate(D2B1_ROWS, 4, qq)


@pytest.fixture
def generic_linear(qq) -> ThetaMatrix:
    return validate(GENERIC_ROWS, 8, qq)
