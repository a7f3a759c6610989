"""Bourbaki Degree Core Package."""

from bourbaki_degree.core.config import Settings, get_settings
from bourbaki_degree.core.errors import (
    BourbakiError,
    InvariantViolation,
    PolynomialParseError,
    ResolutionError,
    ThetaValidationError,
    UnsupportedCase,
    UsageError,
)
from bourbaki_degree.core.models import (
    AnalysisOptions,
    BettiEntry,
    BlockKind,
    BlockSpec,
    BourbakiIdealModel,
    BourbakiReport,
    BoundsModel,
    CatalogDiff,
    CatalogEntry,
    CatalogRow,
    DistributionRecord,
    EmaxRecord,
    EquigeneratedReport,
    ExpectedInvariants,
    FieldComparison,
    FlagsModel,
    HilbertCoefficientsModel,
    InputDocument,
    InputMode,
    KWSpec,
    OracleRow,
    Provenance,
    ReportDocument,
    RowReport,
    RowVariant,
    SelftestReport,
    SeriesModel,
    ShapeTag,
    SuiteResult,
    ValueClass,
)

__all__ = [
    # Config
    "Settings",
    "get_settings",
    # Errors
    "BourbakiError",
    "UsageError",
    "PolynomialParseError",
    "ThetaValidationError",
    "InvariantViolation",
    "ResolutionError",
    "UnsupportedCase",
    # Enums
    "ShapeTag",
    "InputMode",
    "BlockKind",
    "ValueClass",
    # Series and Resolution Models
    "SeriesModel",
    "HilbertCoefficientsModel",
    "BettiEntry",
    # Analysis Models
    "FlagsModel",
    "BoundsModel",
    "BourbakiIdealModel",
    "BourbakiReport",
    "EquigeneratedReport",
    "RowVariant",
    "RowReport",
    "EmaxRecord",
    "DistributionRecord",
    "OracleRow",
    "FieldComparison",
    # Catalog Models
    "BlockSpec",
    "KWSpec",
    "ExpectedInvariants",
    "CatalogEntry",
    "CatalogRow",
    "CatalogDiff",
    # Self-test Models
    "SuiteResult",
    "SelftestReport",
    # Documents
    "AnalysisOptions",
    "InputDocument",
    "Provenance",
    "ReportDocument",
]
