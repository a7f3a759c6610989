"""Bourbaki Degree Report and Document Models."""

from enum import Enum
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, model_validator


# ============================================================================
# Enums
# ============================================================================


class ShapeTag(str, Enum):
    """Named shapes of the minimal resolution of coker(Theta)."""

    FREE = "free"
    BUCHSBAUM_RIM = "buchsbaum-rim"
    NEARLY_FREE = "nearly-free"
    THREE_SYZYGY = "three-syzygy"
    OTHER = "other"


class InputMode(str, Enum):
    """How an input document describes Theta."""

    MATRIX = "matrix"
    IDEAL = "ideal"
    JACOBIAN = "jacobian"


class BlockKind(str, Enum):
    """Kronecker-Weierstrass block families."""

    NILPOTENT = "D"
    JORDAN = "J"
    SCROLL = "B"


class ValueClass(str, Enum):
    """Value classes of the Bourbaki degree of an equigenerated ideal."""

    PERFECT = "perfect"  # Bour = 0
    ONE = "one"  # Bour = 1
    TWO = "two"  # Bour = 2
    D_SQUARED_MINUS_ONE = "d^2-1"
    COMPLETE_INTERSECTION = "d^2"


# ============================================================================
# Series and Resolution Models
# ============================================================================


class SeriesModel(BaseModel):
    """Canonical Hilbert series h(t)/(1-t)^pole."""

    numerator: list[list[int]] = Field(description="[exponent, coefficient] pairs")
    pole: int
    text: str


class HilbertCoefficientsModel(BaseModel):
    """Hilbert coefficients at pole order n-1."""

    e0: int
    e1_raw: int
    e1: int = Field(description="e1 with the sign flipped when e0 = 0")
    dim: int
    degree_at_dim: int


class BettiEntry(BaseModel):
    """One nonzero graded Betti number."""

    i: int = Field(ge=0)
    degree: int
    rank: int = Field(ge=1)


# ============================================================================
# Analysis Models
# ============================================================================


class FlagsModel(BaseModel):
    free: bool
    nearly_free: bool
    three_syzygy: bool
    br_shape: bool
    compressible: bool


class BoundsModel(BaseModel):
    """Inequalities every Theta must satisfy."""

    e_in_range: bool
    e0_in_range: bool
    upper: int | None = None
    lower: float | None = None
    upper_ok: bool = True
    equality_iff_e_is_d: bool = True
    lower_ok: bool = True

    @property
    def all_ok(self) -> bool:
        return (
            self.e_in_range
            and self.e0_in_range
            and self.upper_ok
            and self.equality_iff_e_is_d
            and self.lower_ok
        )


class BourbakiIdealModel(BaseModel):
    """Hilbert data of the Bourbaki ideal of a minimal syzygy."""

    shift: int
    degree: int
    free: bool
    hilbert_polynomial: str
    constant_term: str
    generator: list[str] = Field(description="the chosen minimal syzygy")
    betti: list[BettiEntry] | None = Field(
        default=None, description="predicted resolution, complete intersections only"
    )


class BourbakiReport(BaseModel):
    """Every numeric invariant of one matrix Theta."""

    n: int
    field: str
    rows: list[list[str]]
    swapped: bool = False
    d1: int
    d2: int
    d: int
    e: int
    e0: int
    e1_raw: int
    e1: int
    q: int
    ell: int
    s: int | None = None
    bour: int | None = None
    bour_formula: int | None = None
    bour_direct: int | None = None
    dim_q: int
    depth_q: int | None = None
    pd_q: int | None = None
    shape: ShapeTag | None = None
    flags: FlagsModel
    bounds: BoundsModel
    bounds_ok: bool
    series_q: SeriesModel
    series_q_twisted: SeriesModel
    series_syz: SeriesModel
    hilbert_polynomial_q: str
    betti_q: list[BettiEntry] | None = None
    betti_q_twisted: list[BettiEntry] | None = None
    betti_syz: list[BettiEntry] | None = None
    expected_betti: list[BettiEntry] | None = None
    bourbaki_ideal: BourbakiIdealModel | None = None


class EquigeneratedReport(BaseModel):
    """Invariants of J = (f1, f2, f3) through the matrix [[0,0,0,1],[f1,f2,f3,0]]."""

    d: int
    e: int
    bour: int | None
    deg_rj: int = Field(serialization_alias="deg_RJ")
    dim_rj: int
    tau: int | None = None
    complete_intersection: bool
    perfect: bool
    saturated: bool
    identity_ok: bool
    bound_ok: bool
    value_classes: list[ValueClass]
    betti_rj: list[BettiEntry]
    report: BourbakiReport


class RowVariant(BaseModel):
    """A closed formula for deg(R/I_row) evaluated with one degree choice."""

    uses_degree: int
    value: int
    matches: bool


class RowReport(BaseModel):
    """Comparison of Syz(Theta) with the syzygies of each row."""

    e_f: int
    e_g: int
    shift_f: int
    shift_g: int
    deg_ri_f: int
    deg_ri_g: int
    deg_rtheta_f: int
    deg_rtheta_g: int
    stated_f: RowVariant
    stated_g: RowVariant
    derived_f: RowVariant
    derived_g: RowVariant


class EmaxRecord(BaseModel):
    """Comparison of J_f meet J_g with J_f J_g in the critical degree."""

    t: int
    degree: int
    dim_intersection: int
    dim_product: int
    condition_holds: bool
    e: int
    implication_ok: bool


class DistributionRecord(BaseModel):
    h1: str
    h2: str
    dim: int
    regular_sequence: bool


class OracleRow(BaseModel):
    """Brute-force against series values at one degree."""

    degree: int
    kernel_dim: int
    kernel_dim_series: int
    quotient_dim: int
    quotient_dim_series: int

    @property
    def agree(self) -> bool:
        return (
            self.kernel_dim == self.kernel_dim_series
            and self.quotient_dim == self.quotient_dim_series
        )


class FieldComparison(BaseModel):
    """Integer invariants recomputed over a second field."""

    field: str
    differences: list[str]


# ============================================================================
# Catalog Models
# ============================================================================


class BlockSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: BlockKind
    size: int = Field(ge=1)
    parameter: int | None = None

    @model_validator(mode="after")
    def _jordan_has_parameter(self) -> "BlockSpec":
        if (self.kind == BlockKind.JORDAN) != (self.parameter is not None):
            raise ValueError("exactly the Jordan blocks carry a parameter")
        return self

    @property
    def columns(self) -> int:
        return self.size + 1 if self.kind == BlockKind.NILPOTENT else self.size

    @property
    def label(self) -> str:
        if self.kind == BlockKind.JORDAN:
            return f"J{self.size}({self.parameter})"
        return f"{self.kind.value}{self.size}"


class ExpectedInvariants(BaseModel):
    bour: int
    e: int
    e0: int
    e1: int
    shape: ShapeTag
    betti: list[BettiEntry] | None = None
    source: str


class KWSpec(BaseModel):
    """A block decomposition with its parameter pattern."""

    model_config = ConfigDict(frozen=True)

    name: str
    blocks: tuple[BlockSpec, ...]
    pattern: str = ""

    @property
    def columns(self) -> int:
        return sum(b.columns for b in self.blocks)

    @property
    def label(self) -> str:
        return "|".join(b.label for b in self.blocks)


class CatalogEntry(BaseModel):
    spec: KWSpec
    expected: ExpectedInvariants
    note: str | None = None


class CatalogRow(BaseModel):
    name: str
    label: str
    pattern: str
    n: int
    computed: dict[str, Any]
    expected: dict[str, Any]
    matches: bool


class CatalogDiff(BaseModel):
    field: str
    rows: list[CatalogRow]
    diff: list[str]

    @property
    def passed(self) -> bool:
        return not self.diff


# ============================================================================
# Self-test Models
# ============================================================================


class SuiteResult(BaseModel):
    """One randomized property suite."""

    name: str
    samples: int
    failures: list[str] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


class SelftestReport(BaseModel):
    seed: int
    field: str
    suites: list[SuiteResult]

    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.suites)


# ============================================================================
# Documents
# ============================================================================


class AnalysisOptions(BaseModel):
    model_config = ConfigDict(extra="forbid")

    resolution: bool = True
    oracle: int | None = Field(default=None, ge=0)
    row_wise: bool = False
    distribution: bool = False


class InputDocument(BaseModel):
    """JSON input: one matrix, one generator triple or one pair of forms."""

    model_config = ConfigDict(extra="forbid")

    n: int = Field(ge=3)
    field: str | dict[str, int] = "QQ"
    mode: InputMode
    rows: list[list[str]] | None = None
    gens: list[str] | None = None
    pair: list[str] | None = None
    options: AnalysisOptions = Field(default_factory=AnalysisOptions)

    @model_validator(mode="after")
    def _mode_payload(self) -> "InputDocument":
        payload: dict[InputMode, tuple[str, Any, int | None]] = {
            InputMode.MATRIX: ("rows", self.rows, 2),
            InputMode.IDEAL: ("gens", self.gens, 3),
            InputMode.JACOBIAN: ("pair", self.pair, 2),
        }
        key, value, size = payload[self.mode]
        if value is None:
            raise ValueError(f"mode {self.mode.value!r} requires {key!r}")
        if len(value) != size:
            raise ValueError(f"{key!r} must have {size} items")
        if self.mode == InputMode.MATRIX and any(len(row) != 4 for row in value):
            raise ValueError("each row must have 4 entries")
        others = [k for k, v, _ in payload.values() if v is not None and k != key]
        if others:
            raise ValueError(f"mode {self.mode.value!r} does not take {others}")
        return self


class Provenance(BaseModel):
    engine_version: str
    input_hash: str
    field: str
    seed: int


class ReportDocument(BaseModel):
    """Everything emitted for one input document."""

    provenance: Provenance
    mode: InputMode
    report: BourbakiReport
    equigenerated: EquigeneratedReport | None = None
    row_wise: RowReport | None = None
    emax: EmaxRecord | None = None
    distribution: DistributionRecord | None = None
    oracle: list[OracleRow] | None = None
    comparison: FieldComparison | None = None
