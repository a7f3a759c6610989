"""2x4 matrices of linear forms assembled from nilpotent, Jordan and scroll blocks.

Every block consumes fresh variables, allocated left to right:

    D_m      [[x1 .. xm, 0], [0, x1 .. xm]]                    m variables
    J_m(l)   [[y1 .. ym], [l y1, y1 + l y2, .., y_{m-1} + l ym]] m variables
    B_m      [[z1 .. zm], [z0 .. z_{m-1}]]                     m + 1 variables, z1..zm first
"""

from bourbaki_degree.algebra.fields import RATIONALS, FieldSpec
from bourbaki_degree.algebra.polynomials import Polynomial, polynomial_ring
from bourbaki_degree.analysis.theta import ThetaMatrix, validate
from bourbaki_degree.core.errors import UsageError
from bourbaki_degree.core.models import BlockKind, BlockSpec, KWSpec

COLUMNS = 4


def variables_needed(spec: KWSpec) -> int:
    return sum(b.size + 1 if b.kind == BlockKind.SCROLL else b.size for b in spec.blocks)


def _block(block: BlockSpec, xs: list[Polynomial], field: FieldSpec) -> list[list[Polynomial]]:
    m = block.size
    zero = xs[0].ring.zero
    if block.kind == BlockKind.NILPOTENT:
        return [[*xs, zero], [zero, *xs]]
    if block.kind == BlockKind.JORDAN:
        lam = field.element(block.parameter)
        bottom = [xs[0] * lam] + [xs[i - 1] + xs[i] * lam for i in range(1, m)]
        return [list(xs), bottom]
    # scroll: xs = z1..zm, z0
    top = xs[:m]
    z0 = xs[m]
    return [top, [z0, *top[: m - 1]]]


def check_pattern(spec: KWSpec) -> None:
    """The pattern names the Jordan parameters in block order, e.g. "l,l,m,r".

    Equal symbols must carry equal values and distinct symbols distinct ones;
    the symbol "0" pins the value to zero.
    """
    if not spec.pattern:
        return
    symbols = spec.pattern.split(",")
    values = [b.parameter for b in spec.blocks if b.kind == BlockKind.JORDAN]
    if len(symbols) != len(values):
        raise UsageError(f"{spec.name}: pattern {spec.pattern!r} does not match {len(values)} Jordan blocks")
    for i, (a, u) in enumerate(zip(symbols, values, strict=True)):
        if a == "0" and u != 0:
            raise UsageError(f"{spec.name}: parameter {i + 1} must be 0")
        for b, v in zip(symbols[i + 1 :], values[i + 1 :], strict=True):
            if (a == b) != (u == v):
                raise UsageError(f"{spec.name}: parameters violate pattern {spec.pattern!r}")


def build(spec: KWSpec, field: FieldSpec | str = RATIONALS, extra_variables: int = 0) -> ThetaMatrix:
    """The validated matrix of ``spec`` over k[x1..xn], n = variables used + ``extra_variables``."""
    field = FieldSpec.parse(field)
    if spec.columns != COLUMNS:
        raise UsageError(f"{spec.label} has {spec.columns} columns, expected {COLUMNS}")
    check_pattern(spec)
    n = variables_needed(spec) + extra_variables
    ring = polynomial_ring(n, field)
    rows: list[list[Polynomial]] = [[], []]
    cursor = 0
    for block in spec.blocks:
        width = block.size + 1 if block.kind == BlockKind.SCROLL else block.size
        top, bottom = _block(block, list(ring.gens[cursor : cursor + width]), field)
        rows[0].extend(top)
        rows[1].extend(bottom)
        cursor += width
    return validate(rows, n, field)
