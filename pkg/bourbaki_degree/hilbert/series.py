"""Hilbert series h(t)/(1-t)^D with Laurent numerators, and their invariants.

Coefficients follow the fixed-dimension convention: the numerator is brought
to pole order n-1 before reading e0 = h(1) and e1 = h'(1).
"""

from dataclasses import dataclass
from math import comb

from sympy import QQ, ZZ, Poly, Symbol, binomial, expand_func
from sympy.polys.rings import PolyElement, ring

from bourbaki_degree.core.config import get_settings
from bourbaki_degree.core.errors import InvariantViolation
from bourbaki_degree.core.models import HilbertCoefficientsModel, SeriesModel

T_RING, T = ring("t", ZZ)
t_symbol = Symbol("t")


def split_laurent(numerator: dict[int, int]) -> tuple[int, PolyElement]:
    """Split a Laurent polynomial into t^low * p(t) with p an ordinary polynomial."""
    if not numerator:
        return 0, T_RING.zero
    low = min(numerator)
    return low, T_RING.from_dict({(e - low,): c for e, c in numerator.items()})


def join_laurent(low: int, p: PolyElement) -> dict[int, int]:
    return {m[0] + low: int(c) for m, c in p.items() if c}


def _one_minus_t(power: int) -> PolyElement:
    return (1 - T) ** power


@dataclass(frozen=True)
class HilbertSeries:
    """h(t)/(1-t)^pole over a ring with n variables; numerator as sorted (exponent, coeff)."""

    terms: tuple[tuple[int, int], ...]
    pole: int
    n: int

    def __post_init__(self) -> None:
        cap = get_settings().max_shift
        for exponent, _ in self.terms:
            if abs(exponent) > cap:
                raise InvariantViolation(
                    f"Hilbert numerator exponent {exponent} exceeds the cap {cap}"
                )

    @classmethod
    def build(cls, numerator: dict[int, int], pole: int, n: int) -> "HilbertSeries":
        terms = tuple(sorted((e, c) for e, c in numerator.items() if c))
        return cls(terms, pole, n)

    @classmethod
    def free(cls, shifts: tuple[int, ...] | list[int], n: int) -> "HilbertSeries":
        """Series of R(-a_1) + ... + R(-a_k)."""
        numerator: dict[int, int] = {}
        for a in shifts:
            numerator[a] = numerator.get(a, 0) + 1
        return cls.build(numerator, n, n)

    @classmethod
    def zero(cls, n: int) -> "HilbertSeries":
        return cls((), n, n)

    @property
    def numerator(self) -> dict[int, int]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    # ------------------------------------------------------------- algebra

    def at_pole(self, pole: int) -> "HilbertSeries":
        """Same series written over (1-t)^pole."""
        if pole == self.pole:
            return self
        if pole > self.pole:
            low, p = split_laurent(self.numerator)
            return HilbertSeries.build(
                join_laurent(low, p * _one_minus_t(pole - self.pole)), pole, self.n
            )
        canonical = self.canonical()
        if canonical.pole > pole:
            raise InvariantViolation(
                f"series of dimension {canonical.pole} cannot be written over (1-t)^{pole}"
            )
        return canonical.at_pole(pole)

    def canonical(self) -> "HilbertSeries":
        """Divide out (1-t) factors until h(1) != 0; the zero series keeps pole 0."""
        if self.is_zero():
            return HilbertSeries((), 0, self.n)
        low, p = split_laurent(self.numerator)
        pole = self.pole
        while p(1) == 0:
            p = p.exquo(1 - T)
            pole -= 1
        return HilbertSeries.build(join_laurent(low, p), pole, self.n)

    def _combine(self, other: "HilbertSeries", sign: int) -> "HilbertSeries":
        if self.n != other.n:
            raise InvariantViolation("series over different rings")
        pole = max(self.pole, other.pole)
        mine, theirs = self.at_pole(pole).numerator, other.at_pole(pole).numerator
        merged = dict(mine)
        for e, c in theirs.items():
            merged[e] = merged.get(e, 0) + sign * c
        return HilbertSeries.build(merged, pole, self.n)

    def __add__(self, other: "HilbertSeries") -> "HilbertSeries":
        return self._combine(other, 1)

    def __sub__(self, other: "HilbertSeries") -> "HilbertSeries":
        return self._combine(other, -1)

    def shift(self, k: int) -> "HilbertSeries":
        """Multiply by t^k, i.e. the series of M(-k)."""
        return HilbertSeries(tuple((e + k, c) for e, c in self.terms), self.pole, self.n)

    def equals(self, other: "HilbertSeries") -> bool:
        a, b = self.canonical(), other.canonical()
        return a.terms == b.terms and (a.is_zero() or a.pole == b.pole)

    # -------------------------------------------------------- evaluation

    def value_at_one(self) -> int:
        return sum(c for _, c in self.terms)

    def derivative_at_one(self) -> int:
        return sum(e * c for e, c in self.terms)

    def coefficient(self, degree: int) -> int:
        """Value of the Hilbert function at ``degree``."""
        if self.pole == 0:
            return self.numerator.get(degree, 0)
        if self.pole < 0:
            return self.at_pole(0).coefficient(degree)
        total = 0
        for e, c in self.terms:
            j = degree - e
            if j >= 0:
                total += c * comb(j + self.pole - 1, self.pole - 1)
        return total

    def expand(self, upto: int, start: int = 0) -> list[int]:
        return [self.coefficient(j) for j in range(start, upto + 1)]

    # -------------------------------------------------------------- output

    def render(self) -> str:
        """Human form such as ``(2 + 2t)/(1-t)^5``."""
        if self.is_zero():
            return "0"
        pieces = []
        for e, c in self.terms:
            power = "" if e == 0 else ("t" if e == 1 else f"t^{e}")
            if not power:
                body = str(abs(c))
            elif abs(c) == 1:
                body = power
            else:
                body = f"{abs(c)}{power}"
            if not pieces:
                pieces.append(f"-{body}" if c < 0 else body)
            else:
                pieces.append(f"- {body}" if c < 0 else f"+ {body}")
        numerator = " ".join(pieces)
        if self.pole == 0:
            return numerator
        denominator = "(1-t)" if self.pole == 1 else f"(1-t)^{self.pole}"
        return f"({numerator})/{denominator}"

    def to_model(self) -> SeriesModel:
        canonical = self.canonical()
        return SeriesModel(
            numerator=[[e, c] for e, c in canonical.terms],
            pole=canonical.pole,
            text=canonical.render(),
        )


# ============================================================================
# Invariants
# ============================================================================


@dataclass(frozen=True)
class HilbertCoefficients:
    e0: int
    e1_raw: int
    e1_signed: int
    dim: int
    degree_at_dim: int

    def to_model(self) -> HilbertCoefficientsModel:
        return HilbertCoefficientsModel(
            e0=self.e0,
            e1_raw=self.e1_raw,
            e1=self.e1_signed,
            dim=self.dim,
            degree_at_dim=self.degree_at_dim,
        )


def krull_dimension(hs: HilbertSeries) -> int:
    """Canonical pole order; -1 stands for the zero module."""
    canonical = hs.canonical()
    return -1 if canonical.is_zero() else canonical.pole


def coefficients(hs: HilbertSeries) -> HilbertCoefficients:
    """e0, e1 at pole order n-1, with the sign of e1 flipped when e0 = 0."""
    canonical = hs.canonical()
    if canonical.is_zero():
        return HilbertCoefficients(0, 0, 0, -1, 0)
    if canonical.pole > hs.n - 1:
        raise InvariantViolation(
            f"module of dimension {canonical.pole} has no coefficients at pole {hs.n - 1}"
        )
    fixed = canonical.at_pole(hs.n - 1)
    e0 = fixed.value_at_one()
    e1_raw = fixed.derivative_at_one()
    return HilbertCoefficients(
        e0=e0,
        e1_raw=e1_raw,
        e1_signed=e1_raw if e0 != 0 else -e1_raw,
        dim=canonical.pole,
        degree_at_dim=canonical.value_at_one(),
    )


def degree_at(hs: HilbertSeries, dim: int) -> int:
    """Multiplicity read at a fixed dimension; 0 when the module is smaller."""
    canonical = hs.canonical()
    if canonical.is_zero() or canonical.pole < dim:
        return 0
    if canonical.pole > dim:
        raise InvariantViolation(f"module of dimension {canonical.pole} exceeds {dim}")
    return canonical.value_at_one()


def hilbert_polynomial(hs: HilbertSeries) -> Poly:
    """Polynomial agreeing with the Hilbert function in large degrees."""
    canonical = hs.canonical()
    result = Poly(0, t_symbol, domain=QQ)
    if canonical.is_zero() or canonical.pole <= 0:
        return result
    k = canonical.pole - 1
    for e, c in canonical.terms:
        term = expand_func(binomial(t_symbol - e + k, k))
        result += Poly(c * term, t_symbol, domain=QQ)
    return result


def render_polynomial(p: Poly) -> str:
    return str(p.as_expr()).replace("**", "^")


@dataclass(frozen=True)
class RankOneQuotient:
    """Data of a rank-one torsion-free module N = I(sigma)."""

    sigma: int
    ideal_series: HilbertSeries
    degree: int
    free: bool


def rank_one_quotient(module: HilbertSeries) -> RankOneQuotient:
    """Recover sigma and deg(R/I) from the series of a rank-one module N = I(sigma).

    Hilb_N = t^{-sigma}(1/(1-t)^n - Hilb_{R/I}). Over (1-t)^n the numerator of R/I
    vanishes to order two at t = 1, so h_N(1) = 1 and h_N'(1) = -sigma.
    """
    n = module.n
    fixed = module.at_pole(n)
    if fixed.value_at_one() != 1:
        raise InvariantViolation(f"module of rank {fixed.value_at_one()} where rank one was expected")
    sigma = -fixed.derivative_at_one()
    quotient = HilbertSeries.free((0,), n) - fixed.shift(sigma)
    canonical = quotient.canonical()
    if not canonical.is_zero() and canonical.pole > n - 2:
        raise InvariantViolation("rank-one quotient has a non-torsion-free cokernel")
    return RankOneQuotient(
        sigma=sigma,
        ideal_series=quotient,
        degree=degree_at(quotient, n - 2),
        free=canonical.is_zero(),
    )

