"""Sparse homogeneous polynomials over sympy polynomial rings.

Polynomials are ``sympy.polys.rings.PolyElement`` values living in rings built
here; those rings fix the variables ``x1..xn``, the coefficient field and the
monomial order. Elements are treated as immutable.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Literal

from sympy.polys.orderings import ProductOrder, grevlex
from sympy.polys.rings import PolyElement, PolyRing

from bourbaki_degree.algebra.fields import FieldSpec
from bourbaki_degree.core.errors import UsageError

Polynomial = PolyElement
Monomial = tuple[int, ...]


# ============================================================================
# Rings and Orders
# ============================================================================


@dataclass(frozen=True)
class MonomialOrder:
    """Total monomial order: degrevlex or a two-block elimination order.

    The elimination order compares the first ``block`` variables by degrevlex
    first, so any monomial involving them beats every monomial that does not.
    """

    n: int
    tag: Literal["degrevlex", "elimination"] = "degrevlex"
    block: int = 0

    def sympy_order(self) -> object:
        if self.tag == "degrevlex":
            return grevlex
        split = self.block
        return ProductOrder(
            (grevlex, lambda m: m[:split]),
            (grevlex, lambda m: m[split:]),
        )

    def key(self, monomial: Monomial) -> object:
        return self.sympy_order()(monomial)  # type: ignore[operator]


@lru_cache(maxsize=None)
def polynomial_ring(n: int, field: FieldSpec) -> PolyRing:
    """Ring k[x1..xn] with degrevlex order."""
    if n < 1:
        raise UsageError(f"ring dimension must be positive, got {n}")
    return PolyRing([f"x{i}" for i in range(1, n + 1)], field.domain(), grevlex)


@lru_cache(maxsize=None)
def elimination_ring(n: int, field: FieldSpec) -> PolyRing:
    """Ring k[t, x1..xn] whose order eliminates the auxiliary variable t."""
    order = MonomialOrder(n + 1, "elimination", block=1)
    symbols = ["t"] + [f"x{i}" for i in range(1, n + 1)]
    return PolyRing(symbols, field.domain(), order.sympy_order())


def ring_field(ring: PolyRing) -> FieldSpec:
    """Recover the FieldSpec of a ring built by :func:`polynomial_ring`."""
    domain = ring.domain
    if domain.is_QQ:
        return FieldSpec()
    return FieldSpec(kind="Fp", prime=int(domain.characteristic()))


# ============================================================================
# Monomials
# ============================================================================


def monomial_cmp(a: Monomial, b: Monomial, order: MonomialOrder) -> int:
    """Three-way comparison of exponent vectors under ``order``."""
    if len(a) != len(b) or len(a) != order.n:
        raise UsageError("monomials of different ring dimension")
    ka, kb = order.key(a), order.key(b)
    if ka == kb:
        return 0
    return 1 if ka > kb else -1  # type: ignore[operator]


def monomial_degree(monomial: Monomial) -> int:
    return sum(monomial)


# ============================================================================
# Polynomials
# ============================================================================


def check_same_ring(a: Polynomial, b: Polynomial) -> None:
    """Raise UsageError when two polynomials cannot be combined."""
    if a.ring is b.ring or a.ring == b.ring:
        return
    if a.ring.ngens != b.ring.ngens:
        raise UsageError(f"mismatched ring dimension: {a.ring.ngens} vs {b.ring.ngens}")
    raise UsageError(f"mixed coefficient fields: {a.ring.domain} vs {b.ring.domain}")


def poly_arith(a: Polynomial, b: Polynomial, op: Literal["add", "sub", "mul"]) -> Polynomial:
    """Exact sum, difference or product of two polynomials of one ring."""
    check_same_ring(a, b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise UsageError(f"unknown operation {op!r}")


def is_homogeneous(p: Polynomial) -> bool:
    """True for the zero polynomial and for forms."""
    degrees = {sum(m) for m in p.itermonoms()}
    return len(degrees) <= 1


def degree(p: Polynomial) -> int | None:
    """Total degree of a form; None for zero."""
    if not p:
        return None
    if not is_homogeneous(p):
        raise UsageError(f"{p} is not homogeneous")
    return sum(next(iter(p.itermonoms())))


def normalize(p: Polynomial) -> Polynomial:
    """Canonical form: zero coefficients dropped, duplicate monomials merged."""
    return p.ring.from_dict(dict(p.items()))


def substitute_ring(p: Polynomial, ring: PolyRing, offset: int = 0) -> Polynomial:
    """Move ``p`` into ``ring``, placing its variables starting at index ``offset``."""
    width = ring.ngens
    terms = {}
    for monomial, coeff in p.items():
        exps = [0] * width
        for i, e in enumerate(monomial):
            if e:
                if i + offset >= width:
                    raise UsageError(f"variable x{i + 1} does not fit a ring with {width} gens")
                exps[i + offset] = e
        terms[tuple(exps)] = ring.domain.convert(coeff, p.ring.domain)
    return ring.from_dict(terms)
