"""Text grammar for polynomials in x1..xn.

    poly   := ['+'|'-'] term (('+'|'-') term)*
    term   := [coeff ['*']] factor ('*' factor)*  |  coeff
    factor := 'x' INT ['^' INT]
    coeff  := INT ['/' INT]

Whitespace is ignored; ``0`` is the zero polynomial. There are no parentheses.
"""

from sympy.polys.rings import PolyRing

from bourbaki_degree.algebra.fields import FieldSpec, rational_parts
from bourbaki_degree.algebra.polynomials import Polynomial, polynomial_ring
from bourbaki_degree.core.errors import PolynomialParseError


class _Scanner:
    """Cursor over the non-blank characters, remembering original offsets."""

    def __init__(self, text: str):
        self.text = text
        self.chars = [(c, i) for i, c in enumerate(text) if not c.isspace()]
        self.pos = 0

    def peek(self) -> str:
        return self.chars[self.pos][0] if self.pos < len(self.chars) else ""

    def offset(self) -> int:
        return self.chars[self.pos][1] if self.pos < len(self.chars) else len(self.text)

    def take(self) -> str:
        c = self.peek()
        self.pos += 1
        return c

    def error(self, message: str, offset: int | None = None) -> PolynomialParseError:
        return PolynomialParseError(message, self.text, self.offset() if offset is None else offset)

    def integer(self, what: str) -> int:
        start = self.offset()
        digits = ""
        while self.peek().isdigit():
            digits += self.take()
        if not digits:
            raise self.error(f"expected {what}", start)
        return int(digits)


def parse_poly(text: str, n: int, field: FieldSpec) -> Polynomial:
    """Parse ``text`` into a canonical polynomial of k[x1..xn].

    Raises:
        PolynomialParseError: on any deviation from the grammar, a variable
            index outside 1..n, or a coefficient with zero denominator.
    """
    ring = polynomial_ring(n, field)
    scanner = _Scanner(text)
    if not scanner.chars:
        raise scanner.error("empty polynomial")

    result = ring.zero
    sign = 1
    if scanner.peek() in "+-":
        sign = -1 if scanner.take() == "-" else 1
    while True:
        result += _term(scanner, ring, field, n) * sign
        nxt = scanner.peek()
        if nxt == "":
            return result
        if nxt not in "+-":
            raise scanner.error(f"unexpected {nxt!r}")
        sign = -1 if scanner.take() == "-" else 1


def _term(scanner: _Scanner, ring: PolyRing, field: FieldSpec, n: int) -> Polynomial:
    coeff = ring.domain.one
    exponents = [0] * n
    has_coeff = scanner.peek().isdigit()
    if has_coeff:
        start = scanner.offset()
        numerator = scanner.integer("coefficient")
        denominator = 1
        if scanner.peek() == "/":
            scanner.take()
            denominator = scanner.integer("denominator")
        try:
            coeff = field.element(numerator, denominator)
        except ZeroDivisionError as e:
            raise scanner.error(f"division by zero coefficient ({e})", start) from e
        if scanner.peek() == "*":
            scanner.take()
            if scanner.peek() != "x":
                raise scanner.error("expected variable after '*'")
        elif scanner.peek() != "x":
            return ring.ground_new(coeff)

    while True:
        if scanner.peek() != "x":
            raise scanner.error("expected variable")
        start = scanner.offset()
        scanner.take()
        index = scanner.integer("variable index")
        if not 1 <= index <= n:
            raise scanner.error(f"unknown variable x{index} (ring has x1..x{n})", start)
        power = 1
        if scanner.peek() == "^":
            scanner.take()
            power = scanner.integer("exponent")
        exponents[index - 1] += power
        if scanner.peek() != "*":
            break
        scanner.take()
    return ring.term_new(tuple(exponents), coeff)


def render_poly(p: Polynomial) -> str:
    """Render a polynomial in the grammar accepted by :func:`parse_poly`."""
    if not p:
        return "0"
    domain = p.ring.domain
    pieces: list[str] = []
    for monomial, coeff in p.terms():
        num, den = rational_parts(domain, coeff)
        negative = num < 0
        num = abs(num)
        factors = [
            f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}" for i, e in enumerate(monomial) if e
        ]
        scalar = str(num) if den == 1 else f"{num}/{den}"
        if not factors:
            body = scalar
        elif num == 1 and den == 1:
            body = "*".join(factors)
        else:
            body = scalar + "*" + "*".join(factors)
        if not pieces:
            pieces.append(("-" if negative else "") + body)
        else:
            pieces.append(("- " if negative else "+ ") + body)
    return " ".join(pieces)
