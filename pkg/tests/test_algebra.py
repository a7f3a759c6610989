"""Fields, polynomial arithmetic, monomial orders and the text grammar."""

import random

import pytest

from bourbaki_degree.algebra.fields import FieldSpec, secondary_field
from bourbaki_degree.algebra.grammar import parse_poly, render_poly
from bourbaki_degree.algebra.polynomials import (
    MonomialOrder,
    degree,
    is_homogeneous,
    monomial_cmp,
    normalize,
    poly_arith,
    polynomial_ring,
)
from bourbaki_degree.analysis.sampling import random_form
from bourbaki_degree.core.config import get_settings
from bourbaki_degree.core.errors import PolynomialParseError, UsageError

# ============================================================================
# Fields
# ============================================================================


@pytest.mark.parametrize(
    ("value", "label"),
    [
        ("QQ", "QQ"),
        ("qq", "QQ"),
        ("Fp:32003", "Fp:32003"),
        ("GF:7", "Fp:7"),
        ({"Fp": 31991}, "Fp:31991"),
    ],
)
def test_field_spec_parse(value, label):
    assert FieldSpec.parse(value).label == label


@pytest.mark.parametrize("value", ["Fp:8", "Fp:", "RR", {"Fp": 1}])
def test_field_spec_rejects(value):
    with pytest.raises(UsageError):
        FieldSpec.parse(value)


def test_bare_prime_field_uses_configured_prime(monkeypatch):
    assert FieldSpec.parse("Fp").label == "Fp:32003"
    monkeypatch.setenv("BOURBAKI_PRIME", "7")
    get_settings.cache_clear()
    assert FieldSpec.parse("Fp").label == "Fp:7"
    assert FieldSpec.parse("GF").label == "Fp:7"


def test_secondary_field_follows_settings(monkeypatch):
    assert secondary_field().label == "Fp:31991"
    monkeypatch.setenv("BOURBAKI_SECONDARY_PRIME", "101")
    get_settings.cache_clear()
    assert secondary_field().label == "Fp:101"
    monkeypatch.setenv("BOURBAKI_SECONDARY_PRIME", "100")
    get_settings.cache_clear()
    with pytest.raises(UsageError):
        secondary_field()


def test_field_characteristic():
    assert FieldSpec().characteristic == 0
    assert FieldSpec.parse("Fp:7").characteristic == 7


def test_prime_field_fraction():
    f7 = FieldSpec.parse("Fp:7")
    # 1/2 = 4 mod 7
    assert f7.element(1, 2) == f7.element(4)
    with pytest.raises(ZeroDivisionError):
        f7.element(1, 7)


# ============================================================================
# Arithmetic
# ============================================================================


def test_difference_of_squares(ring4):
    x1, x2, _, _ = ring4.gens
    assert poly_arith(x1 + x2, x1 - x2, "mul") == x1**2 - x2**2


def test_product_with_zero(ring4):
    x1, _, x3, _ = ring4.gens
    assert poly_arith(x1 * x3 + x1, ring4.zero, "mul") == ring4.zero


def test_monomial_product(ring4):
    x1, x2, x3, x4 = ring4.gens
    assert poly_arith(x1 * x4, x2 * x3, "mul") == x1 * x2 * x3 * x4


def test_mixed_fields_rejected(ring4, fp):
    other = polynomial_ring(4, fp)
    with pytest.raises(UsageError, match="mixed coefficient fields"):
        poly_arith(ring4.gens[0], other.gens[0], "add")


def test_mixed_dimensions_rejected(ring4, ring3):
    with pytest.raises(UsageError, match="ring dimension"):
        poly_arith(ring4.gens[0], ring3.gens[0], "sub")


def test_ring_laws(ring3):
    x1, x2, x3 = ring3.gens
    a, b, c = x1 + 2 * x2, x2 * x3 - x1**2, 3 * x3
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a


def test_homogeneity_closure(ring3):
    x1, x2, x3 = ring3.gens
    p, q = x1 * x2 + x3**2, x1 + x2 + x3
    assert is_homogeneous(p * q)
    assert degree(p * q) == degree(p) + degree(q)


def test_degree_of_zero_and_inhomogeneous(ring3):
    x1, x2, _ = ring3.gens
    assert degree(ring3.zero) is None
    assert is_homogeneous(ring3.zero)
    with pytest.raises(UsageError):
        degree(x1 + x2**2)


def test_normalize_idempotent(ring3):
    x1, x2, x3 = ring3.gens
    p = 3 * x1 * x2 - x3**2 + x1 * x2
    assert normalize(normalize(p)) == normalize(p) == p


# ============================================================================
# Monomial Order
# ============================================================================


def test_degrevlex_reverse_lex_tie():
    order = MonomialOrder(3)
    # x2^2 > x1*x3
    assert monomial_cmp((0, 2, 0), (1, 0, 1), order) == 1
    assert monomial_cmp((1, 0, 1), (0, 2, 0), order) == -1


def test_degrevlex_equal_and_degree_first():
    order = MonomialOrder(3)
    assert monomial_cmp((1, 0, 0), (1, 0, 0), order) == 0
    assert monomial_cmp((0, 0, 1), (0, 0, 0), order) == 1


def test_monomial_cmp_dimension_mismatch():
    with pytest.raises(UsageError):
        monomial_cmp((1, 0), (1, 0, 0), MonomialOrder(3))


# ============================================================================
# Grammar
# ============================================================================


def test_parse_minor(ring4, qq):
    x1, x2, x3, x4 = ring4.gens
    assert parse_poly("x1*x3 - x2*x4", 4, qq) == x1 * x3 - x2 * x4


def test_parse_zero(qq):
    assert not parse_poly("0", 4, qq)


def test_parse_euler_form(ring4, qq):
    x1, x2, x3, x4 = ring4.gens
    p = parse_poly("x1^2 + x2^2 + x3*x4", 4, qq)
    assert p == x1**2 + x2**2 + x3 * x4


@pytest.mark.parametrize("label", ["QQ", "Fp:32003", "Fp:7"])
def test_render_then_parse_random_forms(label):
    field = FieldSpec.parse(label)
    rng = random.Random(label)
    for _ in range(50):
        n, d = rng.randint(1, 6), rng.randint(0, 5)
        p = random_form(rng, n, d, field, rng.randint(1, 6))
        # rational and negative coefficients
        p = p * field.element(rng.choice([-7, -1, 1, 5]), rng.choice([1, 2, 3, 9]))
        assert parse_poly(render_poly(p), n, field) == p


def test_parse_coefficients_and_whitespace(ring4, qq):
    x1, x2, _, _ = ring4.gens
    p = parse_poly(" -3/2 x1 ^2 + 2*x1*x2 ", 4, qq)
    assert p == qq.element(-3, 2) * x1**2 + 2 * x1 * x2


def test_render_rational_coefficient(qq):
    p = parse_poly("1/3*x1 - x2", 3, qq)
    assert render_poly(p) == "1/3*x1 - x2"


def test_parse_over_prime_field(fp):
    ring = polynomial_ring(2, fp)
    x1, _ = ring.gens
    assert parse_poly("1/2*x1", 2, fp) == fp.element(16002) * x1


@pytest.mark.parametrize(
    ("text", "position"),
    [
        ("x5", 0),
        ("x1 + x9*x2", 5),
        ("x1^", 3),
        ("", 0),
        ("(x1 + x2)*x3", 0),
        ("x1*(x2)", 3),
    ],
)
def test_parse_errors_carry_position(text, position, qq):
    with pytest.raises(PolynomialParseError) as info:
        parse_poly(text, 4, qq)
    assert info.value.position == position


def test_parse_division_by_zero(qq):
    with pytest.raises(PolynomialParseError, match="division by zero"):
        parse_poly("1/0*x1", 4, qq)


def test_parse_trailing_operator(qq):
    with pytest.raises(PolynomialParseError):
        parse_poly("x1 +", 4, qq)
