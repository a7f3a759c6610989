"""Minimal resolutions, Betti tables and shape matching."""

from bourbaki_degree.core.models import ShapeTag
from bourbaki_degree.groebner.modules import GradedMap
from bourbaki_degree.resolution.betti import BettiTable
from bourbaki_degree.resolution.minimal import (
    composites_vanish,
    depth_and_pd,
    eliminate_units,
    euler_characteristic,
    minimal_resolution,
)
from bourbaki_degree.resolution.shapes import (
    buchsbaum_rim_table,
    free_table,
    nearly_free_table,
    shape_match,
)


def _residue_field_presentation(ring):
    x1, x2, x3 = ring.gens
    return GradedMap(ring, (1, 1, 1), (0,), ((x1, x2, x3),))


def test_koszul_resolution(ring3):
    res = minimal_resolution(_residue_field_presentation(ring3))
    assert res.betti == BettiTable.from_shifts([(0,), (1, 1, 1), (2, 2, 2), (3,)])
    assert res.projective_dimension == 3
    assert composites_vanish(res)
    assert depth_and_pd(res, 3) == (3, 0)


def test_euler_characteristic_matches_residue_field(ring3):
    res = minimal_resolution(_residue_field_presentation(ring3))
    assert euler_characteristic(res, 0, 3) == 1
    assert [euler_characteristic(res, t, 3) for t in range(1, 5)] == [0, 0, 0, 0]


def test_units_are_eliminated(ring3):
    x1, x2, _ = ring3.gens
    gmap = GradedMap(ring3, (0, 1), (0, 0), ((ring3.one, x1), (ring3.zero, x2)))
    pruned = eliminate_units(gmap)
    assert pruned.target_shifts == (0,)
    assert pruned.source_shifts == (1,)
    assert pruned.entries == ((x2,),)


def test_zero_module(ring3):
    res = minimal_resolution(GradedMap.identity(ring3, (0,)))
    assert res.projective_dimension == -1
    assert depth_and_pd(res, 3) == (-1, 4)
    assert res.betti.render() == "0"


def test_betti_render_and_twist():
    table = buchsbaum_rim_table(1, 1)
    assert table.render() == "0 -> R^2(-3) -> R^4(-2) -> R^4 -> R^2(1)"
    assert table.twisted(1).rank_at(0, 0) == 2
    assert table.truncated(2).degrees(0) == [2, 2, 2, 2]


def test_betti_models_roundtrip_order():
    table = nearly_free_table(1, 1, 1, 0)
    assert BettiTable.from_models(table.to_models()) == table
    assert [(m.i, m.degree) for m in table.to_models()] == sorted(
        (m.i, m.degree) for m in table.to_models()
    )


def test_shape_match():
    assert shape_match(buchsbaum_rim_table(1, 1), 1, 1, 2, 0) == ShapeTag.BUCHSBAUM_RIM
    assert shape_match(free_table(1, 1, 1, 0), 1, 1, 1, 0) == ShapeTag.FREE
    assert shape_match(nearly_free_table(1, 1, 1, 0), 1, 1, 1, 0) == ShapeTag.NEARLY_FREE
    d2b1 = BettiTable.from_shifts([(-1, -1), (0,) * 4, (2,) * 5, (3,) * 4, (4,)])
    assert shape_match(d2b1, 1, 1, 2, 0) == ShapeTag.OTHER


def test_nearly_free_needs_the_syzygy_of_degree_e():
    # s = -1: the nearly free table has Syz generators in degrees 1, 2, 2
    assert nearly_free_table(1, 1, 1, 0).degrees(2) == [1, 2, 2]
    shifted = BettiTable.from_shifts([(-1, -1), (0,) * 4, (0, 2, 2), (3,)])
    assert shape_match(shifted, 1, 1, 1, 0) == ShapeTag.THREE_SYZYGY
    assert shape_match(nearly_free_table(1, 1, 1, 0), 1, 1, 2, 0) == ShapeTag.THREE_SYZYGY


def test_shapes_of_expected_tables():
    # s = e - d + e0 = 1 - 2 + 1 = 0
    assert nearly_free_table(1, 1, 1, 1).degrees(3) == [2]
    assert free_table(1, 1, 1, 0).degrees(2) == [1, 1]
