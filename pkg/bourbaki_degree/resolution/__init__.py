"""Resolution Package: minimal free resolutions, Betti tables and shapes."""

from bourbaki_degree.resolution.betti import BettiTable
from bourbaki_degree.resolution.minimal import (
    Resolution,
    composites_vanish,
    depth_and_pd,
    eliminate_units,
    euler_characteristic,
    minimal_resolution,
    minimalize_presentation,
    resolve_submodule,
)
from bourbaki_degree.resolution.shapes import (
    buchsbaum_rim_table,
    expected_shape,
    free_table,
    nearly_free_table,
    shape_match,
)

__all__ = [
    # Tables
    "BettiTable",
    # Resolutions
    "Resolution",
    "minimal_resolution",
    "resolve_submodule",
    "eliminate_units",
    "minimalize_presentation",
    "depth_and_pd",
    "composites_vanish",
    "euler_characteristic",
    # Shapes
    "shape_match",
    "expected_shape",
    "buchsbaum_rim_table",
    "free_table",
    "nearly_free_table",
]
