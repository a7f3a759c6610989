"""Groebner Package: graded free modules, Buchberger, kernels and ideal intersection."""

from bourbaki_degree.groebner.buchberger import (
    GBasis,
    GroebnerEngine,
    KernelResult,
    buchberger,
    kernel,
    kernel_and_image,
    minimal_generator_indices,
    minimal_generators,
    normal_form,
)
from bourbaki_degree.groebner.ideals import (
    as_elements,
    ideal_basis,
    ideal_contains,
    ideal_product,
    intersect_ideals,
)
from bourbaki_degree.groebner.modules import FreeElement, GradedMap, ModuleOrder, default_order

__all__ = [
    # Modules
    "FreeElement",
    "GradedMap",
    "ModuleOrder",
    "default_order",
    # Groebner bases
    "GBasis",
    "GroebnerEngine",
    "buchberger",
    "normal_form",
    # Kernels
    "KernelResult",
    "kernel",
    "kernel_and_image",
    "minimal_generators",
    "minimal_generator_indices",
    # Ideals
    "as_elements",
    "ideal_basis",
    "ideal_contains",
    "ideal_product",
    "intersect_ideals",
]
