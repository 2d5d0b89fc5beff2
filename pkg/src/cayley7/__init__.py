"""Exact octonion and Clifford-algebra arithmetic with a built-in verifier."""

from .clifford import (
    CL07,
    CL80,
    Multivector,
    Signature,
    blade_from_indices,
    hodge_dual,
    involution,
    left_contraction,
    metric_pairing,
    right_contraction,
    wedge,
)
from .codec import dumps, from_doc, loads, to_doc
from .matrep import blade_names, left_action_matrix, load_fixture_matrices, span_rank
from .octonion import (
    FANO_LINES,
    Octonion,
    STRUCTURE_TRIVECTOR,
    epsilon3,
    epsilon4,
    is_quaternion_triple,
    octonion_product,
    scalar_product,
    unit_product,
)
from .products import (
    PRODUCTS,
    ProductSpec,
    REVERSAL_ELEMENT,
    TorsionTensor,
    bullet,
    deformed,
    named_product,
    odot,
    shear,
    torsion_tensor,
    u_involution,
)
from .verify import SUITES, load_errata, radon_hurwitz, run_all, run_suite

__version__ = "0.1.0"

__all__ = [
    "CL07",
    "CL80",
    "FANO_LINES",
    "Multivector",
    "Octonion",
    "PRODUCTS",
    "ProductSpec",
    "REVERSAL_ELEMENT",
    "STRUCTURE_TRIVECTOR",
    "SUITES",
    "Signature",
    "TorsionTensor",
    "blade_from_indices",
    "blade_names",
    "bullet",
    "deformed",
    "dumps",
    "epsilon3",
    "epsilon4",
    "from_doc",
    "hodge_dual",
    "involution",
    "is_quaternion_triple",
    "left_action_matrix",
    "left_contraction",
    "load_errata",
    "load_fixture_matrices",
    "loads",
    "metric_pairing",
    "named_product",
    "octonion_product",
    "odot",
    "radon_hurwitz",
    "right_contraction",
    "run_all",
    "run_suite",
    "scalar_product",
    "shear",
    "span_rank",
    "to_doc",
    "torsion_tensor",
    "u_involution",
    "unit_product",
    "wedge",
]
