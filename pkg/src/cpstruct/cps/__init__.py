"""Construction of the quadruple bases and the complex product structures on them."""

from .basis import (
    LabeledBasis,
    build_basis,
    build_basis_sl,
    build_basis_su,
    index_pairs,
    is_in_su,
    label,
    parse_label,
    realified_basis,
    su_hermitian_form,
)
from .strips import middle_block_algebra, outer_chain, peel_outer, strip_subspace
from .structures import (
    CpsTriple,
    HypercomplexTriple,
    build_ops,
    build_parametric,
    complexify_cps,
    extend_i_linear,
    induce_hypercomplex,
    orthonormal_z_basis,
)

__all__ = [
    "CpsTriple",
    "HypercomplexTriple",
    "LabeledBasis",
    "build_basis",
    "build_basis_sl",
    "build_basis_su",
    "build_ops",
    "build_parametric",
    "complexify_cps",
    "extend_i_linear",
    "index_pairs",
    "induce_hypercomplex",
    "is_in_su",
    "label",
    "middle_block_algebra",
    "orthonormal_z_basis",
    "outer_chain",
    "parse_label",
    "peel_outer",
    "realified_basis",
    "strip_subspace",
    "su_hermitian_form",
]
