"""Lie algebras in coordinates: structure constants, forms, subspaces."""

from .algebra import (
    ALGEBRA_NAMES,
    LieAlgebraRep,
    attach_complex_structure,
    bracket_coords,
    build_algebra,
    is_subalgebra,
    realify,
    subalgebra_witness,
)
from .forms import SymForm, killing_form, signature, trace_form
from .operators import EndoOp
from .subspace import Subspace

__all__ = [
    "ALGEBRA_NAMES",
    "EndoOp",
    "LieAlgebraRep",
    "Subspace",
    "SymForm",
    "attach_complex_structure",
    "bracket_coords",
    "build_algebra",
    "is_subalgebra",
    "killing_form",
    "realify",
    "signature",
    "subalgebra_witness",
    "trace_form",
]
