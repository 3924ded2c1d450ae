"""Exact scalar, matrix and row-reduction primitives (no floating point)."""

from .linalg import Echelon, axpy, dense, determinant, inverse, kernel, rank, rref, scaled, sparse
from .matn import MatN, commutator, conj_transpose, elementary, trace
from .scalars import GaussRational, Surd, as_fraction, format_scalar, parse_scalar, squarefree_split

__all__ = [
    "Echelon",
    "GaussRational",
    "MatN",
    "Surd",
    "as_fraction",
    "axpy",
    "commutator",
    "conj_transpose",
    "dense",
    "determinant",
    "elementary",
    "format_scalar",
    "inverse",
    "kernel",
    "parse_scalar",
    "rank",
    "rref",
    "scaled",
    "sparse",
    "squarefree_split",
    "trace",
]
