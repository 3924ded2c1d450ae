"""Subspaces of coordinate space held in reduced row echelon form."""

from __future__ import annotations

from typing import Iterable, Sequence

from ..errors import DimensionError
from ..exact.linalg import axpy, dense, rref, sparse
from .operators import EndoOp

__all__ = ["Subspace"]


class Subspace:
    """Span of coordinate vectors in a ``dim_ambient``-dimensional space.

    Generators are the rows of the (unique) reduced row echelon basis, so
    two subspaces are equal exactly when their generator lists are.
    """

    __slots__ = ("dim_ambient", "_rows", "_pivots")

    def __init__(self, dim_ambient: int, vectors: Iterable = ()):
        self.dim_ambient = dim_ambient
        vecs = []
        for v in vectors:
            d = v if isinstance(v, dict) else sparse(v)
            if d and max(d) >= dim_ambient:
                raise DimensionError("generator longer than the ambient dimension")
            if not isinstance(v, dict) and len(v) != dim_ambient:
                raise DimensionError(f"generator of length {len(v)} in a {dim_ambient}-space")
            vecs.append(d)
        self._rows, self._pivots = rref(vecs)

    @classmethod
    def full(cls, dim: int) -> "Subspace":
        return cls(dim, [{a: 1} for a in range(dim)])

    @classmethod
    def coordinate(cls, dim: int, indices: Iterable[int]) -> "Subspace":
        return cls(dim, [{a: 1} for a in indices])

    @property
    def dim(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> list[dict]:
        return self._rows

    @property
    def pivots(self) -> list[int]:
        return self._pivots

    @property
    def generators(self) -> list[tuple]:
        return [dense(r, self.dim_ambient) for r in self._rows]

    def residual(self, v: dict) -> dict:
        r = dict(v)
        for p, row in zip(self._pivots, self._rows):
            c = r.get(p)
            if c:
                axpy(r, -c, row)
        return r

    def contains(self, v) -> bool:
        d = v if isinstance(v, dict) else sparse(v)
        return not self.residual(d)

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(r) for r in other._rows)

    def image(self, op: EndoOp) -> "Subspace":
        return Subspace(self.dim_ambient, [op.apply(r) for r in self._rows])

    def is_invariant(self, op: EndoOp) -> bool:
        return all(self.contains(op.apply(r)) for r in self._rows)

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace(self.dim_ambient, self._rows + other._rows)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.dim_ambient == other.dim_ambient and self._rows == other._rows

    __hash__ = None

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.dim_ambient})"

    @staticmethod
    def span(dim_ambient: int, vectors: Sequence) -> "Subspace":
        return Subspace(dim_ambient, vectors)
