"""Linear endomorphisms of an algebra in basis coordinates."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from ..errors import DimensionError
from ..exact.linalg import axpy, dense, scaled, sparse

__all__ = ["EndoOp"]


class EndoOp:
    """A ``dim x dim`` exact matrix acting on coordinate vectors.

    Stored by columns: ``column(a)`` is the image of the ``a``-th basis
    vector as a sparse dict.  ``mat[i][j]`` is the coefficient of ``e_i``
    in ``op(e_j)``.  Entries are exact reals (Fraction, or Surd for the
    metric-adapted frames).
    """

    __slots__ = ("dim", "_cols")

    def __init__(self, dim: int, columns: Sequence[dict]):
        if len(columns) != dim:
            raise DimensionError(f"{len(columns)} columns for a {dim}-dimensional operator")
        self.dim = dim
        self._cols = tuple({k: v for k, v in c.items() if v} for c in columns)

    @classmethod
    def from_matrix(cls, rows: Sequence[Sequence]) -> "EndoOp":
        dim = len(rows)
        cols = [{i: rows[i][j] for i in range(dim) if rows[i][j]} for j in range(dim)]
        return cls(dim, cols)

    @classmethod
    def identity(cls, dim: int) -> "EndoOp":
        return cls(dim, [{a: Fraction(1)} for a in range(dim)])

    @classmethod
    def zero(cls, dim: int) -> "EndoOp":
        return cls(dim, [{} for _ in range(dim)])

    @property
    def mat(self) -> tuple[tuple, ...]:
        rows = [[Fraction(0)] * self.dim for _ in range(self.dim)]
        for j, col in enumerate(self._cols):
            for i, v in col.items():
                rows[i][j] = v
        return tuple(tuple(r) for r in rows)

    def column(self, a: int) -> dict:
        return self._cols[a]

    @property
    def columns(self) -> tuple[dict, ...]:
        return self._cols

    def apply(self, x: dict) -> dict:
        out: dict = {}
        for a, c in x.items():
            axpy(out, c, self._cols[a])
        return out

    def __call__(self, x: Sequence) -> tuple:
        if len(x) != self.dim:
            raise DimensionError(f"vector of length {len(x)} for a {self.dim}-dimensional operator")
        return dense(self.apply(sparse(x)), self.dim)

    def _check(self, other: "EndoOp"):
        if other.dim != self.dim:
            raise DimensionError(f"operator size mismatch: {self.dim} vs {other.dim}")

    def __matmul__(self, other: "EndoOp") -> "EndoOp":
        """Composition ``self o other``."""
        self._check(other)
        return EndoOp(self.dim, [self.apply(c) for c in other._cols])

    def __add__(self, other: "EndoOp") -> "EndoOp":
        self._check(other)
        return EndoOp(self.dim, [axpy(dict(a), 1, b) for a, b in zip(self._cols, other._cols)])

    def __sub__(self, other: "EndoOp") -> "EndoOp":
        self._check(other)
        return EndoOp(self.dim, [axpy(dict(a), -1, b) for a, b in zip(self._cols, other._cols)])

    def __neg__(self) -> "EndoOp":
        return EndoOp(self.dim, [scaled(c, -1) for c in self._cols])

    def __mul__(self, c) -> "EndoOp":
        if isinstance(c, EndoOp):
            return NotImplemented
        return EndoOp(self.dim, [scaled(col, c) for col in self._cols])

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, EndoOp):
            return NotImplemented
        return self.dim == other.dim and self._cols == other._cols

    __hash__ = None

    def transpose(self) -> "EndoOp":
        cols: list[dict] = [{} for _ in range(self.dim)]
        for j, col in enumerate(self._cols):
            for i, v in col.items():
                cols[i][j] = v
        return EndoOp(self.dim, cols)

    def trace(self):
        acc = Fraction(0)
        for a, col in enumerate(self._cols):
            v = col.get(a)
            if v:
                acc = acc + v
        return acc

    def is_zero(self) -> bool:
        return not any(self._cols)

    def first_nonzero_column(self) -> int | None:
        return next((a for a, c in enumerate(self._cols) if c), None)

    def restrict_block(self, indices: Sequence[int]) -> list[list]:
        """Dense matrix of the operator on ``span{e_i : i in indices}``.

        Only meaningful when that span is invariant.
        """
        pos = {a: k for k, a in enumerate(indices)}
        out = [[Fraction(0)] * len(indices) for _ in indices]
        for k, a in enumerate(indices):
            for i, v in self._cols[a].items():
                out[pos[i]][k] = v
        return out

    def __repr__(self):
        return f"EndoOp(dim={self.dim})"
