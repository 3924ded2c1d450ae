"""Dense square matrices over the Gaussian rationals."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from ..errors import DimensionError
from .scalars import GaussRational, format_scalar, parse_scalar

__all__ = ["MatN", "commutator", "trace", "conj_transpose", "elementary"]

_ZERO = GaussRational(0, 0)


class MatN:
    """Immutable ``n x n`` matrix of :class:`GaussRational` entries.

    Storage is dense; products skip zero entries, which is what keeps the
    very sparse generators of the constructions cheap to multiply.
    """

    __slots__ = ("n", "rows", "_nz", "_hash")

    def __init__(self, rows: Sequence[Sequence]):
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise DimensionError("MatN needs a nonempty square array")
        self.n = n
        self.rows = tuple(tuple(GaussRational.coerce(x) for x in r) for r in rows)
        self._nz = None
        self._hash = None

    @classmethod
    def _trusted(cls, rows) -> "MatN":
        out = cls.__new__(cls)
        out.n = len(rows)
        out.rows = tuple(tuple(r) for r in rows)
        out._nz = None
        out._hash = None
        return out

    @classmethod
    def _from_sparse(cls, n: int, acc: dict) -> "MatN":
        rows = [[_ZERO] * n for _ in range(n)]
        for (i, j), v in acc.items():
            if v:
                rows[i][j] = v
        return cls._trusted(rows)

    def _product_entries(self, other: "MatN", sign: int, acc: dict) -> dict:
        onz = other.nonzeros
        for i, row in enumerate(self.nonzeros):
            for k, a in row:
                for j, b in onz[k]:
                    p = a * b if sign > 0 else -(a * b)
                    key = (i, j)
                    acc[key] = acc[key] + p if key in acc else p
        return acc

    @classmethod
    def zero(cls, n: int) -> "MatN":
        return cls([[_ZERO] * n for _ in range(n)])

    @classmethod
    def identity(cls, n: int) -> "MatN":
        one = GaussRational(1)
        return cls([[one if i == j else _ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def from_entries(cls, n: int, entries: dict[tuple[int, int], object]) -> "MatN":
        """Build from a ``{(row, col): value}`` map with 0-based indices."""
        rows = [[_ZERO] * n for _ in range(n)]
        for (i, j), v in entries.items():
            rows[i][j] = rows[i][j] + GaussRational.coerce(v)
        return cls(rows)

    @property
    def nonzeros(self) -> tuple[tuple[tuple[int, GaussRational], ...], ...]:
        """Per row, the ``(col, value)`` pairs with nonzero value."""
        if self._nz is None:
            self._nz = tuple(tuple((j, x) for j, x in enumerate(r) if x) for r in self.rows)
        return self._nz

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def _check(self, other: "MatN"):
        if not isinstance(other, MatN):
            raise TypeError(f"expected MatN, got {type(other).__name__}")
        if other.n != self.n:
            raise DimensionError(f"size mismatch: {self.n} vs {other.n}")

    def __eq__(self, other):
        if not isinstance(other, MatN):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.rows)
        return self._hash

    def __add__(self, other):
        self._check(other)
        return MatN([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other):
        self._check(other)
        return MatN([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return MatN([[-a for a in r] for r in self.rows])

    def __mul__(self, c):
        if isinstance(c, MatN):
            return NotImplemented
        c = GaussRational.coerce(c)
        return MatN([[a * c for a in r] for r in self.rows])

    __rmul__ = __mul__

    def __matmul__(self, other):
        self._check(other)
        return MatN._from_sparse(self.n, self._product_entries(other, 1, {}))

    def trace(self) -> GaussRational:
        acc = GaussRational(0)
        for i in range(self.n):
            acc = acc + self.rows[i][i]
        return acc

    def trace_of_product(self, other: "MatN") -> GaussRational:
        """``tr(self @ other)`` without forming the product."""
        self._check(other)
        acc = GaussRational(0)
        orows = other.rows
        for i, row in enumerate(self.nonzeros):
            for k, a in row:
                b = orows[k][i]
                if b:
                    acc = acc + a * b
        return acc

    def transpose(self) -> "MatN":
        return MatN([list(c) for c in zip(*self.rows)])

    def conj_transpose(self) -> "MatN":
        return MatN([[x.conj() for x in c] for c in zip(*self.rows)])

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.rows)

    def is_real(self) -> bool:
        return all(x.im == 0 for r in self.rows for x in r)

    def real_vector(self) -> dict[int, Fraction]:
        """Sparse real coordinates: real parts at ``i*n+j``, imaginary at ``n*n + i*n+j``."""
        n = self.n
        out = {}
        for i, row in enumerate(self.nonzeros):
            for j, x in row:
                if x.re:
                    out[i * n + j] = x.re
                if x.im:
                    out[n * n + i * n + j] = x.im
        return out

    @classmethod
    def from_real_vector(cls, n: int, vec: dict[int, Fraction]) -> "MatN":
        entries: dict[tuple[int, int], GaussRational] = {}
        nn = n * n
        for idx, v in vec.items():
            if idx < nn:
                entries[divmod(idx, n)] = entries.get(divmod(idx, n), _ZERO) + GaussRational(v, 0)
            else:
                key = divmod(idx - nn, n)
                entries[key] = entries.get(key, _ZERO) + GaussRational(0, v)
        return cls.from_entries(n, entries)

    def to_strings(self) -> list[str]:
        """Row-major canonical scalar strings."""
        return [format_scalar(x) for r in self.rows for x in r]

    @classmethod
    def from_strings(cls, n: int, items: Iterable[str]) -> "MatN":
        items = [parse_scalar(s) for s in items]
        if len(items) != n * n:
            raise DimensionError(f"expected {n * n} entries, got {len(items)}")
        return cls([items[i * n:(i + 1) * n] for i in range(n)])

    def __repr__(self):
        body = "; ".join(" ".join(format_scalar(x) for x in r) for r in self.rows)
        return f"MatN([{body}])"


def elementary(n: int, row: int, col: int, coeff=1) -> MatN:
    """``coeff * E``, where E has a single 1 in (1-based) ``row``, ``col``."""
    if not (1 <= row <= n and 1 <= col <= n):
        raise DimensionError(f"index ({row}, {col}) outside a {n}x{n} matrix")
    return MatN.from_entries(n, {(row - 1, col - 1): coeff})


def commutator(a: MatN, b: MatN) -> MatN:
    """``ab - ba``."""
    a._check(b)
    acc = a._product_entries(b, 1, {})
    b._product_entries(a, -1, acc)
    return MatN._from_sparse(a.n, acc)


def trace(a: MatN) -> GaussRational:
    return a.trace()


def conj_transpose(a: MatN) -> MatN:
    return a.conj_transpose()
