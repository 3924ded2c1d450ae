"""Exact row reduction over sparse vectors.

Vectors are ``dict[int, scalar]`` with no stored zeros.  Scalars are any
exact field elements (Fraction, GaussRational, Surd): the routines only use
``+ - * /`` and truthiness, so they run unchanged over each field.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from ..errors import DimensionError, RankError

__all__ = [
    "Echelon",
    "axpy",
    "scaled",
    "sparse",
    "dense",
    "rref",
    "kernel",
    "rank",
    "inverse",
    "determinant",
]

ZERO = Fraction(0)
ONE = Fraction(1)


def sparse(vec: Sequence) -> dict:
    return {i: x for i, x in enumerate(vec) if x}


def dense(vec: dict, n: int) -> tuple:
    return tuple(vec.get(i, ZERO) for i in range(n))


def axpy(y: dict, c, x: dict) -> dict:
    """In place ``y += c*x``; returns ``y``."""
    if not c:
        return y
    for k, v in x.items():
        t = y.get(k)
        t = c * v if t is None else t + c * v
        if t:
            y[k] = t
        else:
            y.pop(k, None)
    return y


def scaled(x: dict, c) -> dict:
    if not c:
        return {}
    out = {}
    for k, v in x.items():
        t = c * v
        if t:
            out[k] = t
    return out


class Echelon:
    """Incrementally grown echelon basis of a span.

    Each stored row has a leading 1 at its pivot and zeros at the pivots
    of all rows inserted before it, so a vector is reduced by one pass in
    insertion order.  When ``track`` is set every row also remembers its
    expression in terms of the vectors passed to :meth:`add`, which turns
    reduction into exact coordinate solving.
    """

    def __init__(self, track: bool = False):
        self.track = track
        self.rows: list[tuple[int, dict, dict | None]] = []
        self.count = 0

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def pivots(self) -> list[int]:
        return [p for p, _, _ in self.rows]

    def reduce(self, v: dict) -> tuple[dict, dict]:
        """Return ``(residual, coeffs)`` with ``v = residual + sum coeffs[t]*input_t``.

        ``coeffs`` is only meaningful when tracking; the residual is zero
        exactly when ``v`` lies in the span.
        """
        r = dict(v)
        coeffs: dict = {}
        for p, row, combo in self.rows:
            c = r.get(p)
            if c:
                axpy(r, -c, row)
                if combo is not None:
                    axpy(coeffs, c, combo)
        return r, coeffs

    def contains(self, v: dict) -> bool:
        return not self.reduce(v)[0]

    def add(self, v: dict) -> bool:
        """Insert ``v``; return whether it was independent of the span."""
        tag = self.count
        self.count += 1
        r, coeffs = self.reduce(v)
        if not r:
            return False
        p = min(r)
        inv = ONE / r[p]
        row = scaled(r, inv)
        combo = None
        if self.track:
            combo = scaled(coeffs, -inv)
            combo[tag] = inv
        self.rows.append((p, row, combo))
        return True


def rref(vectors: Iterable[dict]) -> tuple[list[dict], list[int]]:
    """Reduced row echelon basis of the span, rows sorted by pivot."""
    ech = Echelon()
    for v in vectors:
        ech.add(v)
    rows = [(p, dict(row)) for p, row, _ in ech.rows]
    for i, (p, row) in enumerate(rows):
        for j, (_, other) in enumerate(rows):
            if j != i:
                c = other.get(p)
                if c:
                    axpy(other, -c, row)
    rows.sort(key=lambda t: t[0])
    return [row for _, row in rows], [p for p, _ in rows]


def rank(vectors: Iterable[dict]) -> int:
    ech = Echelon()
    for v in vectors:
        ech.add(v)
    return ech.rank


def kernel(rows: Iterable[dict], ncols: int) -> list[dict]:
    """Basis of ``{x : A x = 0}`` where ``rows`` are the rows of ``A``."""
    red, pivots = rref(rows)
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        x = {f: Fraction(1)}
        for p, row in zip(pivots, red):
            c = row.get(f)
            if c:
                x[p] = -c
        basis.append(x)
    return basis


def _dense_copy(mat: Sequence[Sequence]) -> list[list]:
    n = len(mat)
    if any(len(r) != n for r in mat):
        raise DimensionError("square matrix required")
    return [list(r) for r in mat]


def inverse(mat: Sequence[Sequence]) -> list[list]:
    """Gauss-Jordan inverse of a square matrix; ``RankError`` if singular."""
    a = _dense_copy(mat)
    n = len(a)
    inv = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c]), None)
        if piv is None:
            raise RankError("matrix is singular")
        a[c], a[piv] = a[piv], a[c]
        inv[c], inv[piv] = inv[piv], inv[c]
        s = ONE / a[c][c]
        a[c] = [x * s for x in a[c]]
        inv[c] = [x * s for x in inv[c]]
        for r in range(n):
            if r != c and a[r][c]:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
                inv[r] = [x - f * y for x, y in zip(inv[r], inv[c])]
    return inv


def determinant(mat: Sequence[Sequence]):
    a = _dense_copy(mat)
    n = len(a)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det = det * a[c][c]
        for r in range(c + 1, n):
            if a[r][c]:
                f = a[r][c] * (ONE / a[c][c])
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return det
