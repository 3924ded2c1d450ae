"""Symmetric bilinear forms on an algebra: trace form, Killing form, signature."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from ..errors import ConsistencyError, DimensionError
from ..exact.linalg import sparse
from .algebra import LieAlgebraRep
from .subspace import Subspace

__all__ = ["SymForm", "killing_form", "trace_form", "signature"]


class SymForm:
    """Gram matrix of a symmetric bilinear form in basis coordinates."""

    __slots__ = ("dim", "gram", "_rows")

    def __init__(self, gram: Sequence[Sequence]):
        dim = len(gram)
        if any(len(r) != dim for r in gram):
            raise DimensionError("Gram matrix must be square")
        self.dim = dim
        self.gram = tuple(tuple(r) for r in gram)
        for i in range(dim):
            for j in range(i):
                if self.gram[i][j] != self.gram[j][i]:
                    raise ValueError(f"Gram matrix not symmetric at ({i}, {j})")
        self._rows = tuple(sparse(r) for r in self.gram)

    def value(self, x: dict, y: dict):
        acc = Fraction(0)
        for i, xi in x.items():
            row = self._rows[i]
            for j, yj in y.items():
                g = row.get(j)
                if g:
                    acc = acc + xi * g * yj
        return acc

    def __call__(self, x: Sequence, y: Sequence):
        return self.value(sparse(x), sparse(y))

    def row(self, i: int) -> dict:
        return self._rows[i]

    def restricted(self, s: Subspace) -> list[list]:
        """Gram matrix of the form on the generators of ``s``."""
        return [[self.value(u, v) for v in s.rows] for u in s.rows]

    def is_zero(self) -> bool:
        return not any(self._rows)

    def __mul__(self, c) -> "SymForm":
        return SymForm([[c * g for g in r] for r in self.gram])

    __rmul__ = __mul__

    def __neg__(self) -> "SymForm":
        return self * -1

    def __eq__(self, other):
        if not isinstance(other, SymForm):
            return NotImplemented
        return self.gram == other.gram

    __hash__ = None

    def ratio_to(self, other: "SymForm"):
        """``c`` with ``self == c * other`` entrywise, or ``None``."""
        if other.dim != self.dim:
            raise DimensionError("forms on different spaces")
        c = None
        for r1, r2 in zip(self.gram, other.gram):
            for a, b in zip(r1, r2):
                if not b:
                    if a:
                        return None
                    continue
                q = a / b
                if c is None:
                    c = q
                elif q != c:
                    return None
        if c is None:
            return Fraction(0) if self.is_zero() else None
        return c

    def __repr__(self):
        return f"SymForm(dim={self.dim})"


def killing_form(alg: LieAlgebraRep) -> SymForm:
    """``B(e_a, e_b) = tr(ad e_a o ad e_b)`` from the structure constants."""
    d = alg.dim
    br = alg._brackets
    gram = [[Fraction(0)] * d for _ in range(d)]
    for a in range(d):
        ad_a = br[a]
        for b in range(a, d):
            ad_b = br[b]
            acc = Fraction(0)
            # (ad_a ad_b)(e_c) = sum_e c_bc^e [e_a, e_e]; take its e_c component
            for c in range(d):
                for e, v in ad_b[c].items():
                    w = ad_a[e].get(c)
                    if w:
                        acc += v * w
            gram[a][b] = gram[b][a] = acc
    return SymForm(gram)


def trace_form(alg: LieAlgebraRep, real_part_only: bool = False) -> SymForm:
    """``<X, Y> = tr(XY) / 2``, or its real part when ``real_part_only``."""
    d = alg.dim
    gram = [[Fraction(0)] * d for _ in range(d)]
    half = Fraction(1, 2)
    for a in range(d):
        for b in range(a, d):
            t = alg.basis[a].trace_of_product(alg.basis[b])
            if t.im and not real_part_only:
                raise ConsistencyError(
                    f"tr(X_{a} X_{b})/2 is not real on {alg.name}; use real_part_only"
                )
            gram[a][b] = gram[b][a] = t.re * half
    return SymForm(gram)


def signature(form: SymForm) -> tuple[int, int, int]:
    """Sylvester signature ``(pos, neg, null)`` by exact congruence.

    Symmetric Gaussian elimination: a nonzero diagonal pivot contributes
    its sign; when the remaining diagonal vanishes a nonzero off-diagonal
    entry is eliminated as a hyperbolic 2x2 block, contributing one
    positive and one negative direction.
    """
    a: dict[int, dict] = {i: dict(r) for i, r in enumerate(form._rows)}
    pos = neg = 0

    def remove(i):
        row = a.pop(i)
        for k in row:
            if k != i and k in a:
                a[k].pop(i, None)
        row.pop(i, None)
        return row

    def update(k, l, delta):
        t = a[k].get(l, 0) - delta
        if t:
            a[k][l] = t
        else:
            a[k].pop(l, None)

    while a:
        piv = next((i for i in sorted(a) if a[i].get(i)), None)
        if piv is not None:
            d = a[piv][piv]
            if d > 0:
                pos += 1
            else:
                neg += 1
            row = remove(piv)
            nbrs = sorted(row)
            for k in nbrs:
                rk = row[k] / d
                for l in nbrs:
                    update(k, l, rk * row[l])
            continue
        pair = next(((i, j) for i in sorted(a) for j in sorted(a[i]) if j != i), None)
        if pair is None:
            break
        i, j = pair
        b = a[i][j]
        pos += 1
        neg += 1
        ri = remove(i)
        ri.pop(j, None)
        rj = remove(j)
        nbrs = sorted(set(ri) | set(rj))
        for k in nbrs:
            for l in nbrs:
                delta = (ri.get(k, 0) * rj.get(l, 0) + rj.get(k, 0) * ri.get(l, 0)) / b
                if delta:
                    update(k, l, delta)
    return pos, neg, form.dim - pos - neg
