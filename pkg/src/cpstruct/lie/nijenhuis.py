"""Nijenhuis tensors of endomorphisms of a Lie algebra."""

from __future__ import annotations

from ..exact.linalg import axpy
from .algebra import LieAlgebraRep
from .operators import EndoOp

__all__ = ["nijenhuis_residual", "nijenhuis_failure"]


def nijenhuis_residual(alg: LieAlgebraRep, op: EndoOp, sign: int, x: dict, y: dict) -> dict:
    """``[Ax, Ay] + sign*[x, y] - A[Ax, y] - A[x, Ay]``.

    ``sign = +1`` gives the tensor of a product structure (A^2 = 1),
    ``sign = -1`` that of a complex structure (A^2 = -1).
    """
    ax, ay = op.apply(x), op.apply(y)
    out = alg.bracket(ax, ay)
    axpy(out, sign, alg.bracket(x, y))
    mixed = alg.bracket(ax, y)
    axpy(mixed, 1, alg.bracket(x, ay))
    axpy(out, -1, op.apply(mixed))
    return out


def nijenhuis_failure(alg: LieAlgebraRep, op: EndoOp, sign: int):
    """First basis pair ``(a, b, residual)`` with nonzero tensor, or ``None``.

    Pairs are scanned in lexicographic order with ``a < b``; the diagonal
    vanishes identically.
    """
    d = alg.dim
    units = [{a: 1} for a in range(d)]
    for a in range(d):
        for b in range(a + 1, d):
            res = nijenhuis_residual(alg, op, sign, units[a], units[b])
            if res:
                return a, b, res
    return None
