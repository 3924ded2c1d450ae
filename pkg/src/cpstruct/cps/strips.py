"""Sub-structures obtained by deleting rows and columns.

``outer``: drop the first and last row/column (repeatedly, ``depth`` times).
What remains of the basis is the set of labels with ``j > depth``, which
is the basis of the construction for ``m - depth``.

``middle``: keep the elements whose middle row and column vanish off the
diagonal.  Deleting the middle row and column from them gives
gl(2m-2, R) (from sl) or u(m-1, m-1) (from su).

``cross``: the complement of ``middle``, the elements supported on the
middle row and column.  It is (P, J)-invariant but not a subalgebra.
"""

from __future__ import annotations

from ..errors import DomainError
from ..exact.linalg import kernel
from ..exact.matn import MatN
from ..lie.algebra import LieAlgebraRep, build_algebra
from ..lie.subspace import Subspace
from .basis import LabeledBasis, label, parse_label

__all__ = ["strip_subspace", "peel_outer", "outer_chain", "middle_block_algebra"]

MODES = ("outer", "middle", "cross")


def _outer_indices(basis: LabeledBasis, depth: int) -> list[int]:
    return [a for a, lab in enumerate(basis.labels) if parse_label(lab)[2] > depth]


def strip_subspace(basis: LabeledBasis, mode: str, depth: int = 1) -> Subspace:
    if mode not in MODES:
        raise DomainError(f"invalid strip mode {mode!r}; expected one of {MODES}")
    if basis.m < 2:
        raise DomainError("m must be >= 2")
    if mode == "outer":
        if not 1 <= depth <= basis.m - 1:
            raise DomainError(f"outer depth must lie in 1..{basis.m - 1}")
        return Subspace.coordinate(basis.dim, _outer_indices(basis, depth))
    n, mid = basis.n, basis.m - 1
    if mode == "middle":
        cells = [(mid, k) for k in range(n) if k != mid] + [(k, mid) for k in range(n) if k != mid]
    else:
        cells = [(r, c) for r in range(n) for c in range(n) if (r == mid) == (c == mid)]
    rows = []
    for r, c in cells:
        re = {a: x[r, c].re for a, x in enumerate(basis.matrices) if x[r, c].re}
        im = {a: x[r, c].im for a, x in enumerate(basis.matrices) if x[r, c].im}
        rows += [v for v in (re, im) if v]
    return Subspace(basis.dim, kernel(rows, basis.dim))


def _delete(x: MatN, drop: set[int]) -> MatN:
    keep = [i for i in range(x.n) if i not in drop]
    return MatN([[x.rows[i][j] for j in keep] for i in keep])


def peel_outer(basis: LabeledBasis, depth: int = 1) -> LabeledBasis:
    """The labels with ``j > depth``, outer rows/columns deleted and indices shifted."""
    if not 1 <= depth <= basis.m - 2:
        raise DomainError(f"peeling depth must lie in 1..{basis.m - 2}")
    n = basis.n
    drop = set(range(depth)) | set(range(n - depth, n))
    out = []
    for a in _outer_indices(basis, depth):
        lab, x = basis.entries[a]
        imag, fam, j, k = parse_label(lab)
        new = label(fam, j - depth, None if k is None else k - depth)
        out.append((("i" if imag else "") + new, _delete(x, drop)))
    return LabeledBasis(basis.m - depth, basis.algebra_kind, tuple(out))


def outer_chain(basis: LabeledBasis) -> list[Subspace]:
    """Nested outer-strip subspaces for depth ``1..m-2``, ending at the m = 2 piece."""
    return [strip_subspace(basis, "outer", depth) for depth in range(1, basis.m - 1)]


def middle_block_algebra(basis: LabeledBasis) -> LieAlgebraRep:
    """Restrict to the middle subspace and delete the middle row and column."""
    s = strip_subspace(basis, "middle")
    mid = basis.m - 1
    mats = []
    for row in s.rows:
        x = MatN.zero(basis.n)
        for a, c in row.items():
            x = x + basis.matrices[a] * c
        mats.append(_delete(x, {mid}))
    name = "gl_real" if basis.algebra_kind == "sl_real" else "u_pq"
    return build_algebra(name, mats, m=basis.m - 1)
