"""Matrix Lie algebras in basis coordinates."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from ..errors import ClosureError, ConsistencyError, DimensionError, DomainError, RankError
from ..exact.linalg import Echelon, axpy, dense, sparse
from ..exact.matn import MatN, commutator
from ..exact.scalars import GaussRational
from .operators import EndoOp
from .subspace import Subspace

__all__ = [
    "LieAlgebraRep",
    "build_algebra",
    "bracket_coords",
    "realify",
    "is_subalgebra",
    "ALGEBRA_NAMES",
]

ALGEBRA_NAMES = ("sl_real", "su_pq", "sl_complex_realified", "gl_real", "u_pq")


class LieAlgebraRep:
    """A real Lie algebra spanned by an ordered list of complex matrices.

    Structure constants are computed once, at construction, and kept
    sparse: ``bracket_basis(a, b)`` is ``{c: c_ab^c}``.  The dense tensor is
    available via :meth:`structure_constants`.
    """

    def __init__(self, name, n, basis, brackets, coordinator, labels=None, m=None):
        self.name = name
        self.n = n
        self.basis = tuple(basis)
        self.labels = tuple(labels) if labels is not None else None
        self.m = m
        self._brackets = brackets
        self._coordinator = coordinator
        # Multiplication by i on a realified algebra, else None.
        self.complex_structure: EndoOp | None = None
        self.real_form_dim: int | None = None

    @property
    def dim(self) -> int:
        return len(self.basis)

    def bracket_basis(self, a: int, b: int) -> dict:
        return self._brackets[a][b]

    def bracket(self, x: dict, y: dict) -> dict:
        """Bracket of two sparse coordinate vectors."""
        out: dict = {}
        br = self._brackets
        for a, xa in x.items():
            row = br[a]
            for b, yb in y.items():
                c = row[b]
                if c:
                    axpy(out, xa * yb, c)
        return out

    def ad(self, x: dict) -> EndoOp:
        return EndoOp(self.dim, [self.bracket(x, {b: 1}) for b in range(self.dim)])

    def ad_basis(self, a: int) -> EndoOp:
        return EndoOp(self.dim, list(self._brackets[a]))

    def coords(self, mat: MatN) -> tuple:
        """Coordinates of a matrix in the span; ``DimensionError`` if outside."""
        res, coeffs = self._coordinator.reduce(mat.real_vector())
        if res:
            raise DimensionError("matrix is not in the span of the basis")
        return dense(coeffs, self.dim)

    def element(self, x: Sequence) -> MatN:
        acc = MatN.zero(self.n)
        for a, c in enumerate(x):
            if c:
                acc = acc + self.basis[a] * GaussRational.coerce(c)
        return acc

    def structure_constants(self) -> tuple:
        """Dense ``dim x dim x dim`` tensor ``[a][b][c] = c_ab^c``."""
        d = self.dim
        return tuple(
            tuple(dense(self._brackets[a][b], d) for b in range(d)) for a in range(d)
        )

    def label_index(self, label: str) -> int:
        if self.labels is None:
            raise KeyError(label)
        return self.labels.index(label)

    def __repr__(self):
        return f"LieAlgebraRep({self.name!r}, n={self.n}, dim={self.dim})"


def _coordinator(basis: Sequence[MatN]) -> Echelon:
    ech = Echelon(track=True)
    for a, x in enumerate(basis):
        if not ech.add(x.real_vector()):
            raise RankError(f"basis element {a} is a real combination of the previous ones")
    return ech


def build_algebra(name: str, basis: Sequence[MatN], labels=None, m=None) -> LieAlgebraRep:
    """Verify independence and bracket closure, then cache structure constants."""
    basis = list(basis)
    if not basis:
        raise DimensionError("empty basis")
    n = basis[0].n
    if any(x.n != n for x in basis):
        raise DimensionError("basis matrices of different sizes")
    if labels is not None and len(labels) != len(basis):
        raise DimensionError("labels and basis differ in length")
    coord = _coordinator(basis)
    d = len(basis)
    brackets: list[list[dict]] = [[{} for _ in range(d)] for _ in range(d)]
    for a in range(d):
        for b in range(a + 1, d):
            c = commutator(basis[a], basis[b])
            if c.is_zero():
                continue
            res, coeffs = coord.reduce(c.real_vector())
            if res:
                raise ClosureError((a, b), MatN.from_real_vector(n, res))
            brackets[a][b] = coeffs
            brackets[b][a] = {k: -v for k, v in coeffs.items()}
    return LieAlgebraRep(name, n, basis, brackets, coord, labels=labels, m=m)


def bracket_coords(alg: LieAlgebraRep, x: Sequence, y: Sequence) -> tuple:
    if len(x) != alg.dim or len(y) != alg.dim:
        raise DimensionError(f"coordinate vectors must have length {alg.dim}")
    return dense(alg.bracket(sparse(x), sparse(y)), alg.dim)


_REALIFIED_NAME = {"sl_real": "sl_complex_realified", "su_pq": "sl_complex_realified"}


def realify(alg: LieAlgebraRep, name: str | None = None) -> LieAlgebraRep:
    """The real algebra spanned by ``X_1..X_d, iX_1..iX_d`` (in that order).

    The result carries ``complex_structure``, the operator ``X -> iX`` in
    the doubled coordinates.
    """
    i = GaussRational(0, 1)
    d = alg.dim
    basis = list(alg.basis) + [x * i for x in alg.basis]
    labels = None
    if alg.labels is not None:
        labels = list(alg.labels) + ["i" + lab for lab in alg.labels]
    try:
        out = build_algebra(name or _REALIFIED_NAME.get(alg.name, alg.name + "_realified"),
                            basis, labels=labels, m=alg.m)
    except RankError as exc:
        raise RankError(
            "doubled basis is dependent over R; the input already spans a complex algebra"
        ) from exc
    attach_complex_structure(out)
    return out


def attach_complex_structure(alg: LieAlgebraRep) -> LieAlgebraRep:
    """Set ``complex_structure`` on an algebra whose basis is ``X_1..X_d, iX_1..iX_d``."""
    i = GaussRational(0, 1)
    d, rem = divmod(alg.dim, 2)
    if rem or any(alg.basis[a] * i != alg.basis[a + d] for a in range(d)):
        raise DomainError("basis is not of the form X_1..X_d, iX_1..iX_d")
    one = Fraction(1)
    cols = [{a + d: one} for a in range(d)] + [{a: -one} for a in range(d)]
    alg.complex_structure = EndoOp(2 * d, cols)
    alg.real_form_dim = d
    return alg


def is_subalgebra(alg: LieAlgebraRep, s: Subspace) -> bool:
    return subalgebra_witness(alg, s) is None


def subalgebra_witness(alg: LieAlgebraRep, s: Subspace):
    """``None`` if closed, else ``(i, j, residual)`` for generators i, j."""
    if s.dim_ambient != alg.dim:
        raise DimensionError("subspace lives in a different space")
    rows = s.rows
    for i in range(len(rows)):
        for j in range(i + 1, len(rows)):
            res = s.residual(alg.bracket(rows[i], rows[j]))
            if res:
                return i, j, res
    return None


def check_real(values, what: str):
    for v in values:
        if isinstance(v, GaussRational) and v.im:
            raise ConsistencyError(f"{what} has a nonzero imaginary part")
